#ifndef UIR_METRICS_HPP
#define UIR_METRICS_HPP

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace uir::metrics {

struct Judgment {
  std::string query_id;
  std::set<std::string> relevant;   // A
  std::set<std::string> retrieved;  // B
};

/// Denominator for fallout: |A| as printed in the source formula, or the
/// standard non-relevant count |collection \ A|.
enum class FalloutDenominator { AsPrintedA, StandardNotA };

/// Undefined measures stay empty rather than collapsing to zero.
struct Metrics {
  std::optional<double> recall;
  std::optional<double> precision;
  std::optional<double> fallout;
  std::optional<double> harmonic_mean;
};

Metrics prf(const Judgment& judgment,
            FalloutDenominator denom = FalloutDenominator::AsPrintedA,
            std::size_t collection_size = 0);

/// 2 / (1/r + 1/p); zero when either input is zero.
double harmonic(double recall, double precision);

enum class IntegrationMode { Product, Rms };

/// Combined probability/possibility measure: P*mu, or sqrt((P^2+mu^2)/2).
double integrated_uncertainty(double p, double mu, IntegrationMode mode);

/// Lines "query_id: relevant d01,d03 retrieved d01,d09".
std::vector<Judgment> load_judgments(const std::string& path);

/// Percent formatting used by the results table: per-query values are
/// rounded to one decimal, averages truncated toward zero.
std::string percent_rounded(double fraction);
std::string percent_truncated(double fraction);

}  // namespace uir::metrics

#endif  // UIR_METRICS_HPP
