#include "uir/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "uir/error.hpp"

namespace uir::metrics {

namespace {

std::size_t intersection_size(const std::set<std::string>& a,
                              const std::set<std::string>& b) {
  std::size_t n = 0;
  for (const auto& x : a) n += b.count(x);
  return n;
}

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::set<std::string> parse_doc_list(const std::string& s) {
  std::set<std::string> out;
  std::string field;
  std::istringstream in(s);
  while (std::getline(in, field, ',')) {
    field = trim(field);
    if (!field.empty()) out.insert(field);
  }
  return out;
}

}  // namespace

Metrics prf(const Judgment& judgment, FalloutDenominator denom,
            std::size_t collection_size) {
  Metrics m;
  const auto& a = judgment.relevant;
  const auto& b = judgment.retrieved;
  std::size_t hit = intersection_size(a, b);

  if (!a.empty())
    m.recall = static_cast<double>(hit) / static_cast<double>(a.size());
  if (!b.empty())
    m.precision = static_cast<double>(hit) / static_cast<double>(b.size());

  std::size_t spurious = b.size() - hit;  // retrieved but not relevant
  if (denom == FalloutDenominator::AsPrintedA) {
    if (!a.empty())
      m.fallout =
          static_cast<double>(spurious) / static_cast<double>(a.size());
  } else {
    if (collection_size > a.size())
      m.fallout = static_cast<double>(spurious) /
                  static_cast<double>(collection_size - a.size());
  }

  if (m.recall && m.precision)
    m.harmonic_mean = harmonic(*m.recall, *m.precision);
  return m;
}

double harmonic(double recall, double precision) {
  if (recall <= 0.0 || precision <= 0.0) return 0.0;
  return 2.0 / (1.0 / recall + 1.0 / precision);
}

double integrated_uncertainty(double p, double mu, IntegrationMode mode) {
  if (mode == IntegrationMode::Product) return p * mu;
  return std::sqrt((p * p + mu * mu) / 2.0);
}

std::vector<Judgment> load_judgments(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open judgment file: " + path);
  std::vector<Judgment> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    if (trim(line).empty()) continue;

    auto colon = line.find(':');
    auto rel = line.find("relevant");
    auto ret = line.find("retrieved");
    if (colon == std::string::npos || rel == std::string::npos ||
        ret == std::string::npos || rel > ret)
      throw ParseError(path, lineno,
                       "expected 'id: relevant d,... retrieved d,...'");

    Judgment j;
    j.query_id = trim(line.substr(0, colon));
    j.relevant = parse_doc_list(line.substr(rel + 8, ret - rel - 8));
    j.retrieved = parse_doc_list(line.substr(ret + 9));
    out.push_back(std::move(j));
  }
  return out;
}

std::string percent_rounded(double fraction) {
  double pct = std::round(fraction * 1000.0) / 10.0;
  std::ostringstream out;
  out.setf(std::ios::fixed);
  out.precision(1);
  out << pct;
  return out.str();
}

std::string percent_truncated(double fraction) {
  double pct = std::floor(fraction * 1000.0) / 10.0;
  std::ostringstream out;
  out.setf(std::ios::fixed);
  out.precision(1);
  out << pct;
  return out.str();
}

}  // namespace uir::metrics
