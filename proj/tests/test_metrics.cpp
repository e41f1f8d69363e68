#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "uir/error.hpp"
#include "uir/metrics.hpp"

using namespace uir;
using metrics::FalloutDenominator;
using metrics::IntegrationMode;
using metrics::Judgment;

namespace {
const std::string kData = UIR_DATA_DIR;
}

TEST_CASE("precision and recall on the worked judgment") {
  Judgment j{"q2", {"d03", "d04", "d05"}, {"d03", "d05", "d09"}};
  auto m = metrics::prf(j);
  REQUIRE(m.recall);
  REQUIRE(m.precision);
  CHECK(*m.recall == doctest::Approx(2.0 / 3.0));
  CHECK(*m.precision == doctest::Approx(2.0 / 3.0));
  CHECK(metrics::percent_rounded(*m.recall) == "66.7");
}

TEST_CASE("undefined measures stay undefined rather than zero") {
  Judgment no_retrieved{"q", {"d1"}, {}};
  auto m = metrics::prf(no_retrieved);
  CHECK(!m.precision.has_value());
  REQUIRE(m.recall);
  CHECK(*m.recall == doctest::Approx(0.0));

  Judgment no_relevant{"q", {}, {"d1"}};
  auto m2 = metrics::prf(no_relevant);
  CHECK(!m2.recall.has_value());
  REQUIRE(m2.precision);

  Judgment equal{"q", {"d1", "d2"}, {"d1", "d2"}};
  auto m3 = metrics::prf(equal);
  CHECK(*m3.recall == doctest::Approx(1.0));
  CHECK(*m3.precision == doctest::Approx(1.0));
}

TEST_CASE("fallout denominator is selectable") {
  Judgment j{"q", {"d1"}, {"d1", "d2", "d3"}};
  auto printed = metrics::prf(j, FalloutDenominator::AsPrintedA);
  REQUIRE(printed.fallout);
  CHECK(*printed.fallout == doctest::Approx(2.0 / 1.0));

  auto standard = metrics::prf(j, FalloutDenominator::StandardNotA, 12);
  REQUIRE(standard.fallout);
  CHECK(*standard.fallout == doctest::Approx(2.0 / 11.0));
}

TEST_CASE("harmonic mean of precision and recall") {
  CHECK(metrics::harmonic(1.0, 1.0) == doctest::Approx(1.0));
  CHECK(metrics::harmonic(0.0, 0.9) == doctest::Approx(0.0));
  CHECK(metrics::harmonic(0.5, 1.0) == doctest::Approx(2.0 / 3.0));

  std::mt19937 rng(41);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 200; ++i) {
    double r = u(rng), p = u(rng);
    double h = metrics::harmonic(r, p);
    CHECK(h >= 0.0);
    CHECK(h <= std::max(r, p) + 1e-12);
    CHECK(metrics::harmonic(r, r) == doctest::Approx(r));
  }
}

TEST_CASE("growing the retrieved set never lowers recall") {
  Judgment j{"q", {"d1", "d2", "d3"}, {}};
  double last = 0.0;
  for (const char* doc : {"d9", "d1", "d8", "d2", "d7", "d3"}) {
    j.retrieved.insert(doc);
    auto m = metrics::prf(j);
    REQUIRE(m.recall);
    CHECK(*m.recall >= last - 1e-12);
    last = *m.recall;
  }
  CHECK(last == doctest::Approx(1.0));
}

TEST_CASE("integrated uncertainty: product and rms modes") {
  CHECK(metrics::integrated_uncertainty(1, 1, IntegrationMode::Product) ==
        doctest::Approx(1.0));
  CHECK(metrics::integrated_uncertainty(1, 1, IntegrationMode::Rms) ==
        doctest::Approx(1.0));
  CHECK(metrics::integrated_uncertainty(1, 0, IntegrationMode::Product) ==
        doctest::Approx(0.0));
  CHECK(metrics::integrated_uncertainty(1, 0, IntegrationMode::Rms) ==
        doctest::Approx(0.7071).epsilon(1e-4));
  CHECK(metrics::integrated_uncertainty(0.6, 0.8, IntegrationMode::Product) ==
        doctest::Approx(0.48));
  CHECK(metrics::integrated_uncertainty(0.6, 0.8, IntegrationMode::Rms) ==
        doctest::Approx(0.7071).epsilon(1e-4));

  std::mt19937 rng(43);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 200; ++i) {
    double p = u(rng), mu = u(rng);
    double rms = metrics::integrated_uncertainty(p, mu, IntegrationMode::Rms);
    CHECK(rms >= 0.0);
    CHECK(rms <= 1.0 + 1e-12);
    double prod =
        metrics::integrated_uncertainty(p, mu, IntegrationMode::Product);
    CHECK(prod <= std::min(p, mu) + 1e-12);
  }
}

TEST_CASE("bundled judgment file reproduces the results table") {
  auto judgments =
      metrics::load_judgments(kData + "/judgments/table_6_3.judgments");
  REQUIRE(judgments.size() == 5);

  std::vector<std::string> expect_recall{"100.0", "66.7", "100.0", "100.0",
                                         "100.0"};
  std::vector<std::string> expect_precision{"100.0", "66.7", "66.7", "100.0",
                                            "100.0"};
  double recall_sum = 0.0, precision_sum = 0.0;
  for (std::size_t i = 0; i < judgments.size(); ++i) {
    auto m = metrics::prf(judgments[i]);
    REQUIRE(m.recall);
    REQUIRE(m.precision);
    CHECK(metrics::percent_rounded(*m.recall) == expect_recall[i]);
    CHECK(metrics::percent_rounded(*m.precision) == expect_precision[i]);
    recall_sum += *m.recall;
    precision_sum += *m.precision;
  }
  CHECK(recall_sum / 5.0 == doctest::Approx(14.0 / 15.0));
  CHECK(precision_sum / 5.0 == doctest::Approx(13.0 / 15.0));
  CHECK(metrics::percent_truncated(recall_sum / 5.0) == "93.3");
  CHECK(metrics::percent_truncated(precision_sum / 5.0) == "86.6");
}
