#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "uir/ds.hpp"
#include "uir/error.hpp"

using namespace uir;
using ds::BodyOfEvidence;
using ds::Frame;

namespace {

const std::string kData = UIR_DATA_DIR;

/// Brute-force combination oracle over label-set representations,
/// independent of the bitmask implementation.
using SetMass = std::map<std::set<std::string>, double>;

SetMass to_sets(const BodyOfEvidence& boe) {
  SetMass out;
  for (const auto& [mask, m] : boe.masses()) {
    auto labels = boe.frame().labels_of(mask);
    out[std::set<std::string>(labels.begin(), labels.end())] = m;
  }
  return out;
}

SetMass oracle_combine(const SetMass& a, const SetMass& b) {
  SetMass raw;
  double conflict = 0.0;
  for (const auto& [fa, ma] : a)
    for (const auto& [fb, mb] : b) {
      std::set<std::string> meet;
      for (const auto& x : fa)
        if (fb.count(x)) meet.insert(x);
      if (meet.empty())
        conflict += ma * mb;
      else
        raw[meet] += ma * mb;
    }
  for (auto& [_, m] : raw) m /= (1.0 - conflict);
  return raw;
}

BodyOfEvidence random_boe(std::mt19937& rng, const Frame& frame) {
  std::uniform_int_distribution<std::uint64_t> subset(1, frame.full_mask());
  std::uniform_int_distribution<int> count(1, 4);
  std::uniform_real_distribution<double> mass(0.05, 1.0);
  std::map<std::uint64_t, double> masses;
  int n = count(rng);
  for (int i = 0; i < n; ++i) masses[subset(rng)] += mass(rng);
  masses[frame.full_mask()] += 0.1;  // keep conflict away from 1
  double total = 0.0;
  for (const auto& [_, m] : masses) total += m;
  for (auto& [_, m] : masses) m /= total;
  return BodyOfEvidence::make(frame, masses);
}

bool close_sets(const SetMass& a, const SetMass& b, double tol = 1e-9) {
  if (a.size() != b.size()) return false;
  for (const auto& [k, v] : a) {
    auto it = b.find(k);
    if (it == b.end() || std::abs(it->second - v) > tol) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("body-of-evidence validation names the violation") {
  Frame frame({"t", "w", "b", "a", "g"});
  std::map<std::uint64_t, double> ok{
      {frame.mask_of({"t", "w"}), 0.40},
      {frame.mask_of({"a"}), 0.30},
      {frame.full_mask(), 0.30}};
  CHECK_NOTHROW(BodyOfEvidence::make(frame, ok));

  std::map<std::uint64_t, double> empty_focal{{0, 0.5},
                                              {frame.full_mask(), 0.5}};
  CHECK_THROWS_WITH_AS(BodyOfEvidence::make(frame, empty_focal),
                       doctest::Contains("empty focal set"), Error);

  std::map<std::uint64_t, double> short_sum{{frame.mask_of({"a"}), 0.9}};
  CHECK_THROWS_WITH_AS(BodyOfEvidence::make(frame, short_sum),
                       doctest::Contains("sum"), Error);

  std::map<std::uint64_t, double> negative{{frame.mask_of({"a"}), -0.2},
                                           {frame.full_mask(), 1.2}};
  CHECK_THROWS_AS(BodyOfEvidence::make(frame, negative), Error);
}

TEST_CASE("belief and plausibility on the worked leaf evidence") {
  auto o4 = ds::load_boe(kData + "/ds/o4.boe");
  CHECK(ds::belief(o4, {"t", "w", "a"}) == doctest::Approx(0.70));
  CHECK(ds::belief(o4, std::uint64_t{0}) == doctest::Approx(0.0));
  CHECK(ds::belief(o4, o4.frame().full_mask()) == doctest::Approx(1.0));

  CHECK(ds::plausibility(o4, {"a"}) == doctest::Approx(0.60));
  CHECK(ds::plausibility(o4, o4.frame().full_mask()) == doctest::Approx(1.0));

  auto vac = BodyOfEvidence::vacuous(o4.frame());
  CHECK(ds::belief(vac, {"t"}) == doctest::Approx(0.0));
  CHECK(ds::plausibility(vac, {"t"}) == doctest::Approx(1.0));

  CHECK_THROWS_AS(ds::belief(o4, {"zebra"}), Error);
}

TEST_CASE("worked document retrieval: conflict and normalized masses") {
  auto e1 = ds::load_boe(kData + "/ds/e1.boe");
  auto e2 = ds::load_boe(kData + "/ds/e2.boe");
  auto step = ds::combine(e1, e2);
  CHECK(step.conflict == doctest::Approx(0.57).epsilon(1e-9));

  auto ranked = ds::retrieve_ds({e1, e2});
  REQUIRE(ranked.ranking.size() == 4);
  CHECK(ranked.ranking[0].label == "d1");
  CHECK(ranked.ranking[0].mass == doctest::Approx(0.512).epsilon(0.002));
  CHECK(ranked.ranking[1].label == "d2");
  CHECK(ranked.ranking[1].mass == doctest::Approx(0.233).epsilon(0.002));
  CHECK(ranked.ranking[2].label == "d3");
  CHECK(ranked.ranking[2].mass == doctest::Approx(0.186).epsilon(0.002));
  CHECK(ranked.ranking[3].label == "d4");
  CHECK(ranked.ranking[3].mass == doctest::Approx(0.023).epsilon(0.002));
  CHECK(ranked.ignorance == doctest::Approx(0.046).epsilon(0.002));
}

TEST_CASE("vacuous evidence is the neutral element") {
  auto e1 = ds::load_boe(kData + "/ds/e1.boe");
  auto vac = BodyOfEvidence::vacuous(e1.frame());
  auto combined = ds::combine(e1, vac);
  CHECK(combined.conflict == doctest::Approx(0.0));
  CHECK(close_sets(to_sets(combined.evidence), to_sets(e1)));

  auto single = ds::retrieve_ds({e1});
  auto with_vac = ds::retrieve_ds({e1, vac});
  for (std::size_t i = 0; i < single.ranking.size(); ++i) {
    CHECK(single.ranking[i].label == with_vac.ranking[i].label);
    CHECK(single.ranking[i].mass ==
          doctest::Approx(with_vac.ranking[i].mass));
  }
}

TEST_CASE("total conflict is an error") {
  Frame frame({"x", "y"});
  auto ex = BodyOfEvidence::make(frame, {{frame.mask_of({"x"}), 1.0}});
  auto ey = BodyOfEvidence::make(frame, {{frame.mask_of({"y"}), 1.0}});
  CHECK_THROWS_AS(ds::combine(ex, ey), Error);

  Frame other({"x", "y", "z"});
  auto oz = BodyOfEvidence::make(other, {{other.mask_of({"z"}), 1.0}});
  CHECK_THROWS_AS(ds::combine(ex, oz), Error);
}

TEST_CASE("evidence from counts") {
  Frame frame({"d1", "d2", "d3", "d4"});
  auto e = ds::evidence_from_counts(frame, {4, 0, 3, 1}, 0.2);
  CHECK(e.mass(frame.mask_of({"d1"})) == doctest::Approx(0.4));
  CHECK(e.mass(frame.mask_of({"d2"})) == doctest::Approx(0.0));
  CHECK(e.mass(frame.mask_of({"d3"})) == doctest::Approx(0.3));
  CHECK(e.mass(frame.mask_of({"d4"})) == doctest::Approx(0.1));
  CHECK(e.ignorance() == doctest::Approx(0.2));

  Frame two({"a", "b"});
  auto uniform = ds::evidence_from_counts(two, {1, 1}, 0.0);
  CHECK(uniform.mass(two.mask_of({"a"})) == doctest::Approx(0.5));
  CHECK(uniform.ignorance() == doctest::Approx(0.0));

  CHECK_THROWS_AS(ds::evidence_from_counts(two, {0, 0}, 0.1), Error);

  // masses plus ignorance always total exactly one
  std::mt19937 rng(23);
  std::uniform_int_distribution<std::size_t> c(0, 9);
  std::uniform_real_distribution<double> ig(0.0, 0.99);
  for (int round = 0; round < 100; ++round) {
    std::vector<std::size_t> counts{c(rng), c(rng), c(rng) + 1, c(rng)};
    auto boe = ds::evidence_from_counts(frame, counts, ig(rng));
    double total = 0.0;
    for (const auto& [_, m] : boe.masses()) total += m;
    CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("document-tree aggregation reproduces the worked tables") {
  auto tree = ds::load_doc_tree(kData + "/ds/doc.tree");

  const ds::DocNode* o2 = ds::find_node(tree, "o2");
  REQUIRE(o2 != nullptr);
  auto agg2 = ds::aggregate_node(*o2);
  const Frame& f = agg2.frame();
  CHECK(agg2.mass(f.mask_of({"w"})) == doctest::Approx(0.352).epsilon(0.01));
  CHECK(agg2.mass(f.mask_of({"a"})) == doctest::Approx(0.282).epsilon(0.01));
  CHECK(agg2.mass(f.mask_of({"b", "a"})) ==
        doctest::Approx(0.216).epsilon(0.01));
  CHECK(agg2.mass(f.mask_of({"t", "w"})) ==
        doctest::Approx(0.086).epsilon(0.01));
  CHECK(agg2.ignorance() == doctest::Approx(0.064).epsilon(0.01));

  const ds::DocNode* o3 = ds::find_node(tree, "o3");
  REQUIRE(o3 != nullptr);
  auto agg3 = ds::aggregate_node(*o3);
  CHECK(agg3.mass(f.mask_of({"a"})) > agg3.mass(f.mask_of({"g"})));
  CHECK(agg3.mass(f.mask_of({"a"})) == doctest::Approx(0.42).epsilon(0.02));
  CHECK(agg3.mass(f.mask_of({"g"})) == doctest::Approx(0.31).epsilon(0.02));

  // leaf aggregation is the identity
  const ds::DocNode* o4 = ds::find_node(tree, "o4");
  REQUIRE(o4 != nullptr);
  CHECK(close_sets(to_sets(ds::aggregate_node(*o4)), to_sets(*o4->evidence)));
}

TEST_CASE("query belief ranks by Bel with Pl as the upper bound") {
  auto o4 = ds::load_boe(kData + "/ds/o4.boe");
  auto interval = ds::query_belief(o4, {"t", "w"});
  CHECK(interval.bel == doctest::Approx(0.40));
  CHECK(interval.pl >= interval.bel);

  auto full = ds::query_belief(
      o4, {"t", "w", "b", "a", "g"});
  CHECK(full.bel == doctest::Approx(1.0));

  CHECK_THROWS_AS(ds::query_belief(o4, {}), Error);

  // disjoint query: zero belief, plausibility from the ignorance only
  auto o7 = ds::load_boe(kData + "/ds/o7.boe");
  auto disjoint = ds::query_belief(o7, {"w"});
  CHECK(disjoint.bel == doctest::Approx(0.0));
  CHECK(disjoint.pl == doctest::Approx(0.25));
}

TEST_CASE("combine agrees with the set oracle; commutative, associative") {
  std::mt19937 rng(31);
  Frame frame({"a", "b", "c", "d", "e"});
  for (int round = 0; round < 200; ++round) {
    auto e1 = random_boe(rng, frame);
    auto e2 = random_boe(rng, frame);
    auto e3 = random_boe(rng, frame);

    auto c12 = ds::combine(e1, e2).evidence;
    CHECK(close_sets(to_sets(c12), oracle_combine(to_sets(e1), to_sets(e2))));

    auto c21 = ds::combine(e2, e1).evidence;
    CHECK(close_sets(to_sets(c12), to_sets(c21)));

    auto left = ds::combine(c12, e3).evidence;
    auto right = ds::combine(e1, ds::combine(e2, e3).evidence).evidence;
    CHECK(close_sets(to_sets(left), to_sets(right), 1e-9));

    double total = 0.0;
    for (const auto& [_, m] : left.masses()) total += m;
    CHECK(total == doctest::Approx(1.0).epsilon(1e-9));
  }
}

TEST_CASE("Bel <= Pl exhaustively on small frames") {
  std::mt19937 rng(37);
  Frame frame({"a", "b", "c", "d", "e"});
  for (int round = 0; round < 50; ++round) {
    auto boe = random_boe(rng, frame);
    for (std::uint64_t subset = 0; subset <= frame.full_mask(); ++subset) {
      double bel = ds::belief(boe, subset);
      double pl = ds::plausibility(boe, subset);
      CHECK(bel >= -1e-12);
      CHECK(bel <= pl + 1e-12);
      CHECK(pl <= 1.0 + 1e-12);
      // sub-additivity: Bel(A) + Bel(~A) <= 1
      double co = ds::belief(boe, frame.full_mask() & ~subset);
      CHECK(bel + co <= 1.0 + 1e-9);
    }
  }
}

TEST_CASE("combined ignorance shrinks when evidences are informative") {
  auto e1 = ds::load_boe(kData + "/ds/e1.boe");
  auto e2 = ds::load_boe(kData + "/ds/e2.boe");
  auto combined = ds::combine(e1, e2).evidence;
  CHECK(combined.ignorance() <=
        std::min(e1.ignorance(), e2.ignorance()) + 1e-12);
}
