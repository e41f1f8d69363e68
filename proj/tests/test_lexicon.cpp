#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <random>

#include "uir/error.hpp"
#include "uir/lexicon.hpp"

using namespace uir;
using lexicon::FuzzyThesaurus;

namespace {

const std::string kData = UIR_DATA_DIR;

std::string write_temp(const std::string& name, const std::string& body) {
  std::string path = "/tmp/uir_lex_" + name;
  std::ofstream out(path);
  out << body;
  return path;
}

/// Path-enumeration oracle for the max-min closure on small graphs.
double best_path_degree(const FuzzyThesaurus& th,
                        const std::vector<std::string>& terms,
                        const std::string& from, const std::string& to) {
  struct State {
    std::string node;
    double strength;
    std::vector<std::string> visited;
  };
  double best = th.degree(from, to);
  std::vector<State> frontier{{from, 1.0, {from}}};
  while (!frontier.empty()) {
    State s = frontier.back();
    frontier.pop_back();
    for (const auto& next : terms) {
      if (std::find(s.visited.begin(), s.visited.end(), next) !=
          s.visited.end())
        continue;
      double d = th.degree(s.node, next);
      if (d <= 0.0) continue;
      double strength = std::min(s.strength, d);
      if (next == to) best = std::max(best, strength);
      State t = s;
      t.node = next;
      t.strength = strength;
      t.visited.push_back(next);
      frontier.push_back(std::move(t));
    }
  }
  return best;
}

}  // namespace

TEST_CASE("bundled mini-lexicon loads and serves senses") {
  auto stop = text::load_stopwords(kData + "/stopwords.txt");
  auto lex = lexicon::load_lexicon(kData + "/lexicon/mini_lexicon.txt", stop);

  const auto& board = lex.senses("board", lexicon::Pos::Noun);
  REQUIRE(board.size() == 9);
  CHECK(board[0].gloss.count("committee") == 1);

  CHECK(lex.senses("selection", lexicon::Pos::Noun).size() == 5);
  CHECK(lex.senses("domestic", lexicon::Pos::Adj).size() == 5);
  CHECK(lex.senses("wiring", lexicon::Pos::Noun).size() == 2);
  CHECK(lex.senses("zzzz", lexicon::Pos::Noun).empty());
}

TEST_CASE("lexicon round-trips through save and reload") {
  auto stop = text::load_stopwords(kData + "/stopwords.txt");
  auto lex = lexicon::load_lexicon(kData + "/lexicon/mini_lexicon.txt", stop);
  std::string path = "/tmp/uir_lex_roundtrip.txt";
  lexicon::save_lexicon(lex, path);
  auto again = lexicon::load_lexicon(path, stop);

  REQUIRE(again.size() == lex.size());
  for (const auto& [key, senses] : lex.entries()) {
    const auto& reloaded = again.senses(key.first, key.second);
    REQUIRE(reloaded.size() == senses.size());
    for (std::size_t i = 0; i < senses.size(); ++i) {
      CHECK(reloaded[i].synset == senses[i].synset);
      CHECK(reloaded[i].gloss == senses[i].gloss);
      CHECK(reloaded[i].hypernym_words == senses[i].hypernym_words);
      CHECK(reloaded[i].hyponym_words == senses[i].hyponym_words);
    }
  }
  std::remove(path.c_str());
}

TEST_CASE("lexicon format errors carry line numbers") {
  auto stop = text::Stoplist{};
  auto path = write_temp("broken.txt",
                         "sense board noun 1\n"
                         "syn board\n"
                         "gloss some words\n");  // missing end
  CHECK_THROWS_AS(lexicon::load_lexicon(path, stop), ParseError);

  auto empty = write_temp("empty.txt", "");
  CHECK(lexicon::load_lexicon(empty, stop).size() == 0);

  auto gap = write_temp("gap.txt",
                        "sense x noun 2\nsyn x\nend\n");
  CHECK_THROWS_AS(lexicon::load_lexicon(gap, stop), Error);
}

TEST_CASE("thesaurus entries are symmetric with implicit reflexivity") {
  auto th = lexicon::load_thesaurus(kData + "/thesaurus.csv");
  CHECK(th.degree("theft", "steal") == doctest::Approx(0.9));
  CHECK(th.degree("steal", "theft") == doctest::Approx(0.9));
  CHECK(th.degree("theft", "theft") == doctest::Approx(1.0));
  CHECK(th.degree("king", "unrelated") == doctest::Approx(0.0));

  for (const auto& [pair, degree] : th.pairs()) {
    CHECK(th.degree(pair.second, pair.first) == doctest::Approx(degree));
    CHECK(degree >= 0.0);
    CHECK(degree <= 1.0);
  }
}

TEST_CASE("thesaurus rejects bad degrees") {
  auto bad = write_temp("bad_degree.csv", "a, b, 1.7\n");
  CHECK_THROWS_AS(lexicon::load_thesaurus(bad), ParseError);
  auto nan = write_temp("nan_degree.csv", "a, b, huh\n");
  CHECK_THROWS_AS(lexicon::load_thesaurus(nan), ParseError);
}

TEST_CASE("a repeated thesaurus pair keeps the last degree") {
  auto dup = write_temp("dup_pair.csv", "a, b, .5\nb, a, .7\n");
  auto th = lexicon::load_thesaurus(dup);
  CHECK(th.degree("a", "b") == doctest::Approx(0.7));
  CHECK(th.degree("b", "a") == doctest::Approx(0.7));
}

TEST_CASE("transitive closure follows the strongest path") {
  FuzzyThesaurus th;
  th.set_degree("a", "b", 0.8);
  th.set_degree("b", "c", 0.5);
  auto closed = lexicon::close_transitive(th);
  CHECK(closed.degree("a", "c") == doctest::Approx(0.5));

  // single pair: only reflexive entries appear beyond the edge
  FuzzyThesaurus single;
  single.set_degree("a", "b", 0.4);
  auto sc = lexicon::close_transitive(single);
  CHECK(sc.degree("a", "b") == doctest::Approx(0.4));
  CHECK(sc.degree("a", "a") == doctest::Approx(1.0));
}

TEST_CASE("closure is idempotent, never decreases, matches path oracle") {
  std::mt19937 rng(21);
  std::uniform_real_distribution<double> deg(0.1, 1.0);
  std::vector<std::string> terms{"a", "b", "c", "d", "e"};
  for (int round = 0; round < 30; ++round) {
    FuzzyThesaurus th;
    std::uniform_int_distribution<std::size_t> pick(0, terms.size() - 1);
    for (int e = 0; e < 6; ++e) {
      auto i = pick(rng), j = pick(rng);
      if (i != j) th.set_degree(terms[i], terms[j], deg(rng));
    }
    auto closed = lexicon::close_transitive(th);
    auto twice = lexicon::close_transitive(closed);
    for (const auto& x : terms)
      for (const auto& y : terms) {
        CHECK(closed.degree(x, y) >= th.degree(x, y));
        CHECK(twice.degree(x, y) == doctest::Approx(closed.degree(x, y)));
        CHECK(closed.degree(x, y) ==
              doctest::Approx(best_path_degree(th, terms, x, y)));
      }
  }
}

TEST_CASE("expanded query table reproduces the bundled rows") {
  auto queries =
      lexicon::load_expanded_queries(kData + "/queries/table_6_1.csv");
  REQUIRE(queries.size() == 5);

  const auto& q1 = queries.at("q1");
  REQUIRE(q1.groups.size() == 2);
  CHECK(q1.groups[0].head == "house");
  bool found_home = false;
  for (const auto& [term, w] : q1.groups[0].terms)
    if (term == "home" && w == 0.8) found_home = true;
  CHECK(found_home);

  const auto& q5 = queries.at("q5");
  bool found_reform = false;
  for (const auto& [term, w] : q5.groups[1].terms)
    if (term == "reform" && w == 1.0) found_reform = true;
  CHECK(found_reform);

  // every group head carries weight 1
  for (const auto& [id, q] : queries)
    for (const auto& g : q.groups) {
      REQUIRE(!g.terms.empty());
      CHECK(g.terms.front().first == g.head);
      CHECK(g.terms.front().second == 1.0);
    }
}

TEST_CASE("expanded query table rejects bad rows") {
  auto zero = write_temp("zero_weight.csv", "q1, 1, head, 1\nq1, 1, x, 0\n");
  CHECK_THROWS_AS(lexicon::load_expanded_queries(zero), ParseError);
  auto dup = write_temp("dup_term.csv",
                        "q1, 1, head, 1\nq1, 1, x, .5\nq1, 1, x, .5\n");
  CHECK_THROWS_AS(lexicon::load_expanded_queries(dup), ParseError);
}

TEST_CASE("question-term expansion builds one group per keyword") {
  FuzzyThesaurus th;
  th.set_degree("king", "ruler", 0.9);
  th.set_degree("king", "emperor", 0.8);
  th.set_degree("king", "crown", 0.2);

  auto eq = lexicon::expand_question_terms({"king", "zebra"}, th, 0.5);
  REQUIRE(eq.groups.size() == 2);
  CHECK(eq.groups[0].head == "king");
  REQUIRE(eq.groups[0].terms.size() == 3);  // king, ruler, emperor
  CHECK(eq.groups[0].terms[0].second == 1.0);
  CHECK(eq.groups[0].terms[1].first == "ruler");
  CHECK(eq.groups[1].terms.size() == 1);  // unknown keyword stays singleton

  auto strict = lexicon::expand_question_terms({"king"}, th, 1.0);
  CHECK(strict.groups[0].terms.size() == 1);
}
