#include "uir/bayes.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>

#include "uir/error.hpp"

namespace uir::bayes {

namespace {

double token_weight(const std::string& token, const lexicon::TermGroup& group,
                    Matching matching) {
  if (matching == Matching::ReplicaExact) {
    // the reference loop adds every entry that compares equal
    double w = 0.0;
    for (const auto& [term, weight] : group.terms)
      if (term == token) w += weight;
    return w;
  }
  std::string folded = text::fold_case(token);
  for (const auto& [term, weight] : group.terms)
    if (text::fold_case(term) == folded) return weight;  // first entry wins
  return 0.0;
}

}  // namespace

double group_weight(std::span<const text::Token> tokens,
                    const lexicon::TermGroup& group, Matching matching) {
  double wt = 0.0;
  for (const auto& tok : tokens) wt += token_weight(tok.text, group, matching);
  return wt;
}

double group_weight(const text::Document& doc, const lexicon::TermGroup& group,
                    Matching matching) {
  return group_weight(std::span<const text::Token>(doc.tokens), group,
                      matching);
}

RelevanceScore relevance_function(const text::Document& doc,
                                  const lexicon::ExpandedQuery& query,
                                  Aggregation mode, Matching matching) {
  if (doc.word_count() == 0)
    throw Error("relevance_function: empty document " + doc.id);
  if (query.groups.empty())
    throw Error("relevance_function: query has no groups");

  RelevanceScore score;
  score.doc_id = doc.id;
  score.mode = mode;
  for (const auto& group : query.groups)
    score.group_weights.push_back(group_weight(doc, group, matching));

  double agg = mode == Aggregation::MinOverGroups
                   ? *std::min_element(score.group_weights.begin(),
                                       score.group_weights.end())
                   : [&] {
                       double p = 1.0;
                       for (double w : score.group_weights) p *= w;
                       return p;
                     }();
  double n = static_cast<double>(doc.word_count());
  score.rf = agg / std::pow(n, static_cast<double>(query.groups.size()));
  return score;
}

std::vector<RelevanceScore> rank_documents(std::span<const text::Document> corpus,
                                           const lexicon::ExpandedQuery& query,
                                           Aggregation mode,
                                           double threshold_frac,
                                           Matching matching) {
  std::vector<RelevanceScore> scores;
  for (const auto& doc : corpus)
    scores.push_back(relevance_function(doc, query, mode, matching));
  if (scores.empty()) return scores;

  double max_rf = 0.0;
  for (const auto& s : scores) max_rf = std::max(max_rf, s.rf);
  double threshold = threshold_frac * max_rf;

  std::erase_if(scores, [&](const RelevanceScore& s) {
    return !(s.rf > threshold);  // keeps strictly-above entries only
  });
  std::sort(scores.begin(), scores.end(),
            [](const RelevanceScore& a, const RelevanceScore& b) {
              if (a.rf != b.rf) return a.rf > b.rf;
              return a.doc_id < b.doc_id;
            });
  return scores;
}

SegmentScore sentence_score(std::span<const text::Token> sentence_tokens,
                            std::size_t sentence_index,
                            const lexicon::ExpandedQuery& query,
                            Denominator denom_mode, Matching matching) {
  if (sentence_tokens.empty())
    throw Error("sentence_score: empty sentence");

  SegmentScore score;
  score.sentence_index = sentence_index;
  for (const auto& group : query.groups)
    score.matched_weight += group_weight(sentence_tokens, group, matching);

  double n = static_cast<double>(sentence_tokens.size());
  score.denom = denom_mode == Denominator::NEq613 ? n : std::max(n - 1.0, 1.0);
  score.rank = score.matched_weight / score.denom;
  return score;
}

std::vector<SegmentScore> extract_segments(const text::Document& doc,
                                           const lexicon::ExpandedQuery& query,
                                           double threshold_frac,
                                           Denominator denom_mode,
                                           Matching matching) {
  std::vector<SegmentScore> segments;
  for (const auto& span : doc.sentences) {
    std::span<const text::Token> toks(doc.tokens.data() + span.start,
                                      span.end - span.start + 1);
    segments.push_back(
        sentence_score(toks, span.index, query, denom_mode, matching));
  }
  if (segments.empty()) return segments;

  double max_rank = 0.0;
  for (const auto& s : segments) max_rank = std::max(max_rank, s.rank);
  double threshold = threshold_frac * max_rank;

  std::erase_if(segments,
                [&](const SegmentScore& s) { return !(s.rank > threshold); });
  std::stable_sort(segments.begin(), segments.end(),
                   [](const SegmentScore& a, const SegmentScore& b) {
                     if (a.rank != b.rank) return a.rank > b.rank;
                     return a.sentence_index < b.sentence_index;
                   });
  return segments;
}

std::vector<int> to_binary_vector(const text::Document& doc,
                                  const std::vector<std::string>& terms) {
  std::unordered_set<std::string> present;
  for (const auto& tok : doc.tokens) present.insert(tok.text);
  std::vector<int> x;
  x.reserve(terms.size());
  for (const auto& t : terms) x.push_back(present.count(t) ? 1 : 0);
  return x;
}

}  // namespace uir::bayes
