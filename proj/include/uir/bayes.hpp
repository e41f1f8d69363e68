#ifndef UIR_BAYES_HPP
#define UIR_BAYES_HPP

#include <span>
#include <string>
#include <vector>

#include "uir/lexicon.hpp"
#include "uir/text.hpp"

namespace uir::bayes {

/// How the per-group weighted sums are aggregated into one score.  The
/// reference program takes the fuzzy AND (minimum); the closed formula in
/// the derivation multiplies.  Both divide by n^m.
enum class Aggregation { MinOverGroups, ProductOverGroups };

/// Token-vs-term comparison.  ReplicaExact is byte equality against the
/// lowercase tables, as in the reference program; Folded lowercases the
/// token first.
enum class Matching { ReplicaExact, Folded };

/// Sentence-score divisor: the derived formula divides by the sentence
/// length n, the reference program by (end - start) = n - 1.
enum class Denominator { NEq613, NMinus1Replica };

struct RelevanceScore {
  std::string doc_id;
  std::vector<double> group_weights;  // wt_j per query group
  double rf = 0.0;                    // aggregate / n^m
  Aggregation mode = Aggregation::MinOverGroups;
};

struct SegmentScore {
  std::size_t sentence_index = 0;
  double matched_weight = 0.0;  // swt
  double denom = 1.0;
  double rank = 0.0;            // swt / denom
};

/// Sum over document tokens of the weight of the matching group term.
double group_weight(const text::Document& doc, const lexicon::TermGroup& group,
                    Matching matching);

double group_weight(std::span<const text::Token> tokens,
                    const lexicon::TermGroup& group, Matching matching);

/// Relevance function for one document; zero whenever any group is
/// unmatched.  Throws Error on an empty document.
RelevanceScore relevance_function(const text::Document& doc,
                                  const lexicon::ExpandedQuery& query,
                                  Aggregation mode,
                                  Matching matching = Matching::ReplicaExact);

/// Scores every document, drops entries at or below threshold_frac of the
/// maximum, sorts by rf descending with ties broken by doc id.
std::vector<RelevanceScore> rank_documents(
    std::span<const text::Document> corpus, const lexicon::ExpandedQuery& query,
    Aggregation mode, double threshold_frac = 0.20,
    Matching matching = Matching::ReplicaExact);

/// Disjunctive sentence score: every matched token of every group
/// contributes its weight.  A single-token sentence clamps the replica
/// divisor to 1.
SegmentScore sentence_score(std::span<const text::Token> sentence_tokens,
                            std::size_t sentence_index,
                            const lexicon::ExpandedQuery& query,
                            Denominator denom_mode,
                            Matching matching = Matching::ReplicaExact);

/// Sentences ranked descending (stable by sentence index), keeping those
/// strictly above threshold_frac x max rank.  Empty when nothing matches.
std::vector<SegmentScore> extract_segments(
    const text::Document& doc, const lexicon::ExpandedQuery& query,
    double threshold_frac = 0.20,
    Denominator denom_mode = Denominator::NMinus1Replica,
    Matching matching = Matching::ReplicaExact);

/// Presence/absence vector over a fixed term ordering.
std::vector<int> to_binary_vector(const text::Document& doc,
                                  const std::vector<std::string>& terms);

}  // namespace uir::bayes

#endif  // UIR_BAYES_HPP
