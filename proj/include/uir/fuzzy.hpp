#ifndef UIR_FUZZY_HPP
#define UIR_FUZZY_HPP

#include <set>
#include <string>
#include <utility>
#include <vector>

namespace uir::fuzzy {

/// Labelled membership vector; every value lies in [0,1].
struct FuzzyVector {
  std::vector<std::string> labels;
  std::vector<double> values;

  std::size_t size() const { return labels.size(); }
  double at(const std::string& label) const;
  void validate() const;
};

/// Labelled membership matrix over row x column labels.
struct FuzzyRelation {
  std::vector<std::string> row_labels;
  std::vector<std::string> col_labels;
  std::vector<double> data;  // row-major

  double& at(std::size_t r, std::size_t c) {
    return data[r * col_labels.size() + c];
  }
  double at(std::size_t r, std::size_t c) const {
    return data[r * col_labels.size() + c];
  }
  void validate() const;
};

FuzzyVector fuzzy_union(const FuzzyVector& f, const FuzzyVector& g);
FuzzyVector fuzzy_intersection(const FuzzyVector& f, const FuzzyVector& g);
FuzzyVector fuzzy_complement(const FuzzyVector& f);

/// out_j = max over i of min(v_i, M_ij); v.labels must equal M.row_labels.
FuzzyVector max_min_compose(const FuzzyVector& v, const FuzzyRelation& m);

/// Two-stage retrieval (q o T) o R; the augmented query q o T is also
/// returned for inspection.
struct RetrievalResult {
  FuzzyVector augmented_query;
  FuzzyVector document_degrees;
  /// Degrees ordered for presentation: descending, ties by label.
  std::vector<std::pair<std::string, double>> ranking;
};

RetrievalResult fuzzy_retrieve(const FuzzyVector& query,
                               const FuzzyRelation& thesaurus,
                               const FuzzyRelation& relevance);

/// Keeps the top_k strongest entries (0 = no limit) with degree above
/// min_degree; default keeps all nonzero.
std::vector<std::pair<std::string, double>> present(
    const FuzzyVector& degrees, std::size_t top_k = 0, double min_degree = 0.0);

/// Crisp retrieval: entry (q,d) = 1 iff the keyword sets intersect.
FuzzyRelation crisp_retrieve(
    const std::vector<std::pair<std::string, std::set<std::string>>>& queries,
    const std::vector<std::pair<std::string, std::set<std::string>>>& docs);

/// CSV with a header row of column labels; each body row starts with its
/// row label.
FuzzyRelation load_relation_csv(const std::string& path);

/// Lines "term, centrality".
FuzzyVector load_query_csv(const std::string& path);

/// Lines "id, term, term, ...".
std::vector<std::pair<std::string, std::set<std::string>>> load_keyword_sets(
    const std::string& path);

}  // namespace uir::fuzzy

#endif  // UIR_FUZZY_HPP
