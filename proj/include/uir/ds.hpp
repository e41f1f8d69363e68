#ifndef UIR_DS_HPP
#define UIR_DS_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

namespace uir::ds {

/// Frame of discernment: an ordered set of at most 64 hypothesis labels.
/// Subsets are bitmasks over the label order, giving exact set algebra.
class Frame {
 public:
  Frame() = default;  // placeholder; real frames come from label lists
  explicit Frame(std::vector<std::string> labels);

  std::size_t size() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }

  std::uint64_t full_mask() const;
  std::uint64_t singleton(std::size_t index) const { return 1ull << index; }

  /// Throws Error for labels outside the frame.
  std::uint64_t mask_of(const std::vector<std::string>& labels) const;
  std::uint64_t mask_of(std::initializer_list<const char*> labels) const;

  std::vector<std::string> labels_of(std::uint64_t mask) const;
  std::string describe(std::uint64_t mask) const;

  bool operator==(const Frame& other) const {
    return labels_ == other.labels_;
  }

 private:
  std::vector<std::string> labels_;
  std::map<std::string, std::size_t> index_;
};

/// Focal sets with masses summing to 1; the empty set carries no mass.
class BodyOfEvidence {
 public:
  static constexpr double kMassTolerance = 1e-9;

  /// Validates every assignment (non-empty focal sets, positive masses,
  /// total within tolerance of 1) and throws Error naming the violation.
  static BodyOfEvidence make(Frame frame,
                             const std::map<std::uint64_t, double>& masses);

  /// All mass on the full frame: total ignorance, neutral for combination.
  static BodyOfEvidence vacuous(Frame frame);

  const Frame& frame() const { return frame_; }
  const std::map<std::uint64_t, double>& masses() const { return masses_; }

  double mass(std::uint64_t focal) const;
  double ignorance() const { return mass(frame_.full_mask()); }

 private:
  Frame frame_;
  std::map<std::uint64_t, double> masses_;
};

/// Bel(A) = sum of masses of focal sets contained in A.
double belief(const BodyOfEvidence& boe, std::uint64_t subset);
double belief(const BodyOfEvidence& boe, const std::set<std::string>& labels);

/// Pl(A) = 1 - sum of masses of focal sets disjoint from A.  The
/// uncertainty interval of A is [Bel(A), Pl(A)].
double plausibility(const BodyOfEvidence& boe, std::uint64_t subset);
double plausibility(const BodyOfEvidence& boe,
                    const std::set<std::string>& labels);

struct CombinationResult {
  BodyOfEvidence evidence;
  double conflict = 0.0;  // K, the normalized-away mass
};

/// Dempster's rule over a shared frame; throws Error on frame mismatch or
/// total conflict (K = 1).
CombinationResult combine(const BodyOfEvidence& e1, const BodyOfEvidence& e2);

/// Singleton masses (1 - ignorance) * n_i / sum(n); the ignorance mass
/// goes to the full frame.  All-zero counts are an error.
BodyOfEvidence evidence_from_counts(const Frame& frame,
                                    const std::vector<std::size_t>& counts,
                                    double ignorance);

struct RankedHypothesis {
  std::string label;
  double mass = 0.0;
};

struct DsRetrieval {
  std::vector<RankedHypothesis> ranking;  // singleton masses, descending
  double ignorance = 0.0;
  double conflict = 0.0;  // K of the final combination step
  BodyOfEvidence combined;
};

/// Left-fold of combine over all evidences (at least one required).
DsRetrieval retrieve_ds(const std::vector<BodyOfEvidence>& evidences);

/// Document tree: composites aggregate their children, leaves carry
/// evidence.
struct DocNode {
  std::string id;
  std::vector<DocNode> children;            // composite when non-empty
  std::shared_ptr<BodyOfEvidence> evidence;  // leaf payload

  bool is_leaf() const { return children.empty(); }
};

/// Leaf -> its own evidence; composite -> combination of the children's
/// aggregates in child order.
BodyOfEvidence aggregate_node(const DocNode& node);

const DocNode* find_node(const DocNode& root, const std::string& id);

struct BeliefInterval {
  double bel = 0.0;
  double pl = 0.0;
};

/// Relevance of an object to query terms q: Bel(q) with Pl(q) as the
/// tie-breaking upper bound.  Empty q is an error.
BeliefInterval query_belief(const BodyOfEvidence& boe,
                            const std::set<std::string>& query_terms);

/// Evidence file: `frame: a,b,c` header then `focal: {a,b} mass: 0.4`
/// lines; `*` denotes the whole frame.
BodyOfEvidence load_boe(const std::string& path);

/// Indented outline; leaves are `id = evidence-file` (relative to the
/// tree file), composites are bare ids with indented children.
DocNode load_doc_tree(const std::string& path);

}  // namespace uir::ds

#endif  // UIR_DS_HPP
