#include "uir/ds.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "uir/error.hpp"

namespace uir::ds {

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream in(s);
  while (std::getline(in, field, sep)) {
    field = trim(field);
    if (!field.empty()) out.push_back(field);
  }
  return out;
}

}  // namespace

Frame::Frame(std::vector<std::string> labels) : labels_(std::move(labels)) {
  if (labels_.empty()) throw Error("frame of discernment must be non-empty");
  if (labels_.size() > 64)
    throw Error("frame of discernment limited to 64 labels");
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (!index_.emplace(labels_[i], i).second)
      throw Error("duplicate label in frame: " + labels_[i]);
}

std::uint64_t Frame::full_mask() const {
  return labels_.size() == 64 ? ~0ull : (1ull << labels_.size()) - 1;
}

std::uint64_t Frame::mask_of(const std::vector<std::string>& labels) const {
  std::uint64_t mask = 0;
  for (const auto& l : labels) {
    auto it = index_.find(l);
    if (it == index_.end()) throw Error("label not in frame: " + l);
    mask |= 1ull << it->second;
  }
  return mask;
}

std::uint64_t Frame::mask_of(std::initializer_list<const char*> labels) const {
  return mask_of(std::vector<std::string>(labels.begin(), labels.end()));
}

std::vector<std::string> Frame::labels_of(std::uint64_t mask) const {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (mask & (1ull << i)) out.push_back(labels_[i]);
  return out;
}

std::string Frame::describe(std::uint64_t mask) const {
  if (mask == full_mask()) return "*";
  std::string out = "{";
  bool first = true;
  for (const auto& l : labels_of(mask)) {
    if (!first) out += ",";
    out += l;
    first = false;
  }
  return out + "}";
}

BodyOfEvidence BodyOfEvidence::make(
    Frame frame, const std::map<std::uint64_t, double>& masses) {
  BodyOfEvidence boe;
  boe.frame_ = std::move(frame);
  double total = 0.0;
  for (const auto& [focal, mass] : masses) {
    if (focal == 0) throw Error("body of evidence: empty focal set");
    if ((focal & ~boe.frame_.full_mask()) != 0)
      throw Error("body of evidence: focal set outside the frame");
    if (mass <= 0.0)
      throw Error("body of evidence: mass must be positive on " +
                  boe.frame_.describe(focal));
    total += mass;
  }
  if (std::abs(total - 1.0) > kMassTolerance)
    throw Error("body of evidence: masses sum to " + std::to_string(total) +
                ", expected 1");
  boe.masses_ = masses;
  return boe;
}

BodyOfEvidence BodyOfEvidence::vacuous(Frame frame) {
  std::map<std::uint64_t, double> m{{frame.full_mask(), 1.0}};
  return make(std::move(frame), m);
}

double BodyOfEvidence::mass(std::uint64_t focal) const {
  auto it = masses_.find(focal);
  return it == masses_.end() ? 0.0 : it->second;
}

double belief(const BodyOfEvidence& boe, std::uint64_t subset) {
  if ((subset & ~boe.frame().full_mask()) != 0)
    throw Error("belief: subset outside the frame");
  double bel = 0.0;
  for (const auto& [focal, mass] : boe.masses())
    if ((focal & ~subset) == 0) bel += mass;
  return bel;
}

double belief(const BodyOfEvidence& boe, const std::set<std::string>& labels) {
  return belief(boe, boe.frame().mask_of(std::vector<std::string>(
                          labels.begin(), labels.end())));
}

double plausibility(const BodyOfEvidence& boe, std::uint64_t subset) {
  if ((subset & ~boe.frame().full_mask()) != 0)
    throw Error("plausibility: subset outside the frame");
  double disjoint = 0.0;
  for (const auto& [focal, mass] : boe.masses())
    if ((focal & subset) == 0) disjoint += mass;
  return 1.0 - disjoint;
}

double plausibility(const BodyOfEvidence& boe,
                    const std::set<std::string>& labels) {
  return plausibility(boe, boe.frame().mask_of(std::vector<std::string>(
                               labels.begin(), labels.end())));
}

CombinationResult combine(const BodyOfEvidence& e1, const BodyOfEvidence& e2) {
  if (!(e1.frame() == e2.frame()))
    throw Error("combine: bodies of evidence use different frames");

  std::map<std::uint64_t, double> products;
  double conflict = 0.0;
  for (const auto& [f1, m1] : e1.masses()) {
    for (const auto& [f2, m2] : e2.masses()) {
      std::uint64_t meet = f1 & f2;
      double p = m1 * m2;
      if (meet == 0)
        conflict += p;
      else
        products[meet] += p;
    }
  }
  double norm = 1.0 - conflict;
  if (norm <= BodyOfEvidence::kMassTolerance)
    throw Error("combine: total conflict, combination undefined");
  for (auto& [_, m] : products) m /= norm;

  CombinationResult result;
  result.conflict = conflict;
  result.evidence = BodyOfEvidence::make(e1.frame(), products);
  return result;
}

BodyOfEvidence evidence_from_counts(const Frame& frame,
                                    const std::vector<std::size_t>& counts,
                                    double ignorance) {
  if (counts.size() != frame.size())
    throw Error("evidence_from_counts: one count per frame label required");
  if (ignorance < 0.0 || ignorance >= 1.0)
    throw Error("evidence_from_counts: ignorance must lie in [0,1)");
  std::size_t total = 0;
  for (auto c : counts) total += c;
  if (total == 0)
    throw Error("evidence_from_counts: all counts zero, no evidence");

  std::map<std::uint64_t, double> masses;
  for (std::size_t i = 0; i < counts.size(); ++i)
    if (counts[i] > 0)
      masses[frame.singleton(i)] = (1.0 - ignorance) *
                                   static_cast<double>(counts[i]) /
                                   static_cast<double>(total);
  if (ignorance > 0.0) masses[frame.full_mask()] += ignorance;
  return BodyOfEvidence::make(frame, masses);
}

DsRetrieval retrieve_ds(const std::vector<BodyOfEvidence>& evidences) {
  if (evidences.empty()) throw Error("retrieve_ds: no evidence supplied");
  DsRetrieval out;
  out.combined = evidences.front();
  for (std::size_t i = 1; i < evidences.size(); ++i) {
    auto step = combine(out.combined, evidences[i]);
    out.combined = std::move(step.evidence);
    out.conflict = step.conflict;
  }
  const Frame& frame = out.combined.frame();
  for (std::size_t i = 0; i < frame.size(); ++i)
    out.ranking.push_back(RankedHypothesis{
        frame.labels()[i], out.combined.mass(frame.singleton(i))});
  std::stable_sort(out.ranking.begin(), out.ranking.end(),
                   [](const RankedHypothesis& a, const RankedHypothesis& b) {
                     return a.mass > b.mass;
                   });
  out.ignorance = out.combined.ignorance();
  return out;
}

BodyOfEvidence aggregate_node(const DocNode& node) {
  if (node.is_leaf()) {
    if (!node.evidence)
      throw Error("document node " + node.id + " has no evidence");
    return *node.evidence;
  }
  BodyOfEvidence acc = aggregate_node(node.children.front());
  for (std::size_t i = 1; i < node.children.size(); ++i)
    acc = combine(acc, aggregate_node(node.children[i])).evidence;
  return acc;
}

const DocNode* find_node(const DocNode& root, const std::string& id) {
  if (root.id == id) return &root;
  for (const auto& child : root.children)
    if (const DocNode* hit = find_node(child, id)) return hit;
  return nullptr;
}

BeliefInterval query_belief(const BodyOfEvidence& boe,
                            const std::set<std::string>& query_terms) {
  if (query_terms.empty()) throw Error("query_belief: empty query");
  std::uint64_t q = boe.frame().mask_of(
      std::vector<std::string>(query_terms.begin(), query_terms.end()));
  return BeliefInterval{belief(boe, q), plausibility(boe, q)};
}

BodyOfEvidence load_boe(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open evidence file: " + path);

  std::string line;
  std::size_t lineno = 0;
  bool have_frame = false;
  std::vector<std::string> labels;
  std::vector<std::pair<std::string, double>> focal_lines;

  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;

    if (line.rfind("frame:", 0) == 0) {
      labels = split(line.substr(6), ',');
      have_frame = true;
    } else if (line.rfind("focal:", 0) == 0) {
      auto mass_pos = line.find("mass:");
      if (mass_pos == std::string::npos)
        throw ParseError(path, lineno, "focal line missing 'mass:'");
      std::string set_part = trim(line.substr(6, mass_pos - 6));
      std::string mass_part = trim(line.substr(mass_pos + 5));
      double mass;
      try {
        mass = std::stod(mass_part);
      } catch (const std::exception&) {
        throw ParseError(path, lineno, "mass is not a number: " + mass_part);
      }
      focal_lines.emplace_back(set_part, mass);
    } else {
      throw ParseError(path, lineno, "expected 'frame:' or 'focal:' line");
    }
  }
  if (!have_frame) throw Error(path + ": missing 'frame:' header");

  Frame frame(labels);
  std::map<std::uint64_t, double> masses;
  for (const auto& [set_part, mass] : focal_lines) {
    std::uint64_t mask;
    if (set_part == "*") {
      mask = frame.full_mask();
    } else {
      if (set_part.size() < 2 || set_part.front() != '{' ||
          set_part.back() != '}')
        throw Error(path + ": focal set must be '{a,b,...}' or '*'");
      mask = frame.mask_of(split(set_part.substr(1, set_part.size() - 2), ','));
    }
    masses[mask] += mass;
  }
  return BodyOfEvidence::make(std::move(frame), masses);
}

DocNode load_doc_tree(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open document tree: " + path);
  auto base = std::filesystem::path(path).parent_path();

  struct Entry {
    std::size_t indent;
    DocNode node;
  };
  std::vector<Entry> stack;
  DocNode root;
  bool have_root = false;

  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    if (trim(line).empty()) continue;

    std::size_t indent = 0;
    while (indent < line.size() && line[indent] == ' ') ++indent;
    std::string body = trim(line);

    DocNode node;
    auto eq = body.find('=');
    if (eq != std::string::npos) {
      node.id = trim(body.substr(0, eq));
      std::string file = trim(body.substr(eq + 1));
      node.evidence = std::make_shared<BodyOfEvidence>(
          load_boe((base / file).string()));
    } else {
      node.id = body;
    }

    while (!stack.empty() && stack.back().indent >= indent) {
      Entry done = std::move(stack.back());
      stack.pop_back();
      if (stack.empty()) {
        root = std::move(done.node);
        have_root = true;
      } else {
        stack.back().node.children.push_back(std::move(done.node));
      }
    }
    if (have_root)
      throw ParseError(path, lineno, "multiple roots in document tree");
    stack.push_back(Entry{indent, std::move(node)});
  }
  while (!stack.empty()) {
    Entry done = std::move(stack.back());
    stack.pop_back();
    if (stack.empty()) {
      root = std::move(done.node);
      have_root = true;
    } else {
      stack.back().node.children.push_back(std::move(done.node));
    }
  }
  if (!have_root) throw Error(path + ": empty document tree");
  return root;
}

}  // namespace uir::ds
