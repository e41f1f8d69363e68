#include "uir/fuzzy.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "uir/error.hpp"

namespace uir::fuzzy {

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, ',')) fields.push_back(trim(field));
  return fields;
}

double parse_degree(const std::string& s, const std::string& path,
                    std::size_t lineno) {
  double v;
  try {
    std::size_t used = 0;
    v = std::stod(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
  } catch (const std::exception&) {
    throw ParseError(path, lineno, "not a number: " + s);
  }
  if (v < 0.0 || v > 1.0)
    throw ParseError(path, lineno, "degree outside [0,1]: " + s);
  return v;
}

void require_same_labels(const FuzzyVector& f, const FuzzyVector& g) {
  if (f.labels != g.labels)
    throw Error("fuzzy set operation on mismatched labels");
}

}  // namespace

double FuzzyVector::at(const std::string& label) const {
  for (std::size_t i = 0; i < labels.size(); ++i)
    if (labels[i] == label) return values[i];
  throw Error("no such label: " + label);
}

void FuzzyVector::validate() const {
  if (labels.size() != values.size())
    throw Error("fuzzy vector labels/values length mismatch");
  for (double v : values)
    if (v < 0.0 || v > 1.0) throw Error("membership degree outside [0,1]");
}

void FuzzyRelation::validate() const {
  if (data.size() != row_labels.size() * col_labels.size())
    throw Error("fuzzy relation dimensions inconsistent with labels");
  for (double v : data)
    if (v < 0.0 || v > 1.0) throw Error("membership degree outside [0,1]");
}

FuzzyVector fuzzy_union(const FuzzyVector& f, const FuzzyVector& g) {
  require_same_labels(f, g);
  FuzzyVector out{f.labels, {}};
  out.values.reserve(f.size());
  for (std::size_t i = 0; i < f.size(); ++i)
    out.values.push_back(std::max(f.values[i], g.values[i]));
  return out;
}

FuzzyVector fuzzy_intersection(const FuzzyVector& f, const FuzzyVector& g) {
  require_same_labels(f, g);
  FuzzyVector out{f.labels, {}};
  out.values.reserve(f.size());
  for (std::size_t i = 0; i < f.size(); ++i)
    out.values.push_back(std::min(f.values[i], g.values[i]));
  return out;
}

FuzzyVector fuzzy_complement(const FuzzyVector& f) {
  FuzzyVector out{f.labels, {}};
  out.values.reserve(f.size());
  for (double v : f.values) out.values.push_back(1.0 - v);
  return out;
}

FuzzyVector max_min_compose(const FuzzyVector& v, const FuzzyRelation& m) {
  if (v.labels != m.row_labels)
    throw Error("composition: vector labels do not match relation rows");
  FuzzyVector out{m.col_labels, std::vector<double>(m.col_labels.size(), 0.0)};
  for (std::size_t j = 0; j < m.col_labels.size(); ++j) {
    double best = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i)
      best = std::max(best, std::min(v.values[i], m.at(i, j)));
    out.values[j] = best;
  }
  return out;
}

RetrievalResult fuzzy_retrieve(const FuzzyVector& query,
                               const FuzzyRelation& thesaurus,
                               const FuzzyRelation& relevance) {
  if (thesaurus.col_labels != relevance.row_labels)
    throw Error("retrieval: thesaurus columns do not match relevance rows");
  RetrievalResult result;
  result.augmented_query = max_min_compose(query, thesaurus);
  result.document_degrees =
      max_min_compose(result.augmented_query, relevance);
  result.ranking = present(result.document_degrees);
  return result;
}

std::vector<std::pair<std::string, double>> present(const FuzzyVector& degrees,
                                                    std::size_t top_k,
                                                    double min_degree) {
  std::vector<std::pair<std::string, double>> out;
  for (std::size_t i = 0; i < degrees.size(); ++i)
    if (degrees.values[i] > 0.0 && degrees.values[i] >= min_degree)
      out.emplace_back(degrees.labels[i], degrees.values[i]);
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });
  if (top_k > 0 && out.size() > top_k) out.resize(top_k);
  return out;
}

FuzzyRelation crisp_retrieve(
    const std::vector<std::pair<std::string, std::set<std::string>>>& queries,
    const std::vector<std::pair<std::string, std::set<std::string>>>& docs) {
  FuzzyRelation r;
  for (const auto& [qid, _] : queries) r.row_labels.push_back(qid);
  for (const auto& [did, _] : docs) r.col_labels.push_back(did);
  r.data.assign(queries.size() * docs.size(), 0.0);
  for (std::size_t i = 0; i < queries.size(); ++i)
    for (std::size_t j = 0; j < docs.size(); ++j)
      for (const auto& term : queries[i].second)
        if (docs[j].second.count(term)) {
          r.at(i, j) = 1.0;
          break;
        }
  return r;
}

FuzzyRelation load_relation_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open relation file: " + path);
  FuzzyRelation r;
  std::string line;
  std::size_t lineno = 0;
  bool header_done = false;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    if (trim(line).empty()) continue;
    auto fields = split_csv(line);
    if (!header_done) {
      // header row: empty corner cell then column labels
      for (std::size_t i = 1; i < fields.size(); ++i)
        r.col_labels.push_back(fields[i]);
      header_done = true;
      continue;
    }
    if (fields.size() != r.col_labels.size() + 1)
      throw ParseError(path, lineno, "row width does not match header");
    r.row_labels.push_back(fields[0]);
    for (std::size_t i = 1; i < fields.size(); ++i)
      r.data.push_back(parse_degree(fields[i], path, lineno));
  }
  r.validate();
  return r;
}

FuzzyVector load_query_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open query file: " + path);
  FuzzyVector v;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    if (trim(line).empty()) continue;
    auto fields = split_csv(line);
    if (fields.size() != 2)
      throw ParseError(path, lineno, "expected 'term, centrality'");
    v.labels.push_back(fields[0]);
    v.values.push_back(parse_degree(fields[1], path, lineno));
  }
  v.validate();
  return v;
}

std::vector<std::pair<std::string, std::set<std::string>>> load_keyword_sets(
    const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open keyword file: " + path);
  std::vector<std::pair<std::string, std::set<std::string>>> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    if (trim(line).empty()) continue;
    auto fields = split_csv(line);
    if (fields.size() < 2)
      throw ParseError(path, lineno, "expected 'id, term, ...'");
    std::set<std::string> terms(fields.begin() + 1, fields.end());
    out.emplace_back(fields[0], std::move(terms));
  }
  return out;
}

}  // namespace uir::fuzzy
