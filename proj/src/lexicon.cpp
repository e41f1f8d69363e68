#include "uir/lexicon.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "uir/error.hpp"

namespace uir::lexicon {

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, ',')) fields.push_back(trim(field));
  return fields;
}

}  // namespace

Pos pos_from_string(const std::string& s) {
  if (s == "noun" || s == "n") return Pos::Noun;
  if (s == "verb" || s == "v") return Pos::Verb;
  if (s == "adj" || s == "a") return Pos::Adj;
  if (s == "adv" || s == "r") return Pos::Adv;
  throw Error("unknown part of speech: " + s);
}

std::string to_string(Pos pos) {
  switch (pos) {
    case Pos::Noun: return "noun";
    case Pos::Verb: return "verb";
    case Pos::Adj: return "adj";
    case Pos::Adv: return "adv";
  }
  return "noun";
}

WordBag bag_from_text(const std::string& free_text,
                      const text::Stoplist& stoplist) {
  WordBag bag;
  for (const auto& tok : text::tokenize(free_text, text::Mode::Standard))
    if (!text::is_stopword(stoplist, tok.text)) ++bag[tok.text];
  return bag;
}

WordBag Sense::synset_bag() const {
  WordBag bag;
  for (const auto& w : synset)
    for (const auto& tok : text::tokenize(w, text::Mode::Standard))
      ++bag[tok.text];
  return bag;
}

void Lexicon::add(Sense sense) {
  entries_[{text::fold_case(sense.word), sense.pos}].push_back(
      std::move(sense));
}

const std::vector<Sense>& Lexicon::senses(const std::string& word,
                                          Pos pos) const {
  static const std::vector<Sense> kEmpty;
  auto it = entries_.find({text::fold_case(word), pos});
  return it == entries_.end() ? kEmpty : it->second;
}

std::vector<const Sense*> Lexicon::all_senses(const std::string& word) const {
  std::vector<const Sense*> out;
  for (Pos pos : {Pos::Noun, Pos::Verb, Pos::Adj, Pos::Adv})
    for (const Sense& s : senses(word, pos)) out.push_back(&s);
  return out;
}

bool Lexicon::contains(const std::string& word) const {
  return !all_senses(word).empty();
}

void Lexicon::sort_senses() {
  for (auto& [key, senses] : entries_)
    std::stable_sort(senses.begin(), senses.end(),
                     [](const Sense& a, const Sense& b) {
                       return a.sense_no < b.sense_no;
                     });
}

void Lexicon::validate() const {
  for (const auto& [key, senses] : entries_) {
    for (std::size_t i = 0; i < senses.size(); ++i) {
      const Sense& s = senses[i];
      if (s.sense_no != static_cast<int>(i) + 1)
        throw Error("lexicon: sense numbers for '" + key.first +
                    "' are not contiguous from 1");
      bool in_synset = false;
      for (const auto& w : s.synset)
        if (text::fold_case(w) == key.first) in_synset = true;
      if (!in_synset)
        throw Error("lexicon: word '" + key.first +
                    "' missing from its own synset (sense " +
                    std::to_string(s.sense_no) + ")");
    }
  }
}

Lexicon load_lexicon(const std::string& path,
                     const text::Stoplist& stoplist) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open lexicon file: " + path);

  Lexicon lex;
  Sense current;
  bool open = false;
  std::string line;
  std::size_t lineno = 0;

  auto fail = [&](const std::string& msg) -> ParseError {
    return ParseError(path, lineno, msg);
  };

  while (std::getline(in, line)) {
    ++lineno;
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;

    std::istringstream ls(line);
    std::string tag;
    ls >> tag;
    std::string rest = trim(line.substr(tag.size()));

    if (tag == "sense") {
      if (open) throw fail("record missing 'end' terminator");
      std::istringstream rs(rest);
      std::string word, pos;
      int no = 0;
      if (!(rs >> word >> pos >> no))
        throw fail("expected: sense <word> <pos> <sense_no>");
      current = Sense{};
      current.word = word;
      current.pos = pos_from_string(pos);
      current.sense_no = no;
      open = true;
    } else if (tag == "syn") {
      if (!open) throw fail("'syn' outside a sense record");
      // synonyms are comma-separated so multiword entries survive
      for (const auto& w : split_csv(rest))
        if (!w.empty()) current.synset.push_back(text::fold_case(w));
    } else if (tag == "gloss") {
      if (!open) throw fail("'gloss' outside a sense record");
      current.gloss_text = rest;
      current.gloss = bag_from_text(rest, stoplist);
    } else if (tag == "hyper") {
      if (!open) throw fail("'hyper' outside a sense record");
      for (const auto& [w, n] : bag_from_text(rest, stoplist))
        current.hypernym_words[w] += n;
    } else if (tag == "hypo") {
      if (!open) throw fail("'hypo' outside a sense record");
      for (const auto& [w, n] : bag_from_text(rest, stoplist))
        current.hyponym_words[w] += n;
    } else if (tag == "end") {
      if (!open) throw fail("'end' without an open sense record");
      lex.add(std::move(current));
      open = false;
    } else {
      throw fail("unknown directive: " + tag);
    }
  }
  if (open) throw ParseError(path, lineno, "record missing 'end' terminator");
  lex.sort_senses();
  lex.validate();
  return lex;
}

void save_lexicon(const Lexicon& lexicon, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write lexicon file: " + path);
  for (const auto& [key, senses] : lexicon.entries()) {
    for (const Sense& s : senses) {
      out << "sense " << key.first << ' ' << to_string(s.pos) << ' '
          << s.sense_no << '\n';
      out << "syn ";
      for (std::size_t i = 0; i < s.synset.size(); ++i)
        out << (i ? ", " : "") << s.synset[i];
      out << '\n';
      if (!s.gloss_text.empty()) out << "gloss " << s.gloss_text << '\n';
      auto emit = [&](const char* tag, const WordBag& bag) {
        if (bag.empty()) return;
        out << tag;
        for (const auto& [w, n] : bag)
          for (int i = 0; i < n; ++i) out << ' ' << w;
        out << '\n';
      };
      emit("hyper", s.hypernym_words);
      emit("hypo", s.hyponym_words);
      out << "end\n";
    }
  }
}

void FuzzyThesaurus::set_degree(const std::string& a, const std::string& b,
                                double degree) {
  pairs_[{a, b}] = degree;
  pairs_[{b, a}] = degree;
  terms_.insert(a);
  terms_.insert(b);
}

double FuzzyThesaurus::degree(const std::string& a,
                              const std::string& b) const {
  if (a == b) return 1.0;
  auto it = pairs_.find({a, b});
  return it == pairs_.end() ? 0.0 : it->second;
}

std::vector<std::pair<std::string, double>> FuzzyThesaurus::neighbours(
    const std::string& term) const {
  std::vector<std::pair<std::string, double>> out;
  auto it = pairs_.lower_bound({term, ""});
  for (; it != pairs_.end() && it->first.first == term; ++it)
    if (it->first.second != term) out.emplace_back(it->first.second,
                                                   it->second);
  std::stable_sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    if (x.second != y.second) return x.second > y.second;
    return x.first < y.first;
  });
  return out;
}

FuzzyThesaurus load_thesaurus(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open thesaurus file: " + path);
  FuzzyThesaurus th;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    if (trim(line).empty()) continue;
    auto fields = split_csv(line);
    if (fields.size() != 3)
      throw ParseError(path, lineno, "expected 'term1, term2, degree'");
    double degree;
    try {
      std::size_t used = 0;
      degree = std::stod(fields[2], &used);
      if (used != fields[2].size()) throw std::invalid_argument(fields[2]);
    } catch (const std::exception&) {
      throw ParseError(path, lineno, "degree is not a number: " + fields[2]);
    }
    if (degree < 0.0 || degree > 1.0)
      throw ParseError(path, lineno,
                       "degree outside [0,1]: " + fields[2]);
    std::string a = text::fold_case(fields[0]);
    std::string b = text::fold_case(fields[1]);
    if (th.pairs().count({a, b}) && th.degree(a, b) != degree)
      std::cerr << path << ":" << lineno << ": warning: pair (" << a << ", "
                << b << ") redefined; last value wins\n";
    th.set_degree(a, b, degree);
  }
  return th;
}

FuzzyThesaurus close_transitive(const FuzzyThesaurus& thesaurus) {
  std::vector<std::string> terms(thesaurus.terms().begin(),
                                 thesaurus.terms().end());
  const std::size_t n = terms.size();
  std::vector<double> d(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      d[i * n + j] = thesaurus.degree(terms[i], terms[j]);

  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        d[i * n + j] = std::max(d[i * n + j],
                                std::min(d[i * n + k], d[k * n + j]));

  FuzzyThesaurus out;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (d[i * n + j] > 0.0) out.set_degree(terms[i], terms[j], d[i * n + j]);
  for (const auto& t : terms)
    out.set_degree(t, t, 1.0);
  return out;
}

std::map<std::string, ExpandedQuery> load_expanded_queries(
    const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open query table: " + path);

  std::map<std::string, ExpandedQuery> queries;
  // group_index 1-based per query; rows must arrive grouped but groups may
  // be listed in any order
  std::map<std::string, std::map<int, TermGroup>> building;
  std::map<std::string, std::set<std::pair<int, std::string>>> seen;

  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    if (trim(line).empty()) continue;
    auto fields = split_csv(line);
    if (fields.size() != 4)
      throw ParseError(path, lineno,
                       "expected 'query_id, group_index, term, weight'");
    const std::string& qid = fields[0];
    int group;
    double weight;
    try {
      group = std::stoi(fields[1]);
      weight = std::stod(fields[3]);
    } catch (const std::exception&) {
      throw ParseError(path, lineno, "bad group index or weight");
    }
    if (weight <= 0.0 || weight > 1.0)
      throw ParseError(path, lineno,
                       "weight outside (0,1]: " + fields[3]);
    if (!seen[qid].insert({group, fields[2]}).second)
      throw ParseError(path, lineno,
                       "duplicate term '" + fields[2] + "' in group " +
                           fields[1] + " of query " + qid);
    TermGroup& tg = building[qid][group];
    if (tg.terms.empty()) {
      if (weight != 1.0)
        throw ParseError(path, lineno,
                         "group head '" + fields[2] + "' must have weight 1");
      tg.head = fields[2];
    }
    tg.terms.emplace_back(fields[2], weight);
  }

  for (auto& [qid, groups] : building) {
    ExpandedQuery eq;
    eq.query_id = qid;
    for (auto& [idx, tg] : groups) eq.groups.push_back(std::move(tg));
    queries.emplace(qid, std::move(eq));
  }
  return queries;
}

ExpandedQuery expand_question_terms(const std::vector<std::string>& keywords,
                                    const FuzzyThesaurus& thesaurus,
                                    double cutoff) {
  ExpandedQuery eq;
  for (const auto& kw : keywords) {
    std::string head = text::fold_case(kw);
    TermGroup tg;
    tg.head = head;
    tg.terms.emplace_back(head, 1.0);
    for (const auto& [term, degree] : thesaurus.neighbours(head))
      if (degree >= cutoff) tg.terms.emplace_back(term, degree);
    eq.groups.push_back(std::move(tg));
  }
  return eq;
}

}  // namespace uir::lexicon
