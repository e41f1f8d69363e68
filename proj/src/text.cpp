#include "uir/text.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>

#include "uir/error.hpp"

namespace uir::text {

namespace {

constexpr std::size_t kForceSplit = 23;  // reference scanner flushes at wi>22

bool is_delimiter(char c, Mode mode) {
  switch (c) {
    case ' ':
    case '\n':
    case '\t':
    case '.':
    case ',':
    case ';':
    case '?':
    case '-':
    case '!':
      return true;
    case ':':
    case '"':
      return mode == Mode::Standard;
    default:
      return false;
  }
}

bool ends_sentence(char c, Mode mode) {
  if (c == '.') return true;
  return mode == Mode::Standard && (c == '?' || c == '!');
}

}  // namespace

std::string fold_case(const std::string& s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) {
    return static_cast<char>(std::tolower(c));
  });
  return out;
}

std::vector<Token> tokenize(const std::string& raw, Mode mode) {
  std::vector<Token> tokens;
  std::string current;
  std::size_t begin = 0;

  auto flush = [&](std::size_t end) {
    if (current.empty()) return;
    if (mode == Mode::Standard) current = fold_case(current);
    tokens.push_back(Token{std::move(current), tokens.size(), begin, end});
    current.clear();
  };

  for (std::size_t i = 0; i < raw.size(); ++i) {
    char c = raw[i];
    if (c == '\r') c = '\n';  // CRLF-era sources; treat as newline
    if (is_delimiter(c, mode)) {
      flush(i);
    } else {
      if (current.empty()) begin = i;
      current.push_back(c);
      if (current.size() == kForceSplit) flush(i + 1);
    }
  }
  flush(raw.size());
  return tokens;
}

std::vector<SentenceSpan> segment_sentences(const std::vector<Token>& tokens,
                                            const std::string& raw,
                                            Mode mode) {
  std::vector<SentenceSpan> spans;
  std::size_t start = 0;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    const Token& t = tokens[i];
    // The character that terminated this token decides the boundary; a
    // '.' standing between delimiters terminates nothing and is ignored,
    // matching the reference scanner.
    bool boundary =
        t.raw_end < raw.size() && ends_sentence(raw[t.raw_end], mode);
    if (boundary) {
      spans.push_back(SentenceSpan{spans.size(), start, i});
      start = i + 1;
    }
  }
  if (start < tokens.size())
    spans.push_back(SentenceSpan{spans.size(), start, tokens.size() - 1});
  return spans;
}

Stoplist load_stopwords(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open stopword file: " + path);
  Stoplist list;
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::string word;
    for (char c : line)
      if (!std::isspace(static_cast<unsigned char>(c))) word.push_back(c);
    if (!word.empty()) list.insert(fold_case(word));
  }
  return list;
}

bool is_stopword(const Stoplist& stoplist, const std::string& word) {
  return stoplist.count(fold_case(word)) > 0;
}

std::vector<Token> filter_stopwords(const std::vector<Token>& tokens,
                                    const Stoplist& stoplist) {
  std::vector<Token> out;
  out.reserve(tokens.size());
  for (const Token& t : tokens)
    if (!is_stopword(stoplist, t.text)) out.push_back(t);
  return out;
}

Stemmer identity_stemmer() {
  return [](const std::string& s) { return s; };
}

Document Document::analyze(std::string id, std::string raw, Mode mode) {
  Document doc;
  doc.id = std::move(id);
  doc.raw = std::move(raw);
  doc.tokens = tokenize(doc.raw, mode);
  doc.sentences = segment_sentences(doc.tokens, doc.raw, mode);
  return doc;
}

InvertedIndex InvertedIndex::build(std::span<const Document> corpus,
                                   const Stemmer& stem) {
  InvertedIndex idx;
  std::unordered_set<std::string> seen;
  for (const Document& doc : corpus) {
    if (!seen.insert(doc.id).second)
      throw Error("duplicate document id in corpus: " + doc.id);
    for (const Token& t : doc.tokens) {
      auto& postings = idx.index_[stem(t.text)];
      if (postings.empty() || postings.back().doc_id != doc.id)
        postings.push_back(Posting{doc.id, {}});
      postings.back().positions.push_back(t.position);
    }
  }
  idx.n_documents_ = corpus.size();
  return idx;
}

const std::vector<Posting>* InvertedIndex::postings(
    const std::string& term) const {
  auto it = index_.find(term);
  return it == index_.end() ? nullptr : &it->second;
}

std::size_t InvertedIndex::document_frequency(const std::string& term) const {
  auto it = index_.find(term);
  return it == index_.end() ? 0 : it->second.size();
}

double idf(std::size_t n_docs, std::size_t n_containing, double base) {
  if (n_containing == 0) throw Error("idf undefined: term not in collection");
  if (n_containing > n_docs)
    throw Error("idf undefined: n_t exceeds collection size");
  return std::log(static_cast<double>(n_docs) /
                  static_cast<double>(n_containing)) /
         std::log(base);
}

double doc_term_weight(std::size_t tf, double idf_value) {
  return static_cast<double>(tf) * idf_value;
}

double query_term_weight(std::size_t tf, std::size_t max_tf,
                         double idf_value) {
  if (max_tf == 0) throw Error("query_term_weight: max_tf must be positive");
  return (0.5 + 0.5 * static_cast<double>(tf) / static_cast<double>(max_tf)) *
         idf_value;
}

}  // namespace uir::text
