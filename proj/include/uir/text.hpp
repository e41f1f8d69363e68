#ifndef UIR_TEXT_HPP
#define UIR_TEXT_HPP

#include <cstddef>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <unordered_set>
#include <vector>

namespace uir::text {

/// Tokenization behaviour.
///
/// Replica mode mirrors the reference scanner: it splits on exactly
/// { space, newline, tab, '.', ',', ';', '?', '-', '!' }, force-splits a
/// token once it reaches 23 characters, and never folds case.  Standard
/// mode additionally treats ':' and '"' as delimiters and lowercases.
enum class Mode { Replica, Standard };

struct Token {
  std::string text;       // never empty, never contains a delimiter
  std::size_t position;   // 0-based index in the token stream
  std::size_t raw_begin;  // byte offset of first character in the input
  std::size_t raw_end;    // one past the last character

  bool operator==(const Token&) const = default;
};

/// Contiguous run of tokens forming one sentence; `end` is inclusive.
struct SentenceSpan {
  std::size_t index;
  std::size_t start;
  std::size_t end;

  bool operator==(const SentenceSpan&) const = default;
};

std::vector<Token> tokenize(const std::string& raw, Mode mode);

/// Sentence boundaries over an already-tokenized text.  A sentence ends at
/// the token whose terminating character in `raw` is '.' (replica), or
/// '.', '?', '!' (standard); trailing tokens form a final sentence.
std::vector<SentenceSpan> segment_sentences(const std::vector<Token>& tokens,
                                            const std::string& raw, Mode mode);

using Stoplist = std::unordered_set<std::string>;  // lowercase entries

Stoplist load_stopwords(const std::string& path);

std::string fold_case(const std::string& s);

bool is_stopword(const Stoplist& stoplist, const std::string& word);

/// Removes tokens whose case-folded text is in the stoplist; order kept.
std::vector<Token> filter_stopwords(const std::vector<Token>& tokens,
                                    const Stoplist& stoplist);

/// Stemming hook.  The reference programs never stem, so the default is
/// the identity; callers may plug in a real stemmer.
using Stemmer = std::function<std::string(const std::string&)>;

Stemmer identity_stemmer();

struct Document {
  std::string id;
  std::string raw;
  std::vector<Token> tokens;
  std::vector<SentenceSpan> sentences;

  std::size_t word_count() const { return tokens.size(); }

  /// Tokenizes and segments `raw` in the given mode.
  static Document analyze(std::string id, std::string raw, Mode mode);
};

struct Posting {
  std::string doc_id;
  std::vector<std::size_t> positions;

  std::size_t count() const { return positions.size(); }
};

class InvertedIndex {
 public:
  /// Throws Error on duplicate document ids.
  static InvertedIndex build(std::span<const Document> corpus,
                             const Stemmer& stem = identity_stemmer());

  const std::vector<Posting>* postings(const std::string& term) const;

  /// Number of documents containing `term`.
  std::size_t document_frequency(const std::string& term) const;

  std::size_t term_count() const { return index_.size(); }
  std::size_t document_count() const { return n_documents_; }

  const std::map<std::string, std::vector<Posting>>& entries() const {
    return index_;
  }

 private:
  std::map<std::string, std::vector<Posting>> index_;
  std::size_t n_documents_ = 0;
};

/// log_base(N / n_t); throws Error when n_t == 0 or n_t > N.
double idf(std::size_t n_docs, std::size_t n_containing, double base = 10.0);

/// tf * idf document-side weight.
double doc_term_weight(std::size_t tf, double idf_value);

/// (0.5 + 0.5 * tf / max_tf) * idf; throws Error when max_tf == 0.
double query_term_weight(std::size_t tf, std::size_t max_tf, double idf_value);

}  // namespace uir::text

#endif  // UIR_TEXT_HPP
