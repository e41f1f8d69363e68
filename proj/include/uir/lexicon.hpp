#ifndef UIR_LEXICON_HPP
#define UIR_LEXICON_HPP

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "uir/text.hpp"

namespace uir::lexicon {

enum class Pos { Noun, Verb, Adj, Adv };

Pos pos_from_string(const std::string& s);
std::string to_string(Pos pos);

/// Word multiset; overlap counting needs multiplicities.
using WordBag = std::map<std::string, int>;

WordBag bag_from_text(const std::string& free_text,
                      const text::Stoplist& stoplist);

struct Sense {
  std::string word;
  Pos pos = Pos::Noun;
  int sense_no = 1;  // 1 = most frequent
  std::vector<std::string> synset;
  std::string gloss_text;
  WordBag gloss;           // tokenized, stopword-filtered, folded
  WordBag hypernym_words;  // superordinate glosses + labels
  WordBag hyponym_words;   // subordinate glosses + labels

  WordBag synset_bag() const;
};

class Lexicon {
 public:
  void add(Sense sense);

  /// Senses in sense_no order; empty for unknown words, never fails.
  const std::vector<Sense>& senses(const std::string& word, Pos pos) const;

  /// Senses of `word` for every part of speech, noun first.
  std::vector<const Sense*> all_senses(const std::string& word) const;

  bool contains(const std::string& word) const;

  /// Orders each entry's senses by sense number.
  void sort_senses();

  /// Validates sense_no contiguity and word-in-synset; throws Error.
  void validate() const;

  std::size_t size() const { return entries_.size(); }

  const std::map<std::pair<std::string, Pos>, std::vector<Sense>>& entries()
      const {
    return entries_;
  }

 private:
  std::map<std::pair<std::string, Pos>, std::vector<Sense>> entries_;
};

/// Line-based lexicon format:
///   sense <word> <pos> <sense_no>
///   syn <word> ...
///   gloss <free text>
///   hyper <free text>
///   hypo <free text>
///   end
Lexicon load_lexicon(const std::string& path, const text::Stoplist& stoplist);

void save_lexicon(const Lexicon& lexicon, const std::string& path);

/// Reflexive symmetric relation term x term -> [0,1].
class FuzzyThesaurus {
 public:
  /// Stores both orientations; degree(x,x) is implicitly 1.
  void set_degree(const std::string& a, const std::string& b, double degree);

  double degree(const std::string& a, const std::string& b) const;

  /// Neighbours of `term` with their degrees, strongest first.
  std::vector<std::pair<std::string, double>> neighbours(
      const std::string& term) const;

  const std::set<std::string>& terms() const { return terms_; }

  const std::map<std::pair<std::string, std::string>, double>& pairs() const {
    return pairs_;
  }

 private:
  std::map<std::pair<std::string, std::string>, double> pairs_;
  std::set<std::string> terms_;
};

/// CSV lines "term1, term2, degree"; '#' comments.  A repeated pair keeps
/// the last degree and warns on stderr.
FuzzyThesaurus load_thesaurus(const std::string& path);

/// Max-min transitive closure: degree'(x,z) = max over paths of the
/// minimum edge degree.  Degrees never decrease.
FuzzyThesaurus close_transitive(const FuzzyThesaurus& thesaurus);

struct TermGroup {
  std::string head;  // carries weight 1 inside its own group
  std::vector<std::pair<std::string, double>> terms;
};

struct ExpandedQuery {
  std::string query_id;
  std::vector<TermGroup> groups;

  std::size_t group_count() const { return groups.size(); }
};

/// CSV lines "query_id, group_index, term, weight".  The first term of a
/// group is its head and must have weight 1; weights outside (0,1] and
/// duplicate (query,group,term) rows are errors.
std::map<std::string, ExpandedQuery> load_expanded_queries(
    const std::string& path);

/// One group per keyword: the keyword itself at weight 1 plus thesaurus
/// neighbours with degree >= cutoff.
ExpandedQuery expand_question_terms(const std::vector<std::string>& keywords,
                                    const FuzzyThesaurus& thesaurus,
                                    double cutoff = 0.3);

}  // namespace uir::lexicon

#endif  // UIR_LEXICON_HPP
