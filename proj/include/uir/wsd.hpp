#ifndef UIR_WSD_HPP
#define UIR_WSD_HPP

#include <string>
#include <vector>

#include "uir/lexicon.hpp"
#include "uir/text.hpp"

namespace uir::wsd {

struct SenseScore {
  int sense_no = 0;
  int synset_overlap = 0;    // t1: synset + gloss vs context bag
  int hyponym_overlap = 0;   // t2
  int hypernym_overlap = 0;  // t3

  int total() const {
    return synset_overlap + hyponym_overlap + hypernym_overlap;
  }
};

struct Disambiguation {
  int sense_no = 1;
  std::vector<SenseScore> scores;  // one per sense, in sense_no order
  std::vector<std::string> context_words;
};

/// Occurrences in the sense-side multiset of every distinct word present
/// in the context bag.  Multiplicity lives on the sense side only, which
/// is the reading that produces the worked counts.
int overlap(const lexicon::WordBag& sense_side,
            const lexicon::WordBag& context_bag);

/// Context bag: synsets and glosses of every sense of every context word,
/// stopword-filtered.
lexicon::WordBag context_bag(const lexicon::Lexicon& lex,
                             const std::vector<std::string>& context_words,
                             const text::Stoplist& stoplist);

/// Gloss-overlap disambiguation of `target` inside `query`.  Context
/// words are the query words (minus the target) that have a lexicon
/// entry.  Highest total overlap wins; a zero maximum falls back to sense
/// number 1, as do ties at lower sense numbers.  Throws Error when the
/// target has no senses.
Disambiguation disambiguate(const lexicon::Lexicon& lex,
                            const std::vector<std::string>& query_words,
                            const std::string& target,
                            const text::Stoplist& stoplist,
                            lexicon::Pos pos = lexicon::Pos::Noun);

}  // namespace uir::wsd

#endif  // UIR_WSD_HPP
