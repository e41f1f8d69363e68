#ifndef UIR_SDL_HPP
#define UIR_SDL_HPP

#include <array>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "uir/lexicon.hpp"
#include "uir/text.hpp"

namespace uir::sdl {

enum class Slot { Who = 0, What, When, Where, Why };
constexpr std::size_t kSlotCount = 5;

enum class WhTerm { Who, What, When, Where, Why, Which };

/// Table of wh-terms and answer types: who -> PERSON, what ->
/// ACTION/STATUS, when -> TIME, where -> PLACE, why -> REASON,
/// which -> NAME.  Unknown wh-terms are an error.
std::string wh_type(WhTerm wh);
WhTerm wh_from_string(const std::string& word);

struct Gazetteer {
  std::set<std::string> verbs;                          // folded
  std::vector<std::vector<std::string>> persons;        // folded word seqs
  std::vector<std::vector<std::string>> places;
  std::set<std::string> when_triggers;
  std::vector<std::vector<std::string>> why_triggers;

  /// Reads verbs.txt, persons.txt, places.txt, when_triggers.txt and
  /// why_triggers.txt from `dir`; one entry per line, '#' comments.
  static Gazetteer load(const std::string& dir);
};

/// Inclusive token range within one sentence.
struct TokenSpan {
  std::size_t start = 0;
  std::size_t end = 0;
};

struct SDLSentence {
  std::size_t source_index = 0;
  std::string raw;                      // the sentence's own text
  std::vector<text::Token> tokens;      // offsets relative to raw
  std::array<std::optional<TokenSpan>, kSlotCount> slots;
  bool parsed = false;                  // false: no verb, sentence skipped
  bool voice_normalized = false;
  std::optional<TokenSpan> object_span; // original subject, when passivized
  std::string diagnostic;

  // pronoun subjects resolved to the nearest preceding WHO span
  std::vector<std::string> resolved_who_tokens;  // folded
  std::string resolved_who_raw;

  const std::optional<TokenSpan>& slot(Slot s) const {
    return slots[static_cast<std::size_t>(s)];
  }
  std::string span_text(const TokenSpan& span) const;
};

/// Maps one declarative sentence onto wh-slots.  WHO is the span before
/// the main verb; WHEN/WHERE/WHY split off the tail at trigger words; a
/// "by"-agent passive is normalized first.
SDLSentence parse_sdl(const std::vector<text::Token>& tokens,
                      const std::string& raw, std::size_t source_index,
                      const Gazetteer& gaz);

/// Parses every sentence of a standard-mode document and resolves
/// sentence-initial pronoun subjects.
std::vector<SDLSentence> parse_document(const text::Document& doc,
                                        const Gazetteer& gaz);

struct KeywordGroup {
  std::vector<std::string> phrase;    // folded head words (one or more)
  std::vector<std::string> synonyms;  // folded, thesaurus-expanded
};

struct Question {
  WhTerm wh = WhTerm::Who;
  std::string answer_type;
  Slot questioned_slot = Slot::Who;
  std::vector<KeywordGroup> keyword_groups;  // in question order
  std::string raw;
};

Question parse_question(const std::string& question_text, const Gazetteer& gaz,
                        const lexicon::FuzzyThesaurus& thesaurus,
                        const text::Stoplist& stoplist, double cutoff = 0.3);

struct AnswerCandidate {
  const SDLSentence* sentence = nullptr;
  double group_coverage = 0.0;   // matched groups / total groups
  double order_agreement = 0.0;  // Kendall agreement in [0,1]
  double exactness = 0.0;        // exact matches / matched groups
  std::vector<std::string> matched_keywords;

  /// Lexicographic comparison of the three ranking criteria.
  bool better_than(const AnswerCandidate& other) const;
  bool same_score(const AnswerCandidate& other) const;
};

/// Candidates with at least one keyword match, best first; ties keep
/// sentence order.
std::vector<AnswerCandidate> rank_answers(
    const Question& question, const std::vector<SDLSentence>& sentences);

/// Answer spans extracted from one candidate, already reduced to strings
/// (named entities for person/name questions, object structures for
/// action questions, trigger spans otherwise).
std::vector<std::string> extract_answers(const Question& question,
                                         const AnswerCandidate& candidate,
                                         const Gazetteer& gaz);

struct QaResult {
  std::vector<std::string> answers;
  std::vector<std::string> diagnostics;
};

/// Browse phase over fetched documents.  Documents of equal relevance are
/// answered together and their sub-answers merged (deduplicated, order
/// preserved); lower tiers are consulted only when a tier yields nothing.
QaResult answer(const Question& question,
                const std::vector<const text::Document*>& docs,
                const std::vector<double>& relevance, const Gazetteer& gaz);

}  // namespace uir::sdl

#endif  // UIR_SDL_HPP
