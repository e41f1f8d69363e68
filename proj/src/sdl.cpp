#include "uir/sdl.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>

#include "uir/error.hpp"

namespace uir::sdl {

namespace {

const std::set<std::string> kAdverbs = {"also",    "then",  "thus", "moreover",
                                        "further", "never", "only"};
const std::set<std::string> kAuxiliaries = {"is",  "are",  "was",   "were",
                                            "am",  "be",   "been",  "being"};
const std::set<std::string> kPronouns = {"he", "she", "it", "they"};
const std::set<std::string> kDeterminers = {"a", "an", "the"};

/// Plural and possessive stems; two words are variants when any of
/// their stems coincide.
std::vector<std::string> variant_stems(const std::string& folded) {
  std::vector<std::string> out{folded};
  std::string w = folded;
  if (w.size() > 2 && w.compare(w.size() - 2, 2, "'s") == 0) {
    w.erase(w.size() - 2);
    out.push_back(w);
  }
  if (w.size() > 2 && w.back() == 's') {
    out.push_back(w.substr(0, w.size() - 1));
    if (w.size() > 3 && w[w.size() - 2] == 'e')
      out.push_back(w.substr(0, w.size() - 2));
  }
  return out;
}

bool variant_match(const std::string& a, const std::string& b) {
  for (const auto& sa : variant_stems(a))
    for (const auto& sb : variant_stems(b))
      if (sa == sb) return true;
  return false;
}

bool is_year(const std::string& w) {
  return w.size() == 4 && std::all_of(w.begin(), w.end(), [](unsigned char c) {
           return std::isdigit(c);
         });
}

std::vector<std::string> folded_tokens(const std::vector<text::Token>& toks) {
  std::vector<std::string> out;
  out.reserve(toks.size());
  for (const auto& t : toks) out.push_back(text::fold_case(t.text));
  return out;
}

/// Longest gazetteer entry starting at position i, or 0 when none.
std::size_t entity_match(const std::vector<std::string>& words, std::size_t i,
                         const std::vector<std::vector<std::string>>& entries) {
  std::size_t best = 0;
  for (const auto& entry : entries) {
    if (entry.empty() || entry.size() > words.size() - i) continue;
    bool ok = true;
    for (std::size_t k = 0; k < entry.size(); ++k)
      if (words[i + k] != entry[k]) {
        ok = false;
        break;
      }
    if (ok) best = std::max(best, entry.size());
  }
  return best;
}

std::vector<std::vector<std::string>> load_entry_file(
    const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open gazetteer file: " + path);
  std::vector<std::vector<std::string>> out;
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    auto toks = text::tokenize(line, text::Mode::Standard);
    if (toks.empty()) continue;
    std::vector<std::string> words;
    for (const auto& t : toks) words.push_back(t.text);
    out.push_back(std::move(words));
  }
  return out;
}

std::set<std::string> load_word_file(const std::string& path) {
  std::set<std::string> out;
  for (const auto& entry : load_entry_file(path))
    for (const auto& w : entry) out.insert(w);
  return out;
}

}  // namespace

std::string wh_type(WhTerm wh) {
  switch (wh) {
    case WhTerm::Who: return "PERSON";
    case WhTerm::What: return "ACTION/STATUS";
    case WhTerm::When: return "TIME";
    case WhTerm::Where: return "PLACE";
    case WhTerm::Why: return "REASON";
    case WhTerm::Which: return "NAME";
  }
  throw Error("unrecognized wh-term");
}

WhTerm wh_from_string(const std::string& word) {
  std::string w = text::fold_case(word);
  if (w == "who") return WhTerm::Who;
  if (w == "what") return WhTerm::What;
  if (w == "when") return WhTerm::When;
  if (w == "where") return WhTerm::Where;
  if (w == "why") return WhTerm::Why;
  if (w == "which") return WhTerm::Which;
  throw Error("unrecognized wh-term: " + word);
}

Gazetteer Gazetteer::load(const std::string& dir) {
  Gazetteer g;
  g.verbs = load_word_file(dir + "/verbs.txt");
  g.persons = load_entry_file(dir + "/persons.txt");
  g.places = load_entry_file(dir + "/places.txt");
  g.when_triggers = load_word_file(dir + "/when_triggers.txt");
  g.why_triggers = load_entry_file(dir + "/why_triggers.txt");
  return g;
}

std::string SDLSentence::span_text(const TokenSpan& span) const {
  if (tokens.empty() || span.start >= tokens.size()) return "";
  std::size_t end = std::min(span.end, tokens.size() - 1);
  std::size_t from = tokens[span.start].raw_begin;
  std::size_t to = tokens[end].raw_end;
  return raw.substr(from, to - from);
}

SDLSentence parse_sdl(const std::vector<text::Token>& tokens,
                      const std::string& raw, std::size_t source_index,
                      const Gazetteer& gaz) {
  SDLSentence s;
  s.source_index = source_index;
  s.raw = raw;
  s.tokens = tokens;
  if (tokens.empty()) {
    s.diagnostic = "empty sentence";
    return s;
  }

  auto words = folded_tokens(tokens);

  std::size_t verb = words.size();
  for (std::size_t i = 0; i < words.size(); ++i)
    if (gaz.verbs.count(words[i])) {
      verb = i;
      break;
    }
  if (verb == words.size()) {
    s.diagnostic = "no verb found, sentence unparseable";
    return s;
  }
  while (verb > 0 && kAdverbs.count(words[verb - 1])) --verb;
  if (verb == 0) {
    s.diagnostic = "no subject before the verb";
    return s;
  }

  auto set_slot = [&](Slot slot, std::size_t start, std::size_t end) {
    s.slots[static_cast<std::size_t>(slot)] = TokenSpan{start, end};
  };

  // agentive passive: <subject> <aux> ... <participle> ... by <agent>
  std::size_t aux = words.size(), by = words.size();
  for (std::size_t i = verb; i < words.size(); ++i) {
    if (aux == words.size() && kAuxiliaries.count(words[i])) aux = i;
    if (aux != words.size() && words[i] == "by" && i + 1 < words.size() &&
        i > aux + 1 && gaz.verbs.count(words[i - 1])) {
      by = i;
      break;
    }
  }
  if (by != words.size()) {
    s.voice_normalized = true;
    set_slot(Slot::Who, by + 1, words.size() - 1);  // the agent acts
    set_slot(Slot::What, aux + 1, by - 1);
    s.object_span = TokenSpan{0, verb - 1};  // original subject
    s.parsed = true;
    return s;
  }

  set_slot(Slot::Who, 0, verb - 1);

  // split the tail at trigger words; a location trigger directly after a
  // named entity stays inside the noun phrase ("Taj Mahal at Agra")
  std::size_t what_end = words.size() - 1;
  std::optional<std::size_t> when_at, where_at, why_at;
  std::size_t i = verb;
  while (i < words.size()) {
    if (std::size_t why_len = entity_match(words, i, gaz.why_triggers);
        !why_at && why_len > 0) {
      why_at = i;
      i += why_len;
      continue;
    }
    if (!when_at && i > verb &&
        (gaz.when_triggers.count(words[i]) || is_year(words[i]))) {
      when_at = i;
      ++i;
      continue;
    }
    if (!where_at && (words[i] == "at" || words[i] == "in") && i > verb &&
        i + 1 < words.size() && entity_match(words, i + 1, gaz.places) > 0) {
      bool after_entity = false;  // "Taj Mahal at Agra" stays one phrase
      for (std::size_t back = verb; back < i; ++back) {
        std::size_t len = entity_match(words, back, gaz.places);
        if (len == 0) len = entity_match(words, back, gaz.persons);
        if (len > 0 && back + len == i) after_entity = true;
      }
      if (!after_entity) {
        where_at = i;
        ++i;
        continue;
      }
    }
    ++i;
  }

  std::vector<std::pair<std::size_t, Slot>> cuts;
  if (when_at) cuts.emplace_back(*when_at, Slot::When);
  if (where_at) cuts.emplace_back(*where_at, Slot::Where);
  if (why_at) cuts.emplace_back(*why_at, Slot::Why);
  std::sort(cuts.begin(), cuts.end());
  for (std::size_t c = 0; c < cuts.size(); ++c) {
    std::size_t end =
        c + 1 < cuts.size() ? cuts[c + 1].first - 1 : words.size() - 1;
    set_slot(cuts[c].second, cuts[c].first, end);
  }
  if (!cuts.empty()) what_end = cuts.front().first - 1;
  set_slot(Slot::What, verb, what_end);

  s.parsed = true;
  return s;
}

std::vector<SDLSentence> parse_document(const text::Document& doc,
                                        const Gazetteer& gaz) {
  std::vector<SDLSentence> out;
  for (const auto& span : doc.sentences) {
    std::size_t from = doc.tokens[span.start].raw_begin;
    std::size_t to = doc.tokens[span.end].raw_end;
    std::string raw = doc.raw.substr(from, to - from);
    std::vector<text::Token> toks;
    for (std::size_t i = span.start; i <= span.end; ++i) {
      text::Token t = doc.tokens[i];
      t.position = i - span.start;
      t.raw_begin -= from;
      t.raw_end -= from;
      toks.push_back(std::move(t));
    }
    out.push_back(parse_sdl(toks, raw, span.index, gaz));
  }

  // one-step pronoun resolution, chained through earlier resolutions
  for (std::size_t i = 0; i < out.size(); ++i) {
    SDLSentence& s = out[i];
    if (!s.parsed || !s.slot(Slot::Who)) continue;
    const TokenSpan& who = *s.slot(Slot::Who);
    if (who.start != who.end) continue;
    std::string w = text::fold_case(s.tokens[who.start].text);
    if (!kPronouns.count(w)) continue;
    for (std::size_t back = i; back-- > 0;) {
      const SDLSentence& prev = out[back];
      if (!prev.parsed || !prev.slot(Slot::Who)) continue;
      if (!prev.resolved_who_tokens.empty()) {
        s.resolved_who_tokens = prev.resolved_who_tokens;
        s.resolved_who_raw = prev.resolved_who_raw;
      } else {
        const TokenSpan& pwho = *prev.slot(Slot::Who);
        for (std::size_t k = pwho.start; k <= pwho.end; ++k)
          s.resolved_who_tokens.push_back(
              text::fold_case(prev.tokens[k].text));
        s.resolved_who_raw = prev.span_text(pwho);
      }
      break;
    }
  }
  return out;
}

Question parse_question(const std::string& question_text, const Gazetteer& gaz,
                        const lexicon::FuzzyThesaurus& thesaurus,
                        const text::Stoplist& stoplist, double cutoff) {
  Question q;
  q.raw = question_text;
  auto tokens = text::tokenize(question_text, text::Mode::Standard);
  if (tokens.empty()) throw Error("empty question");
  auto words = folded_tokens(tokens);

  std::size_t wh_at = words.size();
  for (std::size_t i = 0; i < words.size(); ++i) {
    try {
      q.wh = wh_from_string(words[i]);
      wh_at = i;
      break;
    } catch (const Error&) {
    }
  }
  if (wh_at == words.size())
    throw Error("question carries no wh-term: " + question_text);
  q.answer_type = wh_type(q.wh);

  // a passive question is re-ordered into active voice so the agent
  // leads and the wh-phrase becomes the object
  std::size_t aux = words.size(), by = words.size();
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (aux == words.size() && kAuxiliaries.count(words[i])) aux = i;
    if (aux != words.size() && words[i] == "by" && i + 1 < words.size() &&
        i > aux && gaz.verbs.count(words[i - 1])) {
      by = i;
      break;
    }
  }
  std::vector<std::string> ordered;
  bool wh_in_object = false;
  if (by != words.size()) {
    for (std::size_t i = by + 1; i < words.size(); ++i)
      ordered.push_back(words[i]);
    for (std::size_t i = aux + 1; i < by; ++i) ordered.push_back(words[i]);
    for (std::size_t i = 0; i < aux; ++i) ordered.push_back(words[i]);
    wh_in_object = wh_at < aux;
  } else {
    ordered = words;
  }

  switch (q.wh) {
    case WhTerm::Who: q.questioned_slot = Slot::Who; break;
    case WhTerm::Which:
      q.questioned_slot = wh_in_object ? Slot::What : Slot::Who;
      break;
    case WhTerm::What: q.questioned_slot = Slot::What; break;
    case WhTerm::When: q.questioned_slot = Slot::When; break;
    case WhTerm::Where: q.questioned_slot = Slot::Where; break;
    case WhTerm::Why: q.questioned_slot = Slot::Why; break;
  }

  // keywords: drop wh-terms and stopwords, join named-entity phrases
  std::vector<std::string> kept;
  std::vector<bool> is_phrase_start;
  std::size_t i = 0;
  std::vector<KeywordGroup> groups;
  while (i < ordered.size()) {
    std::size_t plen = entity_match(ordered, i, gaz.persons);
    if (plen == 0) plen = entity_match(ordered, i, gaz.places);
    if (plen > 1) {
      KeywordGroup kg;
      for (std::size_t k = 0; k < plen; ++k) kg.phrase.push_back(ordered[i + k]);
      groups.push_back(std::move(kg));
      i += plen;
      continue;
    }
    const std::string& w = ordered[i];
    bool is_wh = false;
    try {
      wh_from_string(w);
      is_wh = true;
    } catch (const Error&) {
    }
    if (!is_wh && !text::is_stopword(stoplist, w)) {
      KeywordGroup kg;
      kg.phrase.push_back(w);
      for (const auto& [term, degree] : thesaurus.neighbours(w))
        if (degree >= cutoff) kg.synonyms.push_back(term);
      groups.push_back(std::move(kg));
    }
    ++i;
  }
  q.keyword_groups = std::move(groups);
  return q;
}

namespace {

struct StreamWord {
  std::string word;       // folded
  std::size_t order;      // monotone position for order agreement
};

/// Token stream used for matching: the sentence's words with a pronoun
/// subject replaced by its resolved antecedent.
std::vector<StreamWord> match_stream(const SDLSentence& s) {
  std::vector<StreamWord> out;
  std::optional<std::size_t> pronoun_at;
  if (s.slot(Slot::Who) && !s.resolved_who_tokens.empty()) {
    const TokenSpan& who = *s.slot(Slot::Who);
    if (who.start == who.end) pronoun_at = who.start;
  }
  for (std::size_t i = 0; i < s.tokens.size(); ++i) {
    if (pronoun_at && i == *pronoun_at) {
      for (const auto& w : s.resolved_who_tokens)
        out.push_back(StreamWord{w, i});
      continue;
    }
    out.push_back(StreamWord{text::fold_case(s.tokens[i].text), i});
  }
  return out;
}

struct GroupMatch {
  bool matched = false;
  bool exact = false;
  std::size_t position = 0;
};

GroupMatch match_group(const KeywordGroup& group,
                       const std::vector<StreamWord>& stream) {
  GroupMatch m;
  // exact phrase first
  for (std::size_t i = 0; i + group.phrase.size() <= stream.size(); ++i) {
    bool ok = true;
    for (std::size_t k = 0; k < group.phrase.size(); ++k)
      if (stream[i + k].word != group.phrase[k]) {
        ok = false;
        break;
      }
    if (ok) return GroupMatch{true, true, stream[i].order};
  }
  // synonyms, then morphological variants
  for (std::size_t i = 0; i < stream.size(); ++i)
    for (const auto& syn : group.synonyms)
      if (stream[i].word == syn) return GroupMatch{true, false, stream[i].order};
  if (group.phrase.size() == 1) {
    const std::string& want = group.phrase.front();
    for (std::size_t i = 0; i < stream.size(); ++i)
      if (variant_match(stream[i].word, want))
        return GroupMatch{true, false, stream[i].order};
    for (const auto& syn : group.synonyms)
      for (std::size_t i = 0; i < stream.size(); ++i)
        if (variant_match(stream[i].word, syn))
          return GroupMatch{true, false, stream[i].order};
  }
  return m;
}

double kendall_agreement(const std::vector<std::size_t>& positions) {
  if (positions.size() < 2) return 1.0;
  std::size_t concordant = 0, discordant = 0, pairs = 0;
  for (std::size_t i = 0; i < positions.size(); ++i)
    for (std::size_t j = i + 1; j < positions.size(); ++j) {
      ++pairs;
      if (positions[i] < positions[j]) ++concordant;
      else if (positions[i] > positions[j]) ++discordant;
    }
  double tau = (static_cast<double>(concordant) -
                static_cast<double>(discordant)) /
               static_cast<double>(pairs);
  return (tau + 1.0) / 2.0;
}

std::string join_phrase(const std::vector<std::string>& words) {
  std::string out;
  for (const auto& w : words) {
    if (!out.empty()) out += ' ';
    out += w;
  }
  return out;
}

}  // namespace

bool AnswerCandidate::better_than(const AnswerCandidate& other) const {
  if (group_coverage != other.group_coverage)
    return group_coverage > other.group_coverage;
  if (order_agreement != other.order_agreement)
    return order_agreement > other.order_agreement;
  return exactness > other.exactness;
}

bool AnswerCandidate::same_score(const AnswerCandidate& other) const {
  return group_coverage == other.group_coverage &&
         order_agreement == other.order_agreement &&
         exactness == other.exactness;
}

std::vector<AnswerCandidate> rank_answers(
    const Question& question, const std::vector<SDLSentence>& sentences) {
  std::vector<AnswerCandidate> out;
  if (question.keyword_groups.empty()) return out;

  for (const auto& s : sentences) {
    if (!s.parsed) continue;
    auto stream = match_stream(s);
    AnswerCandidate c;
    c.sentence = &s;
    std::vector<std::size_t> positions;
    std::size_t exact = 0;
    for (const auto& group : question.keyword_groups) {
      GroupMatch m = match_group(group, stream);
      if (!m.matched) continue;
      positions.push_back(m.position);
      if (m.exact) ++exact;
      c.matched_keywords.push_back(join_phrase(group.phrase));
    }
    if (positions.empty()) continue;
    c.group_coverage = static_cast<double>(positions.size()) /
                       static_cast<double>(question.keyword_groups.size());
    c.order_agreement = kendall_agreement(positions);
    c.exactness =
        static_cast<double>(exact) / static_cast<double>(positions.size());
    out.push_back(std::move(c));
  }

  std::stable_sort(out.begin(), out.end(),
                   [](const AnswerCandidate& a, const AnswerCandidate& b) {
                     return a.better_than(b);
                   });
  return out;
}

namespace {

struct Entity {
  std::size_t start;
  std::size_t len;
};

std::vector<Entity> entities_in(const std::vector<std::string>& words,
                                std::size_t from, std::size_t to,
                                const std::vector<std::vector<std::string>>&
                                    entries) {
  std::vector<Entity> out;
  for (std::size_t i = from; i <= to && i < words.size();) {
    std::size_t len = entity_match(words, i, entries);
    if (len > 0 && i + len - 1 <= to) {
      out.push_back(Entity{i, len});
      i += len;
    } else {
      ++i;
    }
  }
  return out;
}

bool entity_in_question(const std::vector<std::string>& entity_words,
                        const Question& q) {
  std::set<std::string> keyword_words;
  for (const auto& g : q.keyword_groups)
    for (const auto& w : g.phrase) keyword_words.insert(w);
  for (const auto& w : entity_words)
    if (!keyword_words.count(w)) return false;
  return true;
}

std::vector<std::vector<std::string>> entity_lists_for(
    const Question& q, const Gazetteer& gaz) {
  std::vector<std::vector<std::string>> entries;
  if (q.answer_type == "PERSON" || q.answer_type == "NAME")
    entries.insert(entries.end(), gaz.persons.begin(), gaz.persons.end());
  if (q.answer_type == "NAME" || q.answer_type == "PLACE")
    entries.insert(entries.end(), gaz.places.begin(), gaz.places.end());
  return entries;
}

std::string trim_outer(const std::string& s) {
  auto b = s.find_first_not_of(" \t\n,;");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\n,;.");
  return s.substr(b, e - b + 1);
}

/// Object structures for an action answer: split at "and <determiner>",
/// trim appositives opened by ", the/which/who/that", drop a leading
/// "the", and keep only fragments anchored by a named entity.
std::vector<std::string> object_structures(const SDLSentence& s,
                                           TokenSpan object,
                                           const Gazetteer& gaz) {
  auto words = folded_tokens(s.tokens);
  std::vector<TokenSpan> fragments;
  std::size_t start = object.start;
  for (std::size_t i = object.start; i <= object.end; ++i) {
    if (words[i] == "and" && i + 1 <= object.end &&
        kDeterminers.count(words[i + 1]) && i > start) {
      fragments.push_back(TokenSpan{start, i - 1});
      start = i + 1;
    }
  }
  if (start <= object.end) fragments.push_back(TokenSpan{start, object.end});

  static const std::set<std::string> kAppositive = {"the", "which", "who",
                                                    "that"};
  std::vector<std::string> out;
  for (TokenSpan frag : fragments) {
    for (std::size_t i = frag.start + 1; i <= frag.end; ++i) {
      std::string between = s.raw.substr(
          s.tokens[i - 1].raw_end,
          s.tokens[i].raw_begin - s.tokens[i - 1].raw_end);
      if (between.find(',') != std::string::npos &&
          kAppositive.count(words[i])) {
        frag.end = i - 1;
        break;
      }
    }
    if (words[frag.start] == "the" && frag.start < frag.end) ++frag.start;

    std::vector<std::vector<std::string>> anchors = gaz.persons;
    anchors.insert(anchors.end(), gaz.places.begin(), gaz.places.end());
    if (entities_in(words, frag.start, frag.end, anchors).empty()) continue;
    out.push_back(trim_outer(s.span_text(frag)));
  }
  return out;
}

}  // namespace

std::vector<std::string> extract_answers(const Question& question,
                                         const AnswerCandidate& candidate,
                                         const Gazetteer& gaz) {
  const SDLSentence& s = *candidate.sentence;
  std::vector<std::string> answers;
  auto words = folded_tokens(s.tokens);

  if (question.answer_type == "PERSON" || question.answer_type == "NAME") {
    auto entries = entity_lists_for(question, gaz);
    const auto& who = s.slot(Slot::Who);
    if (who) {
      if (!s.resolved_who_tokens.empty() && who->start == who->end) {
        if (!entity_in_question(s.resolved_who_tokens, question)) {
          auto hits =
              entities_in(s.resolved_who_tokens, 0,
                          s.resolved_who_tokens.size() - 1, entries);
          if (!hits.empty()) {
            answers.push_back(s.resolved_who_raw);
            return answers;
          }
        }
      } else {
        for (const Entity& e : entities_in(words, who->start, who->end,
                                           entries)) {
          std::vector<std::string> ew(words.begin() + e.start,
                                      words.begin() + e.start + e.len);
          if (entity_in_question(ew, question)) continue;
          answers.push_back(
              s.span_text(TokenSpan{e.start, e.start + e.len - 1}));
        }
        if (!answers.empty()) return answers;
      }
    }
    // the questioned entity sits on the other side of the verb; take the
    // sentence as re-organized ("Nur Jahan | was married to Jahangir")
    const auto& what = s.slot(Slot::What);
    if (what) {
      for (const Entity& e :
           entities_in(words, what->start, what->end, entries)) {
        std::vector<std::string> ew(words.begin() + e.start,
                                    words.begin() + e.start + e.len);
        if (entity_in_question(ew, question)) continue;
        answers.push_back(
            s.span_text(TokenSpan{e.start, e.start + e.len - 1}));
      }
    }
    return answers;
  }

  if (question.answer_type == "ACTION/STATUS") {
    TokenSpan object;
    if (s.object_span) {
      object = *s.object_span;
    } else {
      const auto& what = s.slot(Slot::What);
      if (!what) return answers;
      std::size_t start = what->start;
      while (start <= what->end &&
             (gaz.verbs.count(words[start]) || kAdverbs.count(words[start]) ||
              kAuxiliaries.count(words[start])))
        ++start;
      if (start > what->end) return answers;  // no object to report
      object = TokenSpan{start, what->end};
    }
    return object_structures(s, object, gaz);
  }

  Slot spans[] = {Slot::When, Slot::Where, Slot::Why};
  for (Slot slot : spans) {
    if ((question.answer_type == "TIME" && slot != Slot::When) ||
        (question.answer_type == "PLACE" && slot != Slot::Where) ||
        (question.answer_type == "REASON" && slot != Slot::Why))
      continue;
    if (const auto& span = s.slot(slot))
      answers.push_back(trim_outer(s.span_text(*span)));
  }
  return answers;
}

QaResult answer(const Question& question,
                const std::vector<const text::Document*>& docs,
                const std::vector<double>& relevance, const Gazetteer& gaz) {
  QaResult result;
  if (docs.size() != relevance.size())
    throw Error("answer: one relevance value per document required");

  auto merge = [&](std::vector<std::string>& into,
                   const std::vector<std::string>& from) {
    for (const auto& a : from) {
      bool dup = false;
      for (const auto& b : into)
        if (text::fold_case(a) == text::fold_case(b)) dup = true;
      if (!dup) into.push_back(a);
    }
  };

  std::size_t i = 0;
  while (i < docs.size()) {
    // documents of (near) equal relevance answer together
    std::size_t j = i;
    while (j < docs.size() && std::abs(relevance[j] - relevance[i]) < 1e-9)
      ++j;

    std::vector<std::string> tier_answers;
    for (std::size_t d = i; d < j; ++d) {
      auto sentences = parse_document(*docs[d], gaz);
      for (const auto& s : sentences)
        if (!s.parsed && !s.diagnostic.empty())
          result.diagnostics.push_back(docs[d]->id + " sentence " +
                                       std::to_string(s.source_index) + ": " +
                                       s.diagnostic);
      auto ranked = rank_answers(question, sentences);
      if (ranked.empty()) continue;
      std::vector<std::string> doc_answers;
      for (const auto& c : ranked) {
        if (!c.same_score(ranked.front())) break;
        merge(doc_answers, extract_answers(question, c, gaz));
      }
      merge(tier_answers, doc_answers);
    }
    if (!tier_answers.empty()) {
      result.answers = std::move(tier_answers);
      return result;
    }
    i = j;
  }
  result.diagnostics.push_back("no candidate sentence scored above zero");
  return result;
}

}  // namespace uir::sdl
