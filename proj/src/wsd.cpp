#include "uir/wsd.hpp"

#include "uir/error.hpp"

namespace uir::wsd {

int overlap(const lexicon::WordBag& sense_side,
            const lexicon::WordBag& context_bag) {
  int total = 0;
  for (const auto& [word, _] : context_bag) {
    auto it = sense_side.find(word);
    if (it != sense_side.end()) total += it->second;
  }
  return total;
}

lexicon::WordBag context_bag(const lexicon::Lexicon& lex,
                             const std::vector<std::string>& context_words,
                             const text::Stoplist& stoplist) {
  lexicon::WordBag bag;
  for (const auto& word : context_words) {
    for (const lexicon::Sense* sense : lex.all_senses(word)) {
      for (const auto& [w, n] : sense->synset_bag())
        if (!text::is_stopword(stoplist, w)) bag[w] += n;
      for (const auto& [w, n] : sense->gloss) bag[w] += n;
    }
  }
  return bag;
}

Disambiguation disambiguate(const lexicon::Lexicon& lex,
                            const std::vector<std::string>& query_words,
                            const std::string& target,
                            const text::Stoplist& stoplist,
                            lexicon::Pos pos) {
  const auto& senses = lex.senses(target, pos);
  if (senses.empty())
    throw Error("wsd: no senses for '" + target + "' (" +
                lexicon::to_string(pos) + ")");

  std::string folded_target = text::fold_case(target);
  Disambiguation result;
  for (const auto& word : query_words) {
    std::string folded = text::fold_case(word);
    if (folded == folded_target) continue;
    if (text::is_stopword(stoplist, folded)) continue;
    if (!lex.contains(folded)) continue;  // stands in for POS tagging
    result.context_words.push_back(folded);
  }

  lexicon::WordBag bag = context_bag(lex, result.context_words, stoplist);

  int best_total = 0;
  int best_sense = 1;
  for (const lexicon::Sense& sense : senses) {
    SenseScore score;
    score.sense_no = sense.sense_no;
    lexicon::WordBag syn_gloss = sense.synset_bag();
    for (const auto& [w, n] : sense.gloss) syn_gloss[w] += n;
    score.synset_overlap = overlap(syn_gloss, bag);
    score.hyponym_overlap = overlap(sense.hyponym_words, bag);
    score.hypernym_overlap = overlap(sense.hypernym_words, bag);
    if (score.total() > best_total) {
      best_total = score.total();
      best_sense = sense.sense_no;
    }
    result.scores.push_back(score);
  }

  // zero maximum -> most frequent sense
  result.sense_no = best_total > 0 ? best_sense : 1;
  return result;
}

}  // namespace uir::wsd
