// Command-line front end: indexing, fuzzy / Bayesian / Dempster-Shafer
// retrieval, sentence extraction, word-sense disambiguation, question
// answering and evaluation over the bundled data.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <iostream>

#include "uir/bayes.hpp"
#include "uir/corpus.hpp"
#include "uir/ds.hpp"
#include "uir/error.hpp"
#include "uir/fuzzy.hpp"
#include "uir/lexicon.hpp"
#include "uir/metrics.hpp"
#include "uir/sdl.hpp"
#include "uir/text.hpp"
#include "uir/wsd.hpp"

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;
using namespace uir;

namespace {

// exit codes: 0 ok, 1 failure, 2 usage, 3 bad query id, 4 missing file
constexpr int kExitError = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBadQuery = 3;
constexpr int kExitMissingFile = 4;

struct Options {
  std::string data_dir;
  std::string mode = "replica";
  std::string format = "table";
  double threshold = 0.20;
};

text::Mode parse_mode(const std::string& mode) {
  if (mode == "replica") return text::Mode::Replica;
  if (mode == "standard") return text::Mode::Standard;
  throw Error("unknown mode: " + mode + " (use replica|standard)");
}

bayes::Matching matching_for(text::Mode mode) {
  return mode == text::Mode::Replica ? bayes::Matching::ReplicaExact
                                     : bayes::Matching::Folded;
}

std::string resolve_data_dir(const std::string& flag) {
  if (!flag.empty()) return flag;
  if (const char* env = std::getenv("UIR_DATA_DIR")) return env;
  return "data";
}

/// Look for `name` as given, then under the data directory fallbacks.
std::string resolve_file(const std::string& name, const Options& opt,
                         const std::string& subdir) {
  if (fs::exists(name)) return name;
  fs::path alt = fs::path(opt.data_dir) / subdir / name;
  if (fs::exists(alt)) return alt.string();
  return name;  // let the loader report the failure
}

std::string normalize_query_id(const std::string& id) {
  return id.empty() || id[0] == 'q' ? id : "q" + id;
}

const lexicon::ExpandedQuery& pick_query(
    const std::map<std::string, lexicon::ExpandedQuery>& queries,
    const std::string& raw_id) {
  auto it = queries.find(normalize_query_id(raw_id));
  if (it == queries.end()) {
    std::cout << "Wrong query number, it should be 1-" << queries.size()
              << "\n";
    std::exit(kExitBadQuery);
  }
  return it->second;
}

int run_index(const Options& opt, const std::string& corpus_path) {
  auto corpus = load_corpus(corpus_path, parse_mode(opt.mode));
  auto index = text::InvertedIndex::build(corpus);
  if (opt.format == "jsonl") {
    for (const auto& [term, postings] : index.entries())
      for (const auto& p : postings) {
        json row{{"term", term}, {"doc", p.doc_id}, {"count", p.count()},
                 {"positions", p.positions}};
        std::cout << row.dump() << "\n";
      }
  } else {
    std::printf("%-25s %-15s %s\n", "Term", "Document", "Count");
    for (const auto& [term, postings] : index.entries())
      for (const auto& p : postings)
        std::printf("%-25s %-15s %zu\n", term.c_str(), p.doc_id.c_str(),
                    p.count());
  }
  return 0;
}

int run_retrieve_fuzzy(const Options& opt, const std::string& query_file,
                       const std::string& thesaurus_file,
                       const std::string& relevance_file, std::size_t top_k,
                       double min_degree) {
  auto q = fuzzy::load_query_csv(resolve_file(query_file, opt, "fuzzy"));
  auto t = fuzzy::load_relation_csv(resolve_file(thesaurus_file, opt, "fuzzy"));
  auto r = fuzzy::load_relation_csv(resolve_file(relevance_file, opt, "fuzzy"));
  auto result = fuzzy::fuzzy_retrieve(q, t, r);
  auto ranking = fuzzy::present(result.document_degrees, top_k, min_degree);
  if (opt.format == "jsonl") {
    for (const auto& [doc, degree] : ranking) {
      json row{{"doc", doc}, {"degree", degree}};
      std::cout << row.dump() << "\n";
    }
  } else {
    std::printf("%-15s %s\n", "Document", "Degree");
    for (const auto& [doc, degree] : ranking)
      std::printf("%-15s %.6f\n", doc.c_str(), degree);
  }
  return 0;
}

int run_retrieve_bayes(const Options& opt, const std::string& query_id,
                       const std::string& doclist, const std::string& agg) {
  auto queries = lexicon::load_expanded_queries(
      fs::path(opt.data_dir) / "queries/table_6_1.csv");
  const auto& query = pick_query(queries, query_id);

  text::Mode mode = parse_mode(opt.mode);
  auto corpus = load_corpus(resolve_file(doclist, opt, "corpus"), mode);
  auto mode_agg = agg == "product" ? bayes::Aggregation::ProductOverGroups
                                   : bayes::Aggregation::MinOverGroups;
  auto ranked = bayes::rank_documents(corpus, query, mode_agg, opt.threshold,
                                      matching_for(mode));
  if (opt.format == "jsonl") {
    for (const auto& s : ranked) {
      json row{{"doc", s.doc_id},
               {"rf", s.rf},
               {"rf_e4", s.rf * 1e4},
               {"group_weights", s.group_weights}};
      std::cout << row.dump() << "\n";
    }
  } else {
    // ranking-weight table in the reference layout
    std::printf("Document Name  Ranking weight\n=====\n");
    for (const auto& s : ranked)
      std::printf("%-15s%.6f * 1E-04\n", s.doc_id.c_str(), s.rf * 1e4);
    std::printf("=====\n");
  }
  return 0;
}

int run_extract(const Options& opt, const std::string& query_id,
                const std::string& docfile, const std::string& denom) {
  auto queries = lexicon::load_expanded_queries(
      fs::path(opt.data_dir) / "queries/table_6_1.csv");
  const auto& query = pick_query(queries, query_id);

  text::Mode mode = parse_mode(opt.mode);
  std::string path = resolve_file(docfile, opt, "corpus/appendix2");
  auto doc = text::Document::analyze(fs::path(path).filename().string(),
                                     read_text_file(path), mode);
  auto denom_mode = denom == "n" ? bayes::Denominator::NEq613
                                 : bayes::Denominator::NMinus1Replica;
  auto segments = bayes::extract_segments(doc, query, opt.threshold,
                                          denom_mode, matching_for(mode));

  if (opt.format == "jsonl") {
    for (const auto& s : segments) {
      std::string sentence;
      const auto& span = doc.sentences[s.sentence_index];
      for (std::size_t i = span.start; i <= span.end; ++i) {
        if (!sentence.empty()) sentence += ' ';
        sentence += doc.tokens[i].text;
      }
      json row{{"segment", s.sentence_index},
               {"rank", s.rank},
               {"weight", s.matched_weight},
               {"text", sentence}};
      std::cout << row.dump() << "\n";
    }
    return 0;
  }

  std::printf("\nEXPANDED QUERY TERMS\n=====\n\n");
  for (const auto& group : query.groups)
    for (const auto& [term, w] : group.terms) std::printf("%s ", term.c_str());
  std::printf("\n\nEXTRACTED RELEVANT TEXT FROM TEXT FILE %s\n=====\n\n",
              doc.id.c_str());
  if (segments.empty()) {
    std::printf("\n\n THERE IS NO RELEVANT TEXT IN THIS FILE !!!\n");
    return 0;
  }
  for (const auto& s : segments) {
    std::printf("[Text Segment no. %zu] [rank*1000=%7.4f]\n",
                s.sentence_index, s.rank);
    const auto& span = doc.sentences[s.sentence_index];
    for (std::size_t i = span.start; i <= span.end; ++i)
      std::printf("%s ", doc.tokens[i].text.c_str());
    std::printf("\n\n");
  }
  return 0;
}

int run_retrieve_ds(const Options& opt,
                    const std::vector<std::string>& evidence_files) {
  std::vector<ds::BodyOfEvidence> evidences;
  for (const auto& f : evidence_files)
    evidences.push_back(ds::load_boe(resolve_file(f, opt, "ds")));
  auto result = ds::retrieve_ds(evidences);
  if (opt.format == "jsonl") {
    for (const auto& r : result.ranking) {
      json row{{"doc", r.label}, {"mass", r.mass}};
      std::cout << row.dump() << "\n";
    }
    json tail{{"ignorance", result.ignorance}, {"conflict", result.conflict}};
    std::cout << tail.dump() << "\n";
  } else {
    std::printf("%-15s %s\n", "Document", "Mass");
    for (const auto& r : result.ranking)
      std::printf("%-15s %.6f\n", r.label.c_str(), r.mass);
    std::printf("%-15s %.6f\n", "Ignorance", result.ignorance);
    std::printf("%-15s %.6f\n", "Conflict K", result.conflict);
  }
  return 0;
}

int run_aggregate_ds(const Options& opt, const std::string& tree_file,
                     const std::string& node_id) {
  auto tree = ds::load_doc_tree(resolve_file(tree_file, opt, "ds"));
  const ds::DocNode* node = node_id.empty() ? &tree
                                            : ds::find_node(tree, node_id);
  if (!node) throw Error("no such node in document tree: " + node_id);
  auto boe = ds::aggregate_node(*node);
  if (opt.format == "jsonl") {
    for (const auto& [mask, mass] : boe.masses()) {
      json row{{"focal", boe.frame().describe(mask)}, {"mass", mass}};
      std::cout << row.dump() << "\n";
    }
  } else {
    std::printf("Aggregated evidence for %s\n", node->id.c_str());
    std::printf("%-15s %s\n", "Focal set", "Mass");
    for (const auto& [mask, mass] : boe.masses())
      std::printf("%-15s %.6f\n", boe.frame().describe(mask).c_str(), mass);
  }
  return 0;
}

int run_disambiguate(const Options& opt, const std::string& word,
                     const std::string& query, const std::string& pos) {
  auto stop = text::load_stopwords(
      (fs::path(opt.data_dir) / "stopwords.txt").string());
  auto lex = lexicon::load_lexicon(
      (fs::path(opt.data_dir) / "lexicon/mini_lexicon.txt").string(), stop);
  std::vector<std::string> query_words;
  for (const auto& t : text::tokenize(query, text::Mode::Standard))
    query_words.push_back(t.text);
  auto result = wsd::disambiguate(lex, query_words, word, stop,
                                  lexicon::pos_from_string(pos));

  const auto& senses = lex.senses(word, lexicon::pos_from_string(pos));
  if (opt.format == "jsonl") {
    json row{{"word", word},
             {"sense", result.sense_no},
             {"gloss", senses[result.sense_no - 1].gloss_text}};
    json table = json::array();
    for (const auto& s : result.scores)
      table.push_back(json{{"sense", s.sense_no},
                           {"t1", s.synset_overlap},
                           {"t2", s.hyponym_overlap},
                           {"t3", s.hypernym_overlap},
                           {"total", s.total()}});
    row["scores"] = table;
    std::cout << row.dump() << "\n";
    return 0;
  }
  std::printf("Word: %s (%s)\n", word.c_str(), pos.c_str());
  std::printf("Chosen sense: %d\n", result.sense_no);
  std::printf("Gloss: %s\n\n", senses[result.sense_no - 1].gloss_text.c_str());
  std::printf("%-6s %-5s %-5s %-5s %s\n", "Sense", "t1", "t2", "t3", "T");
  for (const auto& s : result.scores)
    std::printf("%-6d %-5d %-5d %-5d %d\n", s.sense_no, s.synset_overlap,
                s.hyponym_overlap, s.hypernym_overlap, s.total());
  return 0;
}

int run_qa(const Options& opt, const std::string& question_text,
           const std::string& corpus_path, const std::string& fetch,
           const std::string& fuzzy_query_id) {
  auto gaz = sdl::Gazetteer::load((fs::path(opt.data_dir) / "gazetteers")
                                      .string());
  auto thesaurus = lexicon::load_thesaurus(
      (fs::path(opt.data_dir) / "thesaurus.csv").string());
  auto stop = text::load_stopwords(
      (fs::path(opt.data_dir) / "stopwords.txt").string());
  auto corpus = load_corpus(corpus_path, text::Mode::Standard);
  auto question = sdl::parse_question(question_text, gaz, thesaurus, stop);

  std::vector<const text::Document*> docs;
  std::vector<double> relevance;

  if (fetch == "fuzzy") {
    if (fuzzy_query_id.empty())
      throw Error("--fetch fuzzy needs --query-id to select the bundled "
                  "relation fixtures");
    std::string qid = normalize_query_id(fuzzy_query_id);
    fs::path base = fs::path(opt.data_dir) / "fuzzy";
    auto q = fuzzy::load_query_csv((base / (qid + ".csv")).string());
    auto t = fuzzy::load_relation_csv(
        (base / ("t" + qid.substr(1) + ".csv")).string());
    auto r = fuzzy::load_relation_csv(
        (base / ("r" + qid.substr(1) + ".csv")).string());
    auto fetched = fuzzy::fuzzy_retrieve(q, t, r);
    for (const auto& [label, degree] : fetched.ranking) {
      for (const auto& doc : corpus)
        if (doc.id == label || doc.id == label + ".txt") {
          docs.push_back(&doc);
          relevance.push_back(degree);
        }
    }
  } else {
    // disjunctive keyword scoring stands in for a fetch phase
    lexicon::ExpandedQuery eq;
    for (const auto& g : question.keyword_groups) {
      lexicon::TermGroup tg;
      std::string head;
      for (const auto& w : g.phrase) head += (head.empty() ? "" : " ") + w;
      tg.head = head;
      tg.terms.emplace_back(head, 1.0);
      for (const auto& s : g.synonyms) tg.terms.emplace_back(s, 0.8);
      eq.groups.push_back(std::move(tg));
    }
    std::vector<std::pair<double, const text::Document*>> scored;
    for (const auto& doc : corpus) {
      auto s = bayes::sentence_score(doc.tokens, 0, eq,
                                     bayes::Denominator::NEq613,
                                     bayes::Matching::Folded);
      if (s.rank > 0) scored.emplace_back(s.rank, &doc);
    }
    std::sort(scored.begin(), scored.end(), [](const auto& a, const auto& b) {
      if (a.first != b.first) return a.first > b.first;
      return a.second->id < b.second->id;
    });
    for (const auto& [score, doc] : scored) {
      docs.push_back(doc);
      relevance.push_back(score);
    }
  }

  auto result = sdl::answer(question, docs, relevance, gaz);
  for (const auto& d : result.diagnostics) std::cerr << "note: " << d << "\n";

  if (opt.format == "jsonl") {
    json row{{"question", question_text},
             {"answer_type", question.answer_type},
             {"answers", result.answers}};
    std::cout << row.dump() << "\n";
    return result.answers.empty() ? kExitError : 0;
  }
  std::printf("Question: %s\n", question_text.c_str());
  std::printf("Answer type: %s\n", question.answer_type.c_str());
  if (result.answers.empty()) {
    std::printf("No answer found.\n");
    return kExitError;
  }
  std::printf("Answers:\n");
  for (const auto& a : result.answers) std::printf("  %s\n", a.c_str());
  return 0;
}

int run_eval(const Options& opt, const std::string& judgments_file,
             const std::string& fallout) {
  auto judgments = metrics::load_judgments(
      resolve_file(judgments_file, opt, "judgments"));
  auto denom = fallout == "standard"
                   ? metrics::FalloutDenominator::StandardNotA
                   : metrics::FalloutDenominator::AsPrintedA;
  double recall_sum = 0.0, precision_sum = 0.0;
  std::size_t recalls = 0, precisions = 0;

  if (opt.format == "jsonl") {
    for (const auto& j : judgments) {
      auto m = metrics::prf(j, denom);
      json row{{"query", j.query_id}};
      if (m.recall) row["recall"] = *m.recall;
      if (m.precision) row["precision"] = *m.precision;
      if (m.harmonic_mean) row["harmonic"] = *m.harmonic_mean;
      std::cout << row.dump() << "\n";
      if (m.recall) recall_sum += *m.recall, ++recalls;
      if (m.precision) precision_sum += *m.precision, ++precisions;
    }
    json avg{{"average_recall", recalls ? recall_sum / recalls : 0.0},
             {"average_precision",
              precisions ? precision_sum / precisions : 0.0}};
    std::cout << avg.dump() << "\n";
    return 0;
  }

  std::printf("%-8s %-12s %s\n", "Query", "Recall (%)", "Precision (%)");
  for (const auto& j : judgments) {
    auto m = metrics::prf(j, denom);
    std::printf("%-8s %-12s %s\n", j.query_id.c_str(),
                m.recall ? metrics::percent_rounded(*m.recall).c_str() : "-",
                m.precision ? metrics::percent_rounded(*m.precision).c_str()
                            : "-");
    if (m.recall) recall_sum += *m.recall, ++recalls;
    if (m.precision) precision_sum += *m.precision, ++precisions;
  }
  std::printf("%-8s %-12s %s\n", "Average",
              recalls
                  ? metrics::percent_truncated(recall_sum / recalls).c_str()
                  : "-",
              precisions ? metrics::percent_truncated(precision_sum /
                                                      precisions)
                               .c_str()
                         : "-");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Uncertain information retrieval toolkit"};
  app.require_subcommand(1);

  Options opt;
  std::string data_flag;
  app.add_option("--data", data_flag, "data directory (default: $UIR_DATA_DIR or ./data)");
  app.add_option("--mode", opt.mode, "tokenization mode: replica|standard")
      ->check(CLI::IsMember({"replica", "standard"}));
  app.add_option("--threshold", opt.threshold,
                 "fraction of the maximum score kept (default 0.20)");
  app.add_option("--format", opt.format, "output format: table|jsonl")
      ->check(CLI::IsMember({"table", "jsonl"}));

  auto* index = app.add_subcommand("index", "build and print an inverted index");
  std::string corpus_path;
  index->add_option("--corpus", corpus_path, "corpus directory or doc-list")
      ->required();

  auto* rfz = app.add_subcommand("retrieve-fuzzy",
                                 "max-min composition retrieval");
  std::string qf, tf, rf;
  std::size_t top_k = 0;
  double min_degree = 0.0;
  rfz->add_option("--query", qf, "query csv (term, centrality)")->required();
  rfz->add_option("--thesaurus", tf, "thesaurus relation csv")->required();
  rfz->add_option("--relevance", rf, "relevance relation csv")->required();
  rfz->add_option("--top-k", top_k, "keep only the k strongest documents");
  rfz->add_option("--min-degree", min_degree, "minimum degree to report");

  auto* rb = app.add_subcommand("retrieve-bayes",
                                "relevance-function document ranking");
  std::string query_id, doclist, agg = "min";
  rb->add_option("query_id", query_id, "query number (1-5) or qN")->required();
  rb->add_option("doclist", doclist, "doc-list file")->required();
  rb->add_option("--agg", agg, "aggregation: min|product")
      ->check(CLI::IsMember({"min", "product"}));

  auto* ex = app.add_subcommand("extract", "sentence-level extraction");
  std::string ex_query, ex_doc, denom = "n-1";
  ex->add_option("query_id", ex_query, "query number (1-5) or qN")->required();
  ex->add_option("docfile", ex_doc, "text document")->required();
  ex->add_option("--denom", denom, "sentence divisor: n|n-1")
      ->check(CLI::IsMember({"n", "n-1"}));

  auto* rds = app.add_subcommand("retrieve-ds",
                                 "evidence-combination ranking");
  std::vector<std::string> evidence_files;
  rds->add_option("--evidence", evidence_files, "evidence file (repeatable)")
      ->required();

  auto* ads = app.add_subcommand("aggregate-ds",
                                 "aggregate a document-tree node");
  std::string tree_file, node_id;
  ads->add_option("--tree", tree_file, "document tree file")->required();
  ads->add_option("--node", node_id, "node id (default: root)");

  auto* dis = app.add_subcommand("disambiguate", "gloss-overlap sense choice");
  std::string word, dis_query, pos = "noun";
  dis->add_option("--word", word, "target word")->required();
  dis->add_option("--query", dis_query, "query phrase")->required();
  dis->add_option("--pos", pos, "part of speech")
      ->check(CLI::IsMember({"noun", "verb", "adj", "adv"}));

  auto* qa = app.add_subcommand("qa", "question answering over a corpus");
  std::string question_text, qa_corpus, fetch = "fuzzy", fuzzy_qid;
  qa->add_option("--question", question_text, "natural-language question")
      ->required();
  qa->add_option("--corpus", qa_corpus, "corpus directory")->required();
  qa->add_option("--fetch", fetch, "fetch phase: fuzzy|keyword")
      ->check(CLI::IsMember({"fuzzy", "keyword"}));
  qa->add_option("--query-id", fuzzy_qid,
                 "fixture id (q1-q4) for the fuzzy fetch matrices");

  auto* ev = app.add_subcommand("eval", "precision/recall evaluation");
  std::string judgments_file, fallout = "printed";
  ev->add_option("--judgments", judgments_file, "judgment file")->required();
  ev->add_option("--fallout", fallout, "fallout denominator: printed|standard")
      ->check(CLI::IsMember({"printed", "standard"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  opt.data_dir = resolve_data_dir(data_flag);

  try {
    if (*index) return run_index(opt, corpus_path);
    if (*rfz) return run_retrieve_fuzzy(opt, qf, tf, rf, top_k, min_degree);
    if (*rb) return run_retrieve_bayes(opt, query_id, doclist, agg);
    if (*ex) return run_extract(opt, ex_query, ex_doc, denom);
    if (*rds) return run_retrieve_ds(opt, evidence_files);
    if (*ads) return run_aggregate_ds(opt, tree_file, node_id);
    if (*dis) return run_disambiguate(opt, word, dis_query, pos);
    if (*qa) return run_qa(opt, question_text, qa_corpus, fetch, fuzzy_qid);
    if (*ev) return run_eval(opt, judgments_file, fallout);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    std::string msg = e.what();
    return msg.find("cannot open") != std::string::npos ? kExitMissingFile
                                                        : kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitUsage;
}
