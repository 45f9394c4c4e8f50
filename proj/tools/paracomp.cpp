// paracomp command line: complete paradigms from a raw corpus and a lemma
// list, score predictions with best-match accuracy, or print dataset
// statistics. Data goes to stdout, diagnostics to stderr; exit codes are
// 0 (success), 2 (usage or input error), 1 (internal error).

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "paracomp/analysis.hpp"
#include "paracomp/bmacc.hpp"
#include "paracomp/config.hpp"
#include "paracomp/corpus.hpp"
#include "paracomp/io.hpp"
#include "paracomp/pipeline.hpp"

namespace {

using namespace paracomp;

std::string percent(double fraction) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(2) << fraction * 100.0;
  return out.str();
}

std::string source_name(CandidateSource s) {
  return s == CandidateSource::kGivenLemma ? "given" : "retrieved";
}

std::ofstream open_out(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write file: " + path.string());
  return out;
}

struct CompleteArgs {
  std::string corpus_path, lemmas_path, out_path;
  std::string config_path;
  std::string dump_trees, dump_candidates, dump_slots;
  std::vector<std::string> overrides;
  std::uint64_t seed = 0;
  std::size_t jobs = 0;
  bool seed_set = false, jobs_set = false;
};

int run_complete(const CompleteArgs& args) {
  Config cfg;
  if (!args.config_path.empty())
    apply_config_text(cfg, read_text_file(args.config_path), args.config_path);
  for (const std::string& kv : args.overrides) {
    const std::size_t eq = kv.find('=');
    if (eq == std::string::npos)
      throw InputError("--set expects key=value, got '" + kv + "'");
    set_config_value(cfg, kv.substr(0, eq), kv.substr(eq + 1));
  }
  if (args.seed_set) cfg.seed = args.seed;
  if (args.jobs_set) cfg.jobs = args.jobs;
  cfg.validate();

  const Corpus corpus = load_corpus_file(args.corpus_path);
  const LemmaList lemmas = load_lemma_file(args.lemmas_path);
  if (lemmas.empty()) throw InputError(args.lemmas_path + ": no lemmas");

  const PipelineResult result = run_pipeline(corpus, lemmas, cfg);
  if (result.groups.empty())
    std::cerr << "paracomp: warning: no edit trees survived filtering; "
                 "prediction file is empty\n";

  write_predictions_file(args.out_path, result.paradigms);

  if (!args.dump_trees.empty()) {
    auto out = open_out(args.dump_trees);
    for (const TreeStats& ts : result.retrieval.trees)
      out << ts.tree.to_string() << '\t' << ts.frequency << '\t'
          << ts.lemma_coverage.size() << '\n';
  }
  if (!args.dump_candidates.empty()) {
    auto out = open_out(args.dump_candidates);
    for (const CandidateForm& c : result.retrieval.candidates)
      out << c.lemma << '\t' << c.form << '\t' << c.tree.to_string() << '\t'
          << source_name(c.source) << '\n';
  }
  if (!args.dump_slots.empty()) {
    auto out = open_out(args.dump_slots);
    for (const SlotGroup& g : result.groups)
      for (const EditTree& t : g.trees)
        out << g.slot_id << '\t' << t.to_string() << '\t'
            << g.lemma_coverage.size() << '\n';
  }

  std::cerr << "paracomp: " << result.paradigms.size() << " paradigms x "
            << result.groups.size() << " slots ("
            << result.retrieval.retrieved.size() << " retrieved lemmas, "
            << result.triples.size() << " attested cells)\n";
  return 0;
}

void print_report(std::ostream& out, const BmaccReport& report) {
  out << "bmacc\t" << percent(report.score) << '\n';
  out << "pred_slots_merged\t" << report.merged_pred_count << '\n';
  out << "gold_slots_merged\t" << report.merged_gold_count << '\n';
  for (const MatchedPair& pair : report.matching)
    out << "pair\t" << pair.pred_label << '\t' << pair.gold_label << '\t'
        << percent(pair.accuracy) << '\n';
}

void print_split_report(std::ostream& out, const std::string& prefix,
                        std::size_t lemma_count,
                        const std::optional<BmaccReport>& report) {
  out << prefix << "_lemmas\t" << lemma_count << '\n';
  if (!report) {
    out << prefix << "_bmacc\tNA\n";
    return;
  }
  out << prefix << "_bmacc\t" << percent(report->score) << '\n';
  out << prefix << "_pred_slots_merged\t" << report->merged_pred_count << '\n';
  out << prefix << "_gold_slots_merged\t" << report->merged_gold_count << '\n';
}

int run_evaluate(const std::string& pred_path, const std::string& gold_path,
                 const std::string& corpus_path, bool match_all) {
  const MatchPolicy policy = match_all ? MatchPolicy::kAll : MatchPolicy::kAny;
  const SlotTable pred = load_pred_table(pred_path);
  const SlotTable gold = load_gold_table(gold_path);
  const BmaccReport report = bmacc(pred, gold, policy);
  print_report(std::cout, report);

  if (!corpus_path.empty()) {
    const Corpus corpus = load_corpus_file(corpus_path);
    std::vector<std::string> gold_lemmas;
    for (const std::string& lemma : gold.lemmas()) gold_lemmas.push_back(lemma);
    const SeenSplit split = split_seen(LemmaList::from_words(gold_lemmas), corpus);
    const SplitReports reports = bmacc_by_split(pred, gold, split, policy);
    print_split_report(std::cout, "seen", split.seen.size(), reports.seen);
    print_split_report(std::cout, "unseen", split.unseen.size(), reports.unseen);
  }

  std::cerr << "paracomp: BMAcc " << percent(report.score) << " ("
            << report.merged_pred_count << " predicted / "
            << report.merged_gold_count << " gold slots after merging)\n";
  return 0;
}

int run_stats(const std::string& corpus_path, const std::string& lemmas_path,
              const std::string& gold_path) {
  const Corpus corpus = load_corpus_file(corpus_path);
  const LemmaList lemmas = load_lemma_file(lemmas_path);
  const SlotTable gold = load_gold_table(gold_path);
  const DatasetStats s = dataset_stats(corpus, lemmas, gold);
  std::cout << "tokens\t" << s.token_count << '\n'
            << "types\t" << s.type_count << '\n'
            << "lemmas\t" << s.lemma_count << '\n'
            << "lemmas_in_corpus\t" << s.lemmas_in_corpus << '\n'
            << "inflections\t" << s.inflection_count << '\n'
            << "inflections_in_corpus\t" << s.inflections_in_corpus << '\n'
            << "paradigm_size\t" << s.paradigm_size << '\n'
            << "paradigm_size_merged\t" << s.paradigm_size_merged << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"unsupervised morphological paradigm completion toolkit"};
  app.require_subcommand(1);

  CompleteArgs complete_args;
  CLI::App* complete =
      app.add_subcommand("complete", "generate paradigms for a lemma list");
  complete->add_option("--corpus", complete_args.corpus_path, "raw text corpus")
      ->required();
  complete->add_option("--lemmas", complete_args.lemmas_path, "one lemma per line")
      ->required();
  complete->add_option("--out", complete_args.out_path, "prediction TSV output")
      ->required();
  complete->add_option("--config", complete_args.config_path,
                       "key=value configuration file");
  auto* seed_opt = complete->add_option("--seed", complete_args.seed,
                                        "train/dev split seed");
  auto* jobs_opt = complete->add_option("--jobs", complete_args.jobs,
                                        "worker threads for the retrieval scan");
  complete->add_option("--set", complete_args.overrides,
                       "override a config key (key=value, repeatable)");
  complete->add_option("--dump-trees", complete_args.dump_trees,
                       "write kept edit trees as TSV");
  complete->add_option("--dump-candidates", complete_args.dump_candidates,
                       "write attested candidates as TSV");
  complete->add_option("--dump-slots", complete_args.dump_slots,
                       "write slot groups as TSV");

  std::string pred_path, gold_path, eval_corpus_path;
  bool match_all = false;
  CLI::App* evaluate =
      app.add_subcommand("evaluate", "score predictions with best-match accuracy");
  evaluate->add_option("--pred", pred_path, "prediction TSV")->required();
  evaluate->add_option("--gold", gold_path, "gold TSV")->required();
  evaluate->add_option("--corpus", eval_corpus_path,
                       "corpus for the seen/unseen lemma breakdown");
  evaluate->add_flag("--match-all", match_all,
                     "require every gold variant to be predicted");

  std::string stats_corpus, stats_lemmas, stats_gold;
  CLI::App* stats = app.add_subcommand("stats", "print dataset statistics");
  stats->add_option("--corpus", stats_corpus, "raw text corpus")->required();
  stats->add_option("--lemmas", stats_lemmas, "lemma list")->required();
  stats->add_option("--gold", stats_gold, "gold TSV")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    complete_args.seed_set = seed_opt->count() > 0;
    complete_args.jobs_set = jobs_opt->count() > 0;
    if (complete->parsed()) return run_complete(complete_args);
    if (evaluate->parsed())
      return run_evaluate(pred_path, gold_path, eval_corpus_path, match_all);
    if (stats->parsed()) return run_stats(stats_corpus, stats_lemmas, stats_gold);
  } catch (const InputError& e) {
    std::cerr << "paracomp: error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "paracomp: internal error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
