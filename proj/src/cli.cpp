#include "verbpara/cli.hpp"

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <functional>
#include <memory>
#include <optional>
#include <sstream>

#include "verbpara/error.hpp"
#include "verbpara/evaluation.hpp"
#include "verbpara/lp_baseline.hpp"
#include "verbpara/pipeline.hpp"

namespace verbpara {

namespace fs = std::filesystem;

namespace {

struct GlobalOptions {
  std::string config_path;
  unsigned jobs = 1;
  std::optional<std::uint64_t> seed;
};

// Writes to the file when a path is given, otherwise to the fallback stream.
class Output {
 public:
  Output(const std::string& path, std::ostream& fallback) {
    if (path.empty() || path == "-") {
      stream_ = &fallback;
      return;
    }
    file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
    if (!*file_) throw InputError("cannot open '" + path + "' for writing");
    stream_ = file_.get();
  }
  std::ostream& operator*() { return *stream_; }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream* stream_ = nullptr;
};

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  return in;
}

std::vector<fs::path> to_paths(const std::vector<std::string>& files) {
  return {files.begin(), files.end()};
}

PipelineConfig load(const GlobalOptions& global) {
  PipelineConfig config = global.config_path.empty() ? PipelineConfig{} : load_config(global.config_path);
  if (global.seed) config.seed = *global.seed;
  return config;
}

// Per-subcommand overrides of config values.
struct Overrides {
  std::optional<double> overlap_threshold;
  bool per_relation_mle = false;
  bool skip_punct = false;
  std::optional<std::uint64_t> lp_min_freq;

  void apply(PipelineConfig& config) const {
    if (overlap_threshold) config.overlap_threshold = *overlap_threshold;
    if (per_relation_mle) config.mle_mode = MleMode::per_relation;
    if (skip_punct) config.skip_punct = true;
    if (lp_min_freq) config.lp_min_freq = *lp_min_freq;
    config.validate();
  }
};

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Mine lexical verb paraphrases from a dependency-parsed corpus."};
  app.name("verbpara");
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions global;
  app.add_option("--config", global.config_path, "INI config file")->check(CLI::ExistingFile);
  app.add_option("--jobs", global.jobs, "worker threads")->check(CLI::PositiveNumber);
  app.add_option("--seed", global.seed, "random seed (sample-lp)");

  std::function<void()> action;
  Overrides ov;

  // extract
  auto* extract = app.add_subcommand("extract", "verb instances as JSON-lines");
  std::vector<std::string> extract_files;
  std::string extract_out;
  std::string extract_stats;
  extract->add_option("corpus", extract_files, "CoNLL-U files")->required()->check(CLI::ExistingFile);
  extract->add_option("-o,--output", extract_out, "instances JSON-lines (default stdout)");
  extract->add_option("--stats-out", extract_stats, "write corpus statistics JSON");
  extract->add_flag("--skip-punct", ov.skip_punct, "leave PUNCT tokens out of N and token counts");
  extract->callback([&] {
    action = [&] {
      PipelineConfig config = load(global);
      ov.apply(config);
      const Corpus corpus = load_corpus(to_paths(extract_files));
      const auto instances = extract_corpus(corpus, config.extraction, global.jobs);
      Output o(extract_out, out);
      write_instances(*o, instances);
      if (!extract_stats.empty()) {
        Output s(extract_stats, out);
        write_stats(*s, build_stats(corpus, instances, StatsOptions{config.skip_punct}));
      }
    };
  });

  // pairs
  auto* pairs = app.add_subcommand("pairs", "filtered instance pairs as JSON-lines");
  std::vector<std::string> pairs_files;
  std::string pairs_instances;
  std::string pairs_out;
  std::string pairs_stats;
  bool keep_contradictions = false;
  bool same_sentence = false;
  pairs->add_option("corpus", pairs_files, "CoNLL-U files")->required()->check(CLI::ExistingFile);
  pairs->add_option("--instances", pairs_instances, "instances JSON-lines from extract (default: extract now)")
      ->check(CLI::ExistingFile);
  pairs->add_option("-o,--output", pairs_out, "pairs JSON-lines (default stdout)");
  pairs->add_option("--stats-out", pairs_stats, "write corpus statistics JSON");
  pairs->add_option("--overlap-threshold", ov.overlap_threshold, "minimum tf-idf sentence overlap");
  pairs->add_flag("--keep-contradictions", keep_contradictions, "debug: skip the contradiction filter");
  pairs->add_flag("--same-sentence", same_sentence, "debug: allow pairs within one sentence");
  pairs->add_flag("--skip-punct", ov.skip_punct, "leave PUNCT tokens out of N and token counts");
  pairs->callback([&] {
    action = [&] {
      PipelineConfig config = load(global);
      ov.apply(config);
      const Corpus corpus = load_corpus(to_paths(pairs_files));
      std::vector<VerbInstance> instances;
      if (pairs_instances.empty()) {
        instances = extract_corpus(corpus, config.extraction, global.jobs);
      } else {
        auto in = open_input(pairs_instances);
        instances = read_instances(in, pairs_instances);
      }
      const auto stats = build_stats(corpus, instances, StatsOptions{config.skip_punct});
      FilterOptions options = filter_options(config, global.jobs);
      options.keep_contradictions = keep_contradictions;
      options.allow_same_sentence = same_sentence;
      const auto index = index_instances(instances, config.extraction);
      const auto result = generate_filtered_pairs(index, instances, corpus, stats, options);
      Output o(pairs_out, out);
      write_pairs(*o, result.pairs);
      if (!pairs_stats.empty()) {
        Output s(pairs_stats, out);
        write_stats(*s, stats);
      }
      err << "pairs: " << result.counts.candidate_pairs << " candidates, " << result.counts.after_overlap
          << " after overlap filter, " << result.counts.after_contradiction
          << " after contradiction filter\n";
    };
  });

  // score
  auto* score = app.add_subcommand("score", "ranked verb type pairs as TSV");
  std::string score_pairs_path;
  std::string score_stats;
  std::string score_out;
  score->add_option("--pairs", score_pairs_path, "pairs JSON-lines")->required()->check(CLI::ExistingFile);
  score->add_option("--stats", score_stats, "statistics JSON")->required()->check(CLI::ExistingFile);
  score->add_option("-o,--output", score_out, "ranking TSV (default stdout)");
  score->add_option("--overlap-threshold", ov.overlap_threshold,
                    "threshold the pairs were filtered with (recorded in the header)");
  score->add_flag("--per-relation-mle", ov.per_relation_mle, "normalize component counts per relation");
  score->callback([&] {
    action = [&] {
      PipelineConfig config = load(global);
      ov.apply(config);
      auto pin = open_input(score_pairs_path);
      const auto instance_pairs = read_pairs(pin, score_pairs_path);
      auto sin = open_input(score_stats);
      const auto stats = read_stats(sin, score_stats);
      const auto ranking = score_pairs(instance_pairs, stats, config.mle_mode, global.jobs);
      Output o(score_out, out);
      write_score_tsv(*o, ranking, config);
    };
  });

  // lp
  auto* lp = app.add_subcommand("lp", "per-slot distributional similarity of all verb pairs");
  std::string lp_instances;
  std::string lp_out;
  lp->add_option("--instances", lp_instances, "instances JSON-lines")->required()->check(CLI::ExistingFile);
  lp->add_option("-o,--output", lp_out, "similarity TSV (default stdout)");
  lp->add_option("--lp-min-freq", ov.lp_min_freq, "drop fillers seen fewer times in a slot");
  lp->callback([&] {
    action = [&] {
      PipelineConfig config = load(global);
      ov.apply(config);
      auto in = open_input(lp_instances);
      const auto instances = read_instances(in, lp_instances);
      const auto table = build_slot_vectors(instances, config.lp_min_freq);
      Output o(lp_out, out);
      write_lp_tsv(*o, lp_all_pairs(table, global.jobs), config);
    };
  });

  // sample-lp
  auto* sample = app.add_subcommand("sample-lp", "rank-matched comparison sample from the LP ranking");
  std::string sample_path;
  std::string our_ranking;
  std::string lp_ranking;
  std::string sample_out;
  sample->add_option("--sample", sample_path, "TSV of sampled verb pairs")->required()->check(CLI::ExistingFile);
  sample->add_option("--our-ranking", our_ranking, "score TSV")->required()->check(CLI::ExistingFile);
  sample->add_option("--lp-ranking", lp_ranking, "lp TSV")->required()->check(CLI::ExistingFile);
  sample->add_option("-o,--output", sample_out, "sample TSV (default stdout)");
  sample->callback([&] {
    action = [&] {
      const PipelineConfig config = load(global);
      auto sin = open_input(sample_path);
      const auto sampled = read_pair_list(sin, sample_path);
      auto oin = open_input(our_ranking);
      const auto ours = rankings_by_verb(read_ranked_pairs(oin, our_ranking));
      auto lin = open_input(lp_ranking);
      const auto theirs = rankings_by_verb(read_ranked_pairs(lin, lp_ranking));
      const auto outcome = rank_matched_sample(ours, theirs, sampled, config.seed);
      Output o(sample_out, out);
      *o << "# seed=" << config.seed << '\n';
      *o << "v1\tv2\tpivot\trank\tsource_v1\tsource_v2\ttruncated\n";
      for (const SampledPair& s : outcome.pairs) {
        const auto pair = TypePair::canonical(s.pivot, s.partner);
        *o << pair.first << '\t' << pair.second << '\t' << s.pivot << '\t' << s.rank << '\t'
           << s.source.first << '\t' << s.source.second << '\t' << (s.truncated ? "yes" : "no") << '\n';
      }
      for (const auto& note : outcome.notes) err << "sample-lp: " << note << '\n';
    };
  });

  // eval
  auto* eval = app.add_subcommand("eval", "precision-recall curve against judgments");
  std::string eval_ranking;
  std::string eval_judgments;
  std::optional<std::string> eval_judge;
  double alpha = 0.05;
  std::string eval_out;
  eval->add_option("--ranking", eval_ranking, "score or lp TSV")->required()->check(CLI::ExistingFile);
  eval->add_option("--judgments", eval_judgments, "judgment TSV")->required()->check(CLI::ExistingFile);
  eval->add_option("--judge", eval_judge, "use only this judge's verdicts");
  eval->add_option("--alpha", alpha, "significance level of the interval");
  eval->add_option("-o,--output", eval_out, "curve TSV (default stdout)");
  eval->callback([&] {
    action = [&] {
      auto rin = open_input(eval_ranking);
      const auto ranked = read_ranked_pairs(rin, eval_ranking);
      auto jin = open_input(eval_judgments);
      const auto judgments = read_judgments(jin, eval_judgments);
      const auto verdicts = verdicts_by_pair(judgments, eval_judge);
      const auto curve = precision_recall_curve(ranked, verdicts);
      Output o(eval_out, out);
      *o << "rank\tprecision\trecall\n";
      for (const PrPoint& p : curve.points) {
        *o << p.rank_cutoff << '\t' << format_fixed(p.precision) << '\t'
           << (p.recall ? format_fixed(*p.recall) : std::string("NA")) << '\n';
      }
      std::vector<Verdict> judged;
      for (const auto& pair : ranked) {
        if (auto it = verdicts.find(pair); it != verdicts.end()) judged.push_back(it->second);
      }
      if (curve.unjudged > 0) err << "eval: " << curve.unjudged << " ranked pairs have no judgment\n";
      if (judged.empty()) throw InputError("no ranked pair has a judgment");
      const auto est = precision_with_ci(judged, alpha);
      *o << "# n=" << est.n << "\tprecision=" << format_fixed(est.precision) << "\tinterval=["
         << format_fixed(est.interval.lower) << "," << format_fixed(est.interval.upper)
         << "]\tmethod=" << est.method << "\talpha=" << format_number(alpha) << '\n';
    };
  });

  // kappa
  auto* kappa = app.add_subcommand("kappa", "inter-judge agreement of two judgment files");
  std::vector<std::string> kappa_files;
  std::optional<std::string> judge_a;
  std::optional<std::string> judge_b;
  kappa->add_option("judgments", kappa_files, "two judgment TSV files")
      ->required()
      ->expected(2)
      ->check(CLI::ExistingFile);
  kappa->add_option("--judge-a", judge_a, "judge to take from the first file");
  kappa->add_option("--judge-b", judge_b, "judge to take from the second file");
  kappa->callback([&] {
    action = [&] {
      auto ain = open_input(kappa_files[0]);
      auto bin = open_input(kappa_files[1]);
      const auto a = verdicts_by_pair(read_judgments(ain, kappa_files[0]), judge_a);
      const auto b = verdicts_by_pair(read_judgments(bin, kappa_files[1]), judge_b);
      const auto r = cohen_kappa(a, b);
      out << "kappa\t" << format_fixed(r.kappa) << '\n';
      out << "observed_agreement\t" << format_fixed(r.observed) << '\n';
      out << "chance_agreement\t" << format_fixed(r.expected) << '\n';
      out << "n\t" << r.n << '\n';
      out << "#\tB:+\tB:-\n";
      out << "A:+\t" << r.table[0][0] << '\t' << r.table[0][1] << '\n';
      out << "A:-\t" << r.table[1][0] << '\t' << r.table[1][1] << '\n';
    };
  });

  // report
  auto* report = app.add_subcommand("report", "evidence sentences of the top-ranked pairs");
  std::vector<std::string> report_files;
  std::string report_scores;
  std::optional<std::size_t> top_k;
  std::string report_out;
  report->add_option("corpus", report_files, "CoNLL-U files")->required()->check(CLI::ExistingFile);
  report->add_option("--scores", report_scores, "score TSV")->required()->check(CLI::ExistingFile);
  report->add_option("--top-k", top_k, "number of type pairs to show");
  report->add_option("-o,--output", report_out, "report file (default stdout)");
  report->callback([&] {
    action = [&] {
      const PipelineConfig config = load(global);
      const Corpus corpus = load_corpus(to_paths(report_files));
      auto in = open_input(report_scores);
      const auto rows = read_score_tsv(in, report_scores);
      Output o(report_out, out);
      report_evidence(*o, rows, corpus, top_k.value_or(config.report_top_k), err);
    };
  });

  // run
  auto* run = app.add_subcommand("run", "extract, pairs and score in one pass");
  std::vector<std::string> run_files;
  std::string out_dir;
  run->add_option("corpus", run_files, "CoNLL-U files")->required()->check(CLI::ExistingFile);
  run->add_option("--out-dir", out_dir, "directory for ranking.tsv, manifest.json, evidence.txt")->required();
  run->add_option("--overlap-threshold", ov.overlap_threshold, "minimum tf-idf sentence overlap");
  run->add_flag("--per-relation-mle", ov.per_relation_mle, "normalize component counts per relation");
  run->add_flag("--skip-punct", ov.skip_punct, "leave PUNCT tokens out of N and token counts");
  run->callback([&] {
    action = [&] {
      PipelineConfig config = load(global);
      ov.apply(config);
      const Corpus corpus = load_corpus(to_paths(run_files));
      const auto result = run_pipeline(corpus, config, global.jobs, run_files);
      std::error_code ec;
      fs::create_directories(out_dir, ec);
      if (ec) throw InputError("cannot create '" + out_dir + "': " + ec.message());
      const fs::path dir(out_dir);
      {
        Output o((dir / "ranking.tsv").string(), out);
        write_score_tsv(*o, result.ranking, config);
      }
      {
        Output o((dir / "manifest.json").string(), out);
        write_manifest(*o, result.manifest, config);
      }
      // Same bytes as `report` over the written ranking.
      std::stringstream ranking;
      write_score_tsv(ranking, result.ranking, config);
      const auto rows = read_score_tsv(ranking, "ranking.tsv");
      Output o((dir / "evidence.txt").string(), out);
      report_evidence(*o, rows, corpus, config.report_top_k, err);
      err << "run: " << result.manifest.instances << " verb instances, "
          << result.manifest.filter.after_contradiction << " instance pairs passed filtering, "
          << result.manifest.type_pairs << " verb type pairs\n";
    };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  std::string command;
  for (const auto* sub : app.get_subcommands()) command = sub->get_name() + ": ";
  try {
    if (action) action();
    return kExitOk;
  } catch (const InputError& e) {
    err << "error: " << command << e.what() << '\n';
    return kExitInputError;
  } catch (const ConsistencyError& e) {
    err << "internal consistency error: " << command << e.what() << '\n';
    return kExitInternalError;
  } catch (const std::exception& e) {
    err << "internal error: " << command << e.what() << '\n';
    return kExitInternalError;
  }
}

}  // namespace verbpara
