#include "verbpara/pipeline.hpp"

#include <json.hpp>

#include "verbpara/error.hpp"

namespace verbpara {

namespace {

// Rethrows stage failures with the stage name in front of the message.
template <class Fn>
auto in_stage(const char* stage, Fn&& fn) {
  try {
    return fn();
  } catch (const InputError& e) {
    throw InputError(std::string(stage) + ": " + e.what());
  } catch (const ConsistencyError& e) {
    throw ConsistencyError(std::string(stage) + ": " + e.what());
  }
}

}  // namespace

FilterOptions filter_options(const PipelineConfig& config, unsigned jobs) {
  FilterOptions options;
  options.overlap_threshold = config.overlap_threshold;
  options.jobs = jobs;
  return options;
}

RunResult run_pipeline(const Corpus& corpus, const PipelineConfig& config, unsigned jobs,
                       std::vector<std::string> inputs) {
  config.validate();
  RunResult r;
  r.instances = in_stage("extract", [&] { return extract_corpus(corpus, config.extraction, jobs); });
  r.stats = build_stats(corpus, r.instances, StatsOptions{config.skip_punct});
  r.filtered = in_stage("pairs", [&] {
    const auto index = index_instances(r.instances, config.extraction);
    return generate_filtered_pairs(index, r.instances, corpus, r.stats, filter_options(config, jobs));
  });
  r.ranking = in_stage("score", [&] { return score_pairs(r.filtered.pairs, r.stats, config.mle_mode, jobs); });

  r.manifest.inputs = std::move(inputs);
  r.manifest.sentences = corpus.size();
  r.manifest.tokens = r.stats.token_count;
  r.manifest.instances = r.instances.size();
  r.manifest.filter = r.filtered.counts;
  r.manifest.type_pairs = r.ranking.size();
  return r;
}

void write_manifest(std::ostream& out, const RunManifest& manifest, const PipelineConfig& config) {
  nlohmann::ordered_json j;
  j["inputs"] = manifest.inputs;
  nlohmann::ordered_json cfg;
  cfg["log_base"] = PipelineConfig::log_base;
  cfg["overlap_threshold"] = config.overlap_threshold;
  cfg["mle"] = std::string(to_string(config.mle_mode));
  cfg["lp_min_freq"] = config.lp_min_freq;
  cfg["seed"] = config.seed;
  cfg["skip_punct"] = config.skip_punct;
  nlohmann::ordered_json relations = nlohmann::ordered_json::object();
  for (const auto& [deprel, kind] : config.extraction.relations) relations[deprel] = std::string(to_string(kind));
  cfg["relations"] = std::move(relations);
  cfg["pronouns"] = std::vector<std::string>(config.extraction.pronouns.begin(),
                                             config.extraction.pronouns.end());
  j["config"] = std::move(cfg);
  nlohmann::ordered_json counts;
  counts["sentences"] = manifest.sentences;
  counts["tokens"] = manifest.tokens;
  counts["verb_instances"] = manifest.instances;
  counts["subject_object_keys"] = manifest.filter.keys;
  counts["candidate_instance_pairs"] = manifest.filter.candidate_pairs;
  counts["pairs_after_overlap_filter"] = manifest.filter.after_overlap;
  counts["pairs_after_contradiction_filter"] = manifest.filter.after_contradiction;
  counts["verb_type_pairs"] = manifest.type_pairs;
  j["counts"] = std::move(counts);
  out << j.dump(2) << '\n';
}

std::size_t report_evidence(std::ostream& out, std::span<const ScoreRow> rows, const Corpus& corpus,
                            std::size_t top_k, std::ostream& warnings) {
  std::size_t warning_count = 0;
  const std::size_t n = std::min(top_k, rows.size());
  for (std::size_t i = 0; i < n; ++i) {
    const ScoreRow& row = rows[i];
    if (i > 0) out << '\n';
    out << "=== " << row.rank << ". <" << row.pair.first << ", " << row.pair.second
        << ">  score=" << format_fixed(row.score) << "  support=" << row.support << '\n';
    std::size_t block = 0;
    for (const auto& [left_id, right_id] : row.evidence) {
      out << "--- instance pair " << ++block << '\n';
      for (const auto* id : {&left_id, &right_id}) {
        if (const Sentence* s = corpus.find(*id)) {
          out << "[" << *id << "] " << s->text << '\n';
        } else {
          ++warning_count;
          out << "[" << *id << "] (warning: sentence not found in corpus)\n";
          warnings << "warning: evidence sentence '" << *id << "' for <" << row.pair.first << ", "
                   << row.pair.second << "> not found in corpus\n";
        }
      }
    }
  }
  return warning_count;
}

}  // namespace verbpara
