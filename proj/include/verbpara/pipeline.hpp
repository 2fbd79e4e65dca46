#pragma once

#include <cstddef>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "verbpara/config.hpp"
#include "verbpara/corpus.hpp"
#include "verbpara/extraction.hpp"
#include "verbpara/filtering.hpp"
#include "verbpara/scoring.hpp"
#include "verbpara/serialization.hpp"
#include "verbpara/stats.hpp"

namespace verbpara {

struct RunManifest {
  std::vector<std::string> inputs;
  std::size_t sentences = 0;
  std::size_t tokens = 0;  // N as used for idf
  std::size_t instances = 0;
  FilterCounts filter;
  std::size_t type_pairs = 0;
};

struct RunResult {
  std::vector<VerbInstance> instances;
  CorpusStats stats;
  FilterResult filtered;
  std::vector<TypePairScore> ranking;
  RunManifest manifest;
};

FilterOptions filter_options(const PipelineConfig& config, unsigned jobs);

// Extraction, statistics, pair filtering and scoring over one corpus.
RunResult run_pipeline(const Corpus& corpus, const PipelineConfig& config, unsigned jobs = 1,
                       std::vector<std::string> inputs = {});

void write_manifest(std::ostream& out, const RunManifest& manifest, const PipelineConfig& config);

// For each of the first `top_k` rows prints every evidence sentence pair.
// Unknown sentence ids produce a warning line in the report and on
// `warnings`; the report goes on. Returns the number of warnings.
std::size_t report_evidence(std::ostream& out, std::span<const ScoreRow> rows, const Corpus& corpus,
                            std::size_t top_k, std::ostream& warnings);

}  // namespace verbpara
