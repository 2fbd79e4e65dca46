#pragma once

#include <cstddef>
#include <istream>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "verbpara/config.hpp"
#include "verbpara/extraction.hpp"
#include "verbpara/filtering.hpp"
#include "verbpara/lp_baseline.hpp"
#include "verbpara/scoring.hpp"
#include "verbpara/stats.hpp"

// Stage artifacts: JSON-lines for instances and pairs, JSON for statistics,
// TSV for rankings. Readers throw ParseError with the offending line.
namespace verbpara {

void write_instances(std::ostream& out, std::span<const VerbInstance> instances);
std::vector<VerbInstance> read_instances(std::istream& in, std::string_view source);

void write_pairs(std::ostream& out, std::span<const InstancePair> pairs);
std::vector<InstancePair> read_pairs(std::istream& in, std::string_view source);

void write_stats(std::ostream& out, const CorpusStats& stats);
CorpusStats read_stats(std::istream& in, std::string_view source);

// Shortest decimal that round-trips.
std::string format_number(double value);
std::string format_fixed(double value, int decimals = 6);

struct ScoreRow {
  std::size_t rank = 0;
  TypePair pair;
  double score = 0.0;
  std::size_t support = 0;
  std::vector<std::pair<std::string, std::string>> evidence;
};

// "# log_base=... overlap_threshold=... mle=..." then a column header, then
// one row per type pair. Evidence is "left|right" joined by ';'.
void write_score_tsv(std::ostream& out, std::span<const TypePairScore> ranked,
                     const PipelineConfig& config);
std::vector<ScoreRow> read_score_tsv(std::istream& in, std::string_view source);

void write_lp_tsv(std::ostream& out, std::span<const LpScore> ranked, const PipelineConfig& config);

// Verb pairs from columns 2 and 3 of any ranked TSV (score or LP output).
std::vector<TypePair> read_ranked_pairs(std::istream& in, std::string_view source);

// Verb pairs from columns 1 and 2 (sample files); extra columns ignored.
std::vector<TypePair> read_pair_list(std::istream& in, std::string_view source);

}  // namespace verbpara
