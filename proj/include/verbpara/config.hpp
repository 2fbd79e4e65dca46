#pragma once

#include <cstdint>
#include <filesystem>
#include <istream>
#include <string>

#include "verbpara/extraction.hpp"
#include "verbpara/scoring.hpp"

namespace verbpara {

struct PipelineConfig {
  ExtractionConfig extraction = ExtractionConfig::defaults();
  double overlap_threshold = 100.0;
  MleMode mle_mode = MleMode::per_instance;
  std::uint64_t lp_min_freq = 1;
  std::uint64_t seed = 20040101;
  bool skip_punct = false;
  std::size_t report_top_k = 10;

  static constexpr const char* log_base = "natural";

  // Throws InputError on a negative threshold or lp_min_freq == 0.
  void validate() const;
};

// INI-style config:
//
//   ; deprel = subject | object | pp | modifier | ignore
//   [relations]
//   nsubj = subject
//   ; replaces the default list
//   [pronouns]
//   list = it he she
//   [pipeline]
//   overlap_threshold = 100
//   mle = per-instance
//   lp_min_freq = 1
//   seed = 20040101
//   skip_punct = false
//   report_top_k = 10
//
// Entries in [relations] are merged over the defaults.
PipelineConfig read_config(std::istream& in, const std::string& source);
PipelineConfig load_config(const std::filesystem::path& path);

}  // namespace verbpara
