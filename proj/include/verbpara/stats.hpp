#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>

#include "verbpara/corpus.hpp"
#include "verbpara/extraction.hpp"

namespace verbpara {

struct StatsOptions {
  // Exclude PUNCT tokens from N and token_freq.
  bool skip_punct = false;
};

// Frequency tables behind idf and every maximum-likelihood estimate. Built
// once, then read-only.
struct CorpusStats {
  std::uint64_t token_count = 0;  // N
  std::map<std::string, std::uint64_t, std::less<>> token_freq;
  std::uint64_t verb_instance_count = 0;
  std::map<std::string, std::uint64_t, std::less<>> verb_freq;
  // Number of verb instances containing (relation, filler).
  std::map<Component, std::uint64_t> component_freq;
  // Sum of component_freq over the fillers of each relation.
  std::map<std::string, std::uint64_t, std::less<>> relation_total;

  std::uint64_t token_frequency(std::string_view lemma) const;
  std::uint64_t verb_frequency(std::string_view verb) const;
  std::uint64_t component_frequency(const Component& component) const;
  std::uint64_t relation_frequency(std::string_view relation) const;

  bool operator==(const CorpusStats&) const = default;
};

CorpusStats build_stats(const Corpus& corpus, std::span<const VerbInstance> instances,
                        const StatsOptions& options = {});

// Natural-log inverse document frequency: ln(N / freq). Unseen lemmas weigh 0.
double idf(std::string_view lemma, const CorpusStats& stats);

}  // namespace verbpara
