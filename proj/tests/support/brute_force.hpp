#pragma once

#include <string>
#include <vector>

#include "verbpara/corpus.hpp"
#include "verbpara/extraction.hpp"

namespace verbpara::testing {

// Reference scorer for small corpora. Enumerates every instance pair,
// recounts all frequencies by linear scans and multiplies probabilities
// directly. Shares no code with the filtering and scoring modules.
struct OracleScore {
  std::string v1;
  std::string v2;
  double score = 0.0;
  std::size_t support = 0;
};

std::vector<OracleScore> brute_force_scores(const Corpus& corpus, const std::vector<VerbInstance>& instances,
                                            double threshold, const ExtractionConfig& config);

// Direct tf-idf dot product by counting lemma occurrences.
double brute_force_overlap(const Corpus& corpus, const Sentence& a, const Sentence& b);

}  // namespace verbpara::testing
