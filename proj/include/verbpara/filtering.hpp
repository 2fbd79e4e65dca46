#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "verbpara/corpus.hpp"
#include "verbpara/extraction.hpp"
#include "verbpara/stats.hpp"

namespace verbpara {

// Shared non-pronoun subject and object of a candidate pair.
struct PairKey {
  std::string subject;
  std::string object;

  auto operator<=>(const PairKey&) const = default;
};

// Identifies one side of an instance pair.
struct InstanceRef {
  std::string sentence_id;
  std::string verb;
  int token_index = 0;

  auto operator<=>(const InstanceRef&) const = default;
};

// Two instances of distinct verbs in distinct sentences under one key, with
// left.verb < right.verb.
struct InstancePair {
  PairKey key;
  InstanceRef left;
  InstanceRef right;
  double overlap_score = 0.0;
  // Every (relation, filler) present in both instances, sorted. Always
  // contains the key's subject and object.
  std::vector<Component> shared_components;

  bool operator==(const InstancePair&) const = default;
};

using InstanceIndex = std::map<PairKey, std::vector<std::size_t>>;

// Buckets instance positions by every (subject, object) filler combination.
// Instances missing either slot, or whose filler is pronominal, are left out.
InstanceIndex index_instances(std::span<const VerbInstance> instances,
                              const ExtractionConfig& config = ExtractionConfig::defaults());

// Unnormalized tf-idf dot product over lemmas.
double sentence_overlap(const Sentence& s1, const Sentence& s2, const CorpusStats& stats);

// Precomputed tf-idf vectors for repeated overlap queries.
class OverlapScorer {
 public:
  OverlapScorer(const Corpus& corpus, const CorpusStats& stats);
  double operator()(std::string_view id1, std::string_view id2) const;

 private:
  using Vector = std::vector<std::pair<std::string, double>>;  // sorted by lemma
  std::unordered_map<std::string, Vector> vectors_;
};

// True when some relation is present in both instances with disjoint fillers.
bool has_contradiction(const VerbInstance& a, const VerbInstance& b);

struct FilterOptions {
  double overlap_threshold = 100.0;
  bool keep_contradictions = false;
  bool allow_same_sentence = false;
  unsigned jobs = 1;
};

// Pair counts after each stage; non-increasing from top to bottom.
struct FilterCounts {
  std::size_t keys = 0;
  std::size_t candidate_pairs = 0;
  std::size_t after_overlap = 0;
  std::size_t after_contradiction = 0;
};

struct FilterResult {
  std::vector<InstancePair> pairs;
  FilterCounts counts;
};

// Output ordered by overlap descending, then key, sentence ids, verbs.
FilterResult generate_filtered_pairs(const InstanceIndex& index,
                                     std::span<const VerbInstance> instances, const Corpus& corpus,
                                     const CorpusStats& stats, const FilterOptions& options = {});

bool pair_order(const InstancePair& a, const InstancePair& b);

}  // namespace verbpara
