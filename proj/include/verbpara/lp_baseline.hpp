#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "verbpara/extraction.hpp"
#include "verbpara/scoring.hpp"

namespace verbpara {

// Per-slot distributional similarity between verbs: each verb is a path
// whose subject and object are the two slots; slot similarity is the
// common-feature PMI ratio and the verb score their geometric mean.

enum class Slot { subject, object };

std::string_view to_string(Slot slot);

struct SlotVector {
  std::string verb;
  Slot slot = Slot::subject;
  std::map<std::string, std::uint64_t, std::less<>> counts;
};

class SlotTable {
 public:
  // Adds one (verb, slot, filler) observation.
  void add(std::string_view verb, Slot slot, std::string_view filler, std::uint64_t count = 1);
  // Drops fillers whose slot-wide count is below `min_freq`.
  void prune(std::uint64_t min_freq);

  const SlotVector* find(std::string_view verb, Slot slot) const;
  const std::map<std::pair<std::string, Slot>, SlotVector>& vectors() const { return vectors_; }
  std::vector<std::string> verbs() const;

  std::uint64_t slot_total(Slot slot) const;                            // count(*, slot, *)
  std::uint64_t filler_total(Slot slot, std::string_view filler) const;  // count(*, slot, f)
  std::uint64_t verb_total(std::string_view verb, Slot slot) const;      // count(v, slot, *)

 private:
  std::map<std::pair<std::string, Slot>, SlotVector> vectors_;
  std::map<std::pair<Slot, std::string>, std::uint64_t> filler_totals_;
  std::map<std::pair<std::string, Slot>, std::uint64_t> verb_totals_;
  std::uint64_t slot_totals_[2] = {0, 0};
};

// Pronoun fillers are kept: the baseline has no pronoun filter.
SlotTable build_slot_vectors(std::span<const VerbInstance> instances, std::uint64_t min_freq = 1);

// ln[count(v,s,f) count(*,s,*) / (count(v,s,*) count(*,s,f))].
// Throws std::invalid_argument when count(v,s,f) is zero.
double pmi(std::string_view verb, Slot slot, std::string_view filler, const SlotTable& table);

// Sum of positive PMI over shared features of both vectors, divided by the
// sum of positive PMI of each. 0 when nothing is positive.
double lin_slot_similarity(const SlotVector& a, const SlotVector& b, const SlotTable& table);

struct LpScore {
  TypePair pair;
  double subject_sim = 0.0;
  double object_sim = 0.0;
  double score = 0.0;  // sqrt(subject_sim * object_sim)
};

LpScore lp_similarity(std::string_view v1, std::string_view v2, const SlotTable& table);

// Every verb pair with a positive score, best first (ties by pair). Only
// pairs sharing a positive-PMI feature in both slots are evaluated.
std::vector<LpScore> lp_all_pairs(const SlotTable& table, unsigned jobs = 1);

// verb -> partners in the order they appear in `ranked`.
std::map<std::string, std::vector<std::string>, std::less<>> rankings_by_verb(
    std::span<const TypePair> ranked);

struct SampledPair {
  TypePair source;  // the pair from the input sample
  std::string pivot;
  std::string partner;
  std::size_t rank = 0;  // k: rank of the other verb in the pivot's list under our method
  bool truncated = false;
};

struct SampleOutcome {
  std::vector<SampledPair> pairs;
  std::vector<std::string> notes;  // skips and truncations
};

// For each sampled pair pick a pivot at random, find the partner's rank k in
// the pivot's list under our method and emit the pivot's k-th LP neighbour.
SampleOutcome rank_matched_sample(
    const std::map<std::string, std::vector<std::string>, std::less<>>& our_rankings,
    const std::map<std::string, std::vector<std::string>, std::less<>>& lp_rankings,
    std::span<const TypePair> sample, std::uint64_t seed);

}  // namespace verbpara
