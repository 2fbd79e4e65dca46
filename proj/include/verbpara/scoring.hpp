#pragma once

#include <compare>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "verbpara/filtering.hpp"
#include "verbpara/stats.hpp"

namespace verbpara {

// Unordered verb pair in canonical orientation (first < second).
struct TypePair {
  std::string first;
  std::string second;

  // Throws InputError if a == b.
  static TypePair canonical(std::string_view a, std::string_view b);

  bool contains(std::string_view verb) const { return first == verb || second == verb; }
  const std::string& other(std::string_view verb) const { return first == verb ? second : first; }

  auto operator<=>(const TypePair&) const = default;
};

// Denominator of the component probabilities. per_instance divides every
// count by the number of verb instances; per_relation divides by the total of
// the component's relation.
enum class MleMode { per_instance, per_relation };

std::optional<MleMode> mle_mode_from_string(std::string_view name);
std::string_view to_string(MleMode mode);

// -ln P(v1) - ln P(v2) - 2 * sum ln P(p_i), evaluated term by term.
// Throws ConsistencyError when any factor has a zero count.
double instance_pair_neg_log_probability(const InstancePair& pair, const CorpusStats& stats,
                                         MleMode mode = MleMode::per_instance);

// P(v1) P(v2) prod P(p_i)^2, in (0, 1].
double instance_pair_probability(const InstancePair& pair, const CorpusStats& stats,
                                 MleMode mode = MleMode::per_instance);

struct BestInstanceSet {
  TypePair pair;
  // Lowest-probability instance pair per subject-object key.
  std::map<PairKey, InstancePair> members;
};

std::map<TypePair, BestInstanceSet> select_best_per_key(std::span<const InstancePair> pairs,
                                                        const CorpusStats& stats,
                                                        MleMode mode = MleMode::per_instance);

struct TypePairScore {
  TypePair pair;
  double score = 0.0;  // -ln of the product of member probabilities
  std::size_t support = 0;
  std::vector<std::pair<std::string, std::string>> evidence;  // sentence ids, key order

  bool operator==(const TypePairScore&) const = default;
};

TypePairScore type_pair_score(const BestInstanceSet& set, const CorpusStats& stats,
                              MleMode mode = MleMode::per_instance);

// Descending score, ties by pair.
std::vector<TypePairScore> rank_type_pairs(std::vector<TypePairScore> scores);

// select_best_per_key, type_pair_score and rank_type_pairs in one call.
std::vector<TypePairScore> score_pairs(std::span<const InstancePair> pairs, const CorpusStats& stats,
                                       MleMode mode = MleMode::per_instance, unsigned jobs = 1);

}  // namespace verbpara
