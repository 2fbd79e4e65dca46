#include "verbpara/scoring.hpp"

#include <algorithm>
#include <cmath>
#include <tuple>

#include "verbpara/error.hpp"
#include "verbpara/parallel.hpp"

namespace verbpara {

namespace {

double neg_log_ratio(std::uint64_t count, std::uint64_t total, const std::string& what) {
  if (count == 0 || total == 0) {
    throw ConsistencyError("zero frequency for " + what + " (statistics do not match the pairs)");
  }
  return std::log(static_cast<double>(total)) - std::log(static_cast<double>(count));
}

}  // namespace

TypePair TypePair::canonical(std::string_view a, std::string_view b) {
  if (a == b) throw InputError("verb type pair needs two distinct verbs, got '" + std::string(a) + "' twice");
  if (b < a) std::swap(a, b);
  return TypePair{std::string(a), std::string(b)};
}

std::optional<MleMode> mle_mode_from_string(std::string_view name) {
  if (name == "per-instance") return MleMode::per_instance;
  if (name == "per-relation") return MleMode::per_relation;
  return std::nullopt;
}

std::string_view to_string(MleMode mode) {
  return mode == MleMode::per_instance ? "per-instance" : "per-relation";
}

double instance_pair_neg_log_probability(const InstancePair& pair, const CorpusStats& stats,
                                         MleMode mode) {
  const auto total = stats.verb_instance_count;
  // Fixed summation order keeps the value bit-identical under swapping sides.
  const auto& [v1, v2] = std::minmax(pair.left.verb, pair.right.verb);
  double sum = neg_log_ratio(stats.verb_frequency(v1), total, "verb '" + v1 + "'");
  sum += neg_log_ratio(stats.verb_frequency(v2), total, "verb '" + v2 + "'");
  for (const Component& c : pair.shared_components) {
    const auto denominator =
        mode == MleMode::per_instance ? total : stats.relation_frequency(c.relation);
    sum += 2.0 * neg_log_ratio(stats.component_frequency(c), denominator,
                               "component " + c.relation + "='" + c.filler + "'");
  }
  return sum;
}

double instance_pair_probability(const InstancePair& pair, const CorpusStats& stats, MleMode mode) {
  return std::exp(-instance_pair_neg_log_probability(pair, stats, mode));
}

std::map<TypePair, BestInstanceSet> select_best_per_key(std::span<const InstancePair> pairs,
                                                        const CorpusStats& stats, MleMode mode) {
  struct Best {
    const InstancePair* pair;
    double neg_log_p;
  };
  std::map<TypePair, std::map<PairKey, Best>> best;
  for (const InstancePair& p : pairs) {
    const double nlp = instance_pair_neg_log_probability(p, stats, mode);
    auto& slot = best[TypePair::canonical(p.left.verb, p.right.verb)];
    auto [it, inserted] = slot.try_emplace(p.key, Best{&p, nlp});
    if (inserted) continue;
    const InstancePair& held = *it->second.pair;
    // Higher -ln P is lower probability; equal values fall back to evidence ids.
    const bool better =
        nlp > it->second.neg_log_p ||
        (nlp == it->second.neg_log_p &&
         std::tie(p.left.sentence_id, p.right.sentence_id, p.left.token_index, p.right.token_index) <
             std::tie(held.left.sentence_id, held.right.sentence_id, held.left.token_index,
                      held.right.token_index));
    if (better) it->second = Best{&p, nlp};
  }

  std::map<TypePair, BestInstanceSet> out;
  for (auto& [type_pair, keyed] : best) {
    BestInstanceSet set{type_pair, {}};
    for (auto& [key, b] : keyed) set.members.emplace(key, *b.pair);
    out.emplace(type_pair, std::move(set));
  }
  return out;
}

TypePairScore type_pair_score(const BestInstanceSet& set, const CorpusStats& stats, MleMode mode) {
  TypePairScore out;
  out.pair = set.pair;
  for (const auto& [key, member] : set.members) {
    out.score += instance_pair_neg_log_probability(member, stats, mode);
    out.evidence.emplace_back(member.left.sentence_id, member.right.sentence_id);
  }
  out.support = set.members.size();
  return out;
}

std::vector<TypePairScore> rank_type_pairs(std::vector<TypePairScore> scores) {
  std::sort(scores.begin(), scores.end(), [](const TypePairScore& a, const TypePairScore& b) {
    if (a.score != b.score) return a.score > b.score;
    return a.pair < b.pair;
  });
  return scores;
}

std::vector<TypePairScore> score_pairs(std::span<const InstancePair> pairs, const CorpusStats& stats,
                                       MleMode mode, unsigned jobs) {
  const auto sets = select_best_per_key(pairs, stats, mode);
  std::vector<const BestInstanceSet*> work;
  work.reserve(sets.size());
  for (const auto& [pair, set] : sets) work.push_back(&set);
  std::vector<TypePairScore> scores(work.size());
  parallel_for(work.size(), jobs, [&](std::size_t i) { scores[i] = type_pair_score(*work[i], stats, mode); });
  return rank_type_pairs(std::move(scores));
}

}  // namespace verbpara
