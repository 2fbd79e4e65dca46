#include "verbpara/lp_baseline.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <stdexcept>

#include "verbpara/parallel.hpp"

namespace verbpara {

namespace {

std::size_t slot_index(Slot slot) { return slot == Slot::subject ? 0 : 1; }

// Positive-PMI weights of one vector, keyed by filler.
std::map<std::string, double, std::less<>> positive_features(const SlotVector& v,
                                                             const SlotTable& table) {
  std::map<std::string, double, std::less<>> out;
  for (const auto& [filler, count] : v.counts) {
    const double w = pmi(v.verb, v.slot, filler, table);
    if (w > 0.0) out.emplace(filler, w);
  }
  return out;
}

double lin_from_features(const std::map<std::string, double, std::less<>>& a,
                         const std::map<std::string, double, std::less<>>& b) {
  double common = 0.0;
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() && ib != b.end()) {
    if (ia->first < ib->first) {
      ++ia;
    } else if (ib->first < ia->first) {
      ++ib;
    } else {
      // Commutative per term, so lin(a, b) == lin(b, a) bit for bit.
      common += ia->second + ib->second;
      ++ia;
      ++ib;
    }
  }
  double sum_a = 0.0;
  for (const auto& [f, w] : a) sum_a += w;
  double sum_b = 0.0;
  for (const auto& [f, w] : b) sum_b += w;
  const double denominator = sum_a + sum_b;
  if (denominator <= 0.0) return 0.0;
  return std::min(1.0, common / denominator);
}

LpScore combine(std::string_view v1, std::string_view v2, double subject_sim, double object_sim) {
  LpScore s;
  s.pair = TypePair::canonical(v1, v2);
  s.subject_sim = subject_sim;
  s.object_sim = object_sim;
  s.score = std::sqrt(subject_sim * object_sim);
  return s;
}

}  // namespace

std::string_view to_string(Slot slot) { return slot == Slot::subject ? "subject" : "object"; }

void SlotTable::add(std::string_view verb, Slot slot, std::string_view filler, std::uint64_t count) {
  if (count == 0) return;
  auto key = std::make_pair(std::string(verb), slot);
  auto [it, inserted] = vectors_.try_emplace(key);
  if (inserted) {
    it->second.verb = std::string(verb);
    it->second.slot = slot;
  }
  auto c = it->second.counts.find(filler);
  if (c == it->second.counts.end()) {
    it->second.counts.emplace(std::string(filler), count);
  } else {
    c->second += count;
  }
  filler_totals_[{slot, std::string(filler)}] += count;
  verb_totals_[key] += count;
  slot_totals_[slot_index(slot)] += count;
}

void SlotTable::prune(std::uint64_t min_freq) {
  if (min_freq <= 1) return;
  SlotTable kept;
  for (const auto& [key, vec] : vectors_) {
    for (const auto& [filler, count] : vec.counts) {
      if (filler_total(vec.slot, filler) >= min_freq) kept.add(vec.verb, vec.slot, filler, count);
    }
  }
  *this = std::move(kept);
}

const SlotVector* SlotTable::find(std::string_view verb, Slot slot) const {
  auto it = vectors_.find(std::make_pair(std::string(verb), slot));
  return it == vectors_.end() ? nullptr : &it->second;
}

std::vector<std::string> SlotTable::verbs() const {
  std::set<std::string> seen;
  for (const auto& [key, vec] : vectors_) seen.insert(key.first);
  return {seen.begin(), seen.end()};
}

std::uint64_t SlotTable::slot_total(Slot slot) const { return slot_totals_[slot_index(slot)]; }

std::uint64_t SlotTable::filler_total(Slot slot, std::string_view filler) const {
  auto it = filler_totals_.find(std::make_pair(slot, std::string(filler)));
  return it == filler_totals_.end() ? 0 : it->second;
}

std::uint64_t SlotTable::verb_total(std::string_view verb, Slot slot) const {
  auto it = verb_totals_.find(std::make_pair(std::string(verb), slot));
  return it == verb_totals_.end() ? 0 : it->second;
}

SlotTable build_slot_vectors(std::span<const VerbInstance> instances, std::uint64_t min_freq) {
  SlotTable table;
  for (const VerbInstance& inst : instances) {
    for (Slot slot : {Slot::subject, Slot::object}) {
      if (const auto* fillers = inst.fillers(to_string(slot))) {
        for (const auto& f : *fillers) table.add(inst.verb, slot, f);
      }
    }
  }
  table.prune(min_freq);
  return table;
}

double pmi(std::string_view verb, Slot slot, std::string_view filler, const SlotTable& table) {
  const SlotVector* v = table.find(verb, slot);
  std::uint64_t count = 0;
  if (v != nullptr) {
    if (auto it = v->counts.find(filler); it != v->counts.end()) count = it->second;
  }
  if (count == 0) {
    throw std::invalid_argument("pmi of unobserved (" + std::string(verb) + ", " +
                                std::string(to_string(slot)) + ", " + std::string(filler) + ")");
  }
  const double numerator = static_cast<double>(count) * static_cast<double>(table.slot_total(slot));
  const double denominator = static_cast<double>(table.verb_total(verb, slot)) *
                             static_cast<double>(table.filler_total(slot, filler));
  return std::log(numerator / denominator);
}

double lin_slot_similarity(const SlotVector& a, const SlotVector& b, const SlotTable& table) {
  if (a.slot != b.slot) throw std::invalid_argument("lin_slot_similarity across different slots");
  return lin_from_features(positive_features(a, table), positive_features(b, table));
}

LpScore lp_similarity(std::string_view v1, std::string_view v2, const SlotTable& table) {
  auto slot_sim = [&](Slot slot) {
    const SlotVector* a = table.find(v1, slot);
    const SlotVector* b = table.find(v2, slot);
    if (a == nullptr || b == nullptr) return 0.0;
    return lin_slot_similarity(*a, *b, table);
  };
  return combine(v1, v2, slot_sim(Slot::subject), slot_sim(Slot::object));
}

std::vector<LpScore> lp_all_pairs(const SlotTable& table, unsigned jobs) {
  const auto verbs = table.verbs();
  std::map<std::string, std::size_t, std::less<>> verb_id;
  for (std::size_t i = 0; i < verbs.size(); ++i) verb_id.emplace(verbs[i], i);

  using Features = std::map<std::string, double, std::less<>>;
  std::vector<Features> features[2];
  std::map<std::string, std::vector<std::size_t>, std::less<>> postings[2];
  for (Slot slot : {Slot::subject, Slot::object}) {
    const auto s = slot_index(slot);
    features[s].resize(verbs.size());
    for (std::size_t v = 0; v < verbs.size(); ++v) {
      if (const SlotVector* vec = table.find(verbs[v], slot)) {
        features[s][v] = positive_features(*vec, table);
        for (const auto& [filler, w] : features[s][v]) postings[s][filler].push_back(v);
      }
    }
  }

  // Candidates must share a positive feature in both slots for a non-zero
  // geometric mean.
  std::vector<std::vector<LpScore>> per_verb(verbs.size());
  parallel_for(verbs.size(), jobs, [&](std::size_t v) {
    std::set<std::size_t> subject_partners;
    for (const auto& [filler, w] : features[0][v]) {
      for (std::size_t u : postings[0].at(filler)) {
        if (u > v) subject_partners.insert(u);
      }
    }
    std::set<std::size_t> both;
    for (const auto& [filler, w] : features[1][v]) {
      for (std::size_t u : postings[1].at(filler)) {
        if (u > v && subject_partners.count(u) > 0) both.insert(u);
      }
    }
    for (std::size_t u : both) {
      auto s = combine(verbs[v], verbs[u], lin_from_features(features[0][v], features[0][u]),
                       lin_from_features(features[1][v], features[1][u]));
      if (s.score > 0.0) per_verb[v].push_back(std::move(s));
    }
  });

  std::vector<LpScore> out;
  for (auto& list : per_verb) std::move(list.begin(), list.end(), std::back_inserter(out));
  std::sort(out.begin(), out.end(), [](const LpScore& a, const LpScore& b) {
    if (a.score != b.score) return a.score > b.score;
    return a.pair < b.pair;
  });
  return out;
}

std::map<std::string, std::vector<std::string>, std::less<>> rankings_by_verb(
    std::span<const TypePair> ranked) {
  std::map<std::string, std::vector<std::string>, std::less<>> out;
  for (const TypePair& p : ranked) {
    out[p.first].push_back(p.second);
    out[p.second].push_back(p.first);
  }
  return out;
}

SampleOutcome rank_matched_sample(
    const std::map<std::string, std::vector<std::string>, std::less<>>& our_rankings,
    const std::map<std::string, std::vector<std::string>, std::less<>>& lp_rankings,
    std::span<const TypePair> sample, std::uint64_t seed) {
  SampleOutcome out;
  std::mt19937_64 rng(seed);
  for (const TypePair& source : sample) {
    // Top bit of one draw; independent of the standard library's distributions.
    const bool first_is_pivot = (rng() >> 63) == 0;
    const std::string& pivot = first_is_pivot ? source.first : source.second;
    const std::string& other = source.other(pivot);
    const std::string label = "<" + source.first + ", " + source.second + ">";

    auto ours = our_rankings.find(pivot);
    if (ours == our_rankings.end()) {
      out.notes.push_back("skip " + label + ": pivot '" + pivot + "' has no ranking under our method");
      continue;
    }
    auto pos = std::find(ours->second.begin(), ours->second.end(), other);
    if (pos == ours->second.end()) {
      out.notes.push_back("skip " + label + ": '" + other + "' not ranked for pivot '" + pivot + "'");
      continue;
    }
    const auto k = static_cast<std::size_t>(pos - ours->second.begin()) + 1;

    auto lp = lp_rankings.find(pivot);
    if (lp == lp_rankings.end() || lp->second.empty()) {
      out.notes.push_back("skip " + label + ": pivot '" + pivot + "' absent from LP rankings");
      continue;
    }
    SampledPair s;
    s.source = source;
    s.pivot = pivot;
    s.rank = k;
    if (k > lp->second.size()) {
      s.partner = lp->second.back();
      s.truncated = true;
      out.notes.push_back("truncate " + label + ": rank " + std::to_string(k) + " beyond LP list of " +
                          std::to_string(lp->second.size()) + " for '" + pivot + "'");
    } else {
      s.partner = lp->second[k - 1];
    }
    out.pairs.push_back(std::move(s));
  }
  return out;
}

}  // namespace verbpara
