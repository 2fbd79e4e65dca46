#include "verbpara/stats.hpp"

#include <cmath>

namespace verbpara {

namespace {

template <class Map, class Key>
std::uint64_t lookup_or_zero(const Map& map, const Key& key) {
  auto it = map.find(key);
  return it == map.end() ? 0 : it->second;
}

}  // namespace

std::uint64_t CorpusStats::token_frequency(std::string_view lemma) const {
  return lookup_or_zero(token_freq, lemma);
}

std::uint64_t CorpusStats::verb_frequency(std::string_view verb) const {
  return lookup_or_zero(verb_freq, verb);
}

std::uint64_t CorpusStats::component_frequency(const Component& component) const {
  return lookup_or_zero(component_freq, component);
}

std::uint64_t CorpusStats::relation_frequency(std::string_view relation) const {
  return lookup_or_zero(relation_total, relation);
}

CorpusStats build_stats(const Corpus& corpus, std::span<const VerbInstance> instances,
                        const StatsOptions& options) {
  CorpusStats stats;
  for (const Sentence& s : corpus.sentences()) {
    for (const Token& t : s.tokens) {
      if (options.skip_punct && t.pos == "PUNCT") continue;
      ++stats.token_count;
      ++stats.token_freq[t.lemma];
    }
  }
  for (const VerbInstance& instance : instances) {
    ++stats.verb_instance_count;
    ++stats.verb_freq[instance.verb];
    // Filler sets already hold each (relation, filler) once per instance.
    for (const auto& [relation, fillers] : instance.components) {
      for (const auto& filler : fillers) {
        ++stats.component_freq[Component{relation, filler}];
        ++stats.relation_total[relation];
      }
    }
  }
  return stats;
}

double idf(std::string_view lemma, const CorpusStats& stats) {
  const auto freq = stats.token_frequency(lemma);
  if (freq == 0 || stats.token_count == 0) return 0.0;
  return std::log(static_cast<double>(stats.token_count) / static_cast<double>(freq));
}

}  // namespace verbpara
