#include "verbpara/filtering.hpp"

#include <algorithm>
#include <tuple>

#include "verbpara/error.hpp"
#include "verbpara/parallel.hpp"

namespace verbpara {

namespace {

std::map<std::string, double> tf_idf(const Sentence& s, const CorpusStats& stats) {
  std::map<std::string, double> weights;
  for (const Token& t : s.tokens) weights[t.lemma] += 1.0;
  for (auto& [lemma, w] : weights) w *= idf(lemma, stats);
  return weights;
}

InstanceRef ref_of(const VerbInstance& instance) {
  return InstanceRef{instance.sentence_id, instance.verb, instance.token_index};
}

std::vector<Component> shared_components(const VerbInstance& a, const VerbInstance& b) {
  std::vector<Component> out;
  for (const auto& [relation, fillers] : a.components) {
    const auto* other = b.fillers(relation);
    if (other == nullptr) continue;
    for (const auto& f : fillers) {
      if (other->count(f) > 0) out.push_back(Component{relation, f});
    }
  }
  return out;
}

}  // namespace

InstanceIndex index_instances(std::span<const VerbInstance> instances,
                              const ExtractionConfig& config) {
  InstanceIndex index;
  auto usable = [&](const VerbInstance& inst, std::string_view relation) {
    std::vector<std::string> out;
    if (const auto* fillers = inst.fillers(relation)) {
      for (const auto& f : *fillers) {
        if (!inst.is_pronominal(relation, f) && config.pronouns.count(f) == 0) out.push_back(f);
      }
    }
    return out;
  };
  for (std::size_t i = 0; i < instances.size(); ++i) {
    const auto subjects = usable(instances[i], kSubject);
    const auto objects = usable(instances[i], kObject);
    for (const auto& s : subjects) {
      for (const auto& o : objects) index[PairKey{s, o}].push_back(i);
    }
  }
  return index;
}

double sentence_overlap(const Sentence& s1, const Sentence& s2, const CorpusStats& stats) {
  const auto a = tf_idf(s1, stats);
  const auto b = tf_idf(s2, stats);
  double sum = 0.0;
  for (const auto& [lemma, w] : a) {
    if (auto it = b.find(lemma); it != b.end()) sum += w * it->second;
  }
  return sum;
}

OverlapScorer::OverlapScorer(const Corpus& corpus, const CorpusStats& stats) {
  vectors_.reserve(corpus.size());
  for (const Sentence& s : corpus.sentences()) {
    auto weights = tf_idf(s, stats);
    Vector v(weights.begin(), weights.end());
    vectors_.emplace(s.id, std::move(v));
  }
}

double OverlapScorer::operator()(std::string_view id1, std::string_view id2) const {
  auto find = [&](std::string_view id) -> const Vector& {
    auto it = vectors_.find(std::string(id));
    if (it == vectors_.end()) throw InputError("unknown sentence id '" + std::string(id) + "'");
    return it->second;
  };
  const Vector& a = find(id1);
  const Vector& b = find(id2);
  // Merge over sorted lemmas; summation order matches sentence_overlap.
  double sum = 0.0;
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() && ib != b.end()) {
    if (ia->first < ib->first) {
      ++ia;
    } else if (ib->first < ia->first) {
      ++ib;
    } else {
      sum += ia->second * ib->second;
      ++ia;
      ++ib;
    }
  }
  return sum;
}

bool has_contradiction(const VerbInstance& a, const VerbInstance& b) {
  for (const auto& [relation, fillers] : a.components) {
    const auto* other = b.fillers(relation);
    if (other == nullptr) continue;
    const bool disjoint = std::none_of(fillers.begin(), fillers.end(),
                                       [&](const std::string& f) { return other->count(f) > 0; });
    if (disjoint) return true;
  }
  return false;
}

bool pair_order(const InstancePair& a, const InstancePair& b) {
  if (a.overlap_score != b.overlap_score) return a.overlap_score > b.overlap_score;
  return std::tie(a.key, a.left.sentence_id, a.right.sentence_id, a.left.verb, a.right.verb,
                  a.left.token_index, a.right.token_index) <
         std::tie(b.key, b.left.sentence_id, b.right.sentence_id, b.left.verb, b.right.verb,
                  b.left.token_index, b.right.token_index);
}

FilterResult generate_filtered_pairs(const InstanceIndex& index,
                                     std::span<const VerbInstance> instances, const Corpus& corpus,
                                     const CorpusStats& stats, const FilterOptions& options) {
  if (options.overlap_threshold < 0) throw InputError("overlap threshold must be non-negative");
  for (const auto& [key, members] : index) {
    for (std::size_t i : members) {
      if (corpus.find(instances[i].sentence_id) == nullptr) {
        throw InputError("instance of '" + instances[i].verb + "' references unknown sentence '" +
                         instances[i].sentence_id + "'");
      }
    }
  }

  const OverlapScorer overlap(corpus, stats);
  std::vector<const std::pair<const PairKey, std::vector<std::size_t>>*> buckets;
  buckets.reserve(index.size());
  for (const auto& entry : index) buckets.push_back(&entry);

  struct BucketResult {
    std::vector<InstancePair> pairs;
    FilterCounts counts;
  };
  std::vector<BucketResult> results(buckets.size());

  parallel_for(buckets.size(), options.jobs, [&](std::size_t b) {
    const auto& [key, members] = *buckets[b];
    BucketResult& out = results[b];
    for (std::size_t x = 0; x < members.size(); ++x) {
      for (std::size_t y = x + 1; y < members.size(); ++y) {
        const VerbInstance* left = &instances[members[x]];
        const VerbInstance* right = &instances[members[y]];
        if (left->verb == right->verb) continue;
        if (!options.allow_same_sentence && left->sentence_id == right->sentence_id) continue;
        if (right->verb < left->verb) std::swap(left, right);
        ++out.counts.candidate_pairs;

        const double score = overlap(left->sentence_id, right->sentence_id);
        if (score < options.overlap_threshold) continue;
        ++out.counts.after_overlap;

        if (!options.keep_contradictions && has_contradiction(*left, *right)) continue;
        ++out.counts.after_contradiction;

        out.pairs.push_back(InstancePair{key, ref_of(*left), ref_of(*right), score,
                                         shared_components(*left, *right)});
      }
    }
  });

  FilterResult merged;
  merged.counts.keys = index.size();
  for (auto& r : results) {
    merged.counts.candidate_pairs += r.counts.candidate_pairs;
    merged.counts.after_overlap += r.counts.after_overlap;
    merged.counts.after_contradiction += r.counts.after_contradiction;
    std::move(r.pairs.begin(), r.pairs.end(), std::back_inserter(merged.pairs));
  }
  std::sort(merged.pairs.begin(), merged.pairs.end(), pair_order);
  return merged;
}

}  // namespace verbpara
