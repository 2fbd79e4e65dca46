#include "brute_force.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <tuple>

namespace verbpara::testing {

namespace {

double count_lemma(const Corpus& corpus, const std::string& lemma) {
  double n = 0;
  for (const auto& s : corpus.sentences()) {
    for (const auto& t : s.tokens) n += t.lemma == lemma ? 1 : 0;
  }
  return n;
}

double total_tokens(const Corpus& corpus) {
  double n = 0;
  for (const auto& s : corpus.sentences()) n += static_cast<double>(s.tokens.size());
  return n;
}

std::set<std::string> fillers_of(const VerbInstance& inst, const std::string& relation) {
  auto it = inst.components.find(relation);
  return it == inst.components.end() ? std::set<std::string>{} : it->second;
}

bool pronominal(const VerbInstance& inst, const std::string& relation, const std::string& filler,
                const ExtractionConfig& config) {
  auto it = inst.pronominal.find(relation);
  if (it != inst.pronominal.end() && it->second.count(filler)) return true;
  return config.pronouns.count(filler) > 0;
}

}  // namespace

double brute_force_overlap(const Corpus& corpus, const Sentence& a, const Sentence& b) {
  const double n = total_tokens(corpus);
  std::set<std::string> lemmas;
  for (const auto& t : a.tokens) lemmas.insert(t.lemma);
  double sum = 0;
  for (const auto& lemma : lemmas) {
    double tf_a = 0;
    double tf_b = 0;
    for (const auto& t : a.tokens) tf_a += t.lemma == lemma;
    for (const auto& t : b.tokens) tf_b += t.lemma == lemma;
    if (tf_b == 0) continue;
    const double w = std::log(n / count_lemma(corpus, lemma));
    sum += tf_a * w * tf_b * w;
  }
  return sum;
}

std::vector<OracleScore> brute_force_scores(const Corpus& corpus, const std::vector<VerbInstance>& instances,
                                            double threshold, const ExtractionConfig& config) {
  const double total = static_cast<double>(instances.size());
  auto verb_p = [&](const std::string& verb) {
    double n = 0;
    for (const auto& inst : instances) n += inst.verb == verb;
    return n / total;
  };
  auto component_p = [&](const std::string& relation, const std::string& filler) {
    double n = 0;
    for (const auto& inst : instances) n += fillers_of(inst, relation).count(filler) > 0;
    return n / total;
  };

  struct Candidate {
    double probability;
    std::string left_sentence;
    std::string right_sentence;
  };
  // (v1, v2) -> (subject, object) -> best candidate
  std::map<std::pair<std::string, std::string>, std::map<std::pair<std::string, std::string>, Candidate>> best;

  for (std::size_t i = 0; i < instances.size(); ++i) {
    for (std::size_t j = 0; j < instances.size(); ++j) {
      if (i == j) continue;
      const VerbInstance& a = instances[i];
      const VerbInstance& b = instances[j];
      if (!(a.verb < b.verb)) continue;  // each unordered pair once, canonical side first
      if (a.sentence_id == b.sentence_id) continue;

      std::vector<std::pair<std::string, std::string>> keys;
      for (const auto& s : fillers_of(a, "subject")) {
        if (!fillers_of(b, "subject").count(s)) continue;
        if (pronominal(a, "subject", s, config) || pronominal(b, "subject", s, config)) continue;
        for (const auto& o : fillers_of(a, "object")) {
          if (!fillers_of(b, "object").count(o)) continue;
          if (pronominal(a, "object", o, config) || pronominal(b, "object", o, config)) continue;
          keys.emplace_back(s, o);
        }
      }
      if (keys.empty()) continue;

      const double overlap =
          brute_force_overlap(corpus, *corpus.find(a.sentence_id), *corpus.find(b.sentence_id));
      if (overlap < threshold) continue;

      bool contradiction = false;
      double p = verb_p(a.verb) * verb_p(b.verb);
      for (const auto& [relation, fa] : a.components) {
        const auto fb = fillers_of(b, relation);
        if (fb.empty()) continue;
        bool any_common = false;
        for (const auto& f : fa) {
          if (fb.count(f)) {
            any_common = true;
            const double pc = component_p(relation, f);
            p *= pc * pc;
          }
        }
        if (!any_common) contradiction = true;
      }
      if (contradiction) continue;

      for (const auto& key : keys) {
        auto& slot = best[{a.verb, b.verb}];
        Candidate c{p, a.sentence_id, b.sentence_id};
        auto it = slot.find(key);
        if (it == slot.end()) {
          slot.emplace(key, c);
        } else if (p < it->second.probability ||
                   (p == it->second.probability &&
                    std::tie(c.left_sentence, c.right_sentence) <
                        std::tie(it->second.left_sentence, it->second.right_sentence))) {
          it->second = c;
        }
      }
    }
  }

  std::vector<OracleScore> out;
  for (const auto& [verbs, keyed] : best) {
    double product = 1.0;
    for (const auto& [key, c] : keyed) product *= c.probability;
    out.push_back(OracleScore{verbs.first, verbs.second, -std::log(product), keyed.size()});
  }
  return out;
}

}  // namespace verbpara::testing
