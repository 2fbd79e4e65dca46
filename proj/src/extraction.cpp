#include "verbpara/extraction.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "verbpara/parallel.hpp"

namespace verbpara {

namespace {

std::string_view universal_part(std::string_view deprel) {
  return deprel.substr(0, deprel.find(':'));
}

bool has_subtype(std::string_view deprel, std::string_view subtype) {
  const auto colon = deprel.find(':');
  return colon != std::string_view::npos && deprel.substr(colon + 1) == subtype;
}

// Modifiers that become part of the head's term.
bool absorbed_relation(std::string_view deprel) {
  const auto base = universal_part(deprel);
  return base == "compound" || base == "fixed" || base == "flat" || base == "name" ||
         base == "nummod" || base == "goeswith" || base == "mwe" || base == "nn" || base == "num";
}

// Absorbed relations rendered with '_' instead of a space.
bool underscore_relation(std::string_view deprel) {
  const auto base = universal_part(deprel);
  return base == "compound" || base == "fixed" || base == "goeswith" || base == "mwe" ||
         base == "nn";
}

bool auxiliary_like(std::string_view deprel) {
  const auto base = universal_part(deprel);
  return base == "aux" || base == "auxpass" || base == "cop" || base == "amod";
}

bool passive_subject(std::string_view deprel) {
  return deprel == "nsubjpass" || deprel == "csubjpass" || has_subtype(deprel, "pass");
}

bool passive_marker(std::string_view deprel) {
  return deprel == "auxpass" || deprel == "aux:pass" || passive_subject(deprel);
}

// Child lists of one sentence, indexed by token index (0 = root).
class DependencyView {
 public:
  explicit DependencyView(const Sentence& sentence)
      : sentence_(sentence), children_(sentence.size() + 1) {
    for (const Token& t : sentence.tokens) {
      children_[static_cast<std::size_t>(t.head)].push_back(t.index);
    }
  }

  const Sentence& sentence() const { return sentence_; }
  const Token& token(int index) const { return sentence_.token(index); }
  const std::vector<int>& children(int index) const {
    return children_[static_cast<std::size_t>(index)];
  }

  // Lemmas of the children attached with `base` deprel, in sentence order.
  std::vector<std::string> child_lemmas(int index, std::string_view base) const {
    std::vector<std::string> out;
    for (int c : children(index)) {
      if (universal_part(token(c).deprel) == base) out.push_back(token(c).lemma);
    }
    return out;
  }

 private:
  const Sentence& sentence_;
  std::vector<std::vector<int>> children_;
};

void collect_term(const DependencyView& view, int index, std::vector<int>& out) {
  out.push_back(index);
  for (int c : view.children(index)) {
    if (absorbed_relation(view.token(c).deprel)) collect_term(view, c, out);
  }
}

std::string render_term(const DependencyView& view, int head) {
  std::vector<int> members;
  collect_term(view, head, members);
  std::sort(members.begin(), members.end());

  std::string text;
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (i > 0) {
      const Token& prev = view.token(members[i - 1]);
      const Token& cur = view.token(members[i]);
      const bool glued = (prev.head == cur.index && underscore_relation(prev.deprel)) ||
                         (cur.head == prev.index && underscore_relation(cur.deprel)) ||
                         (prev.head == cur.head && underscore_relation(prev.deprel) &&
                          underscore_relation(cur.deprel));
      text += glued ? '_' : ' ';
    }
    text += normalize_filler_lemma(view.token(members[i]).lemma);
  }
  return text;
}

std::optional<int> of_complement(const DependencyView& view, int head) {
  for (int c : view.children(head)) {
    const Token& child = view.token(c);
    const auto base = universal_part(child.deprel);
    if (child.deprel == "nmod:of" || child.deprel == "prep_of") return c;
    if (base != "nmod") continue;
    for (int cc : view.children(c)) {
      const Token& marker = view.token(cc);
      if (universal_part(marker.deprel) == "case" && marker.lemma == "of") return c;
    }
  }
  return std::nullopt;
}

ExtendedHead extend(const DependencyView& view, int head) {
  std::string text = render_term(view, head);
  if (auto complement = of_complement(view, head)) {
    text += " of ";
    text += render_term(view, *complement);
  }
  return ExtendedHead{std::move(text)};
}

void add_component(VerbInstance& instance, std::string relation, ExtendedHead head, bool pronominal) {
  if (pronominal) instance.pronominal[relation].insert(head.text);
  instance.components[std::move(relation)].insert(std::move(head.text));
}

std::string join_underscore(const std::vector<std::string>& parts) {
  std::string out;
  for (const auto& p : parts) {
    if (!out.empty()) out += '_';
    out += normalize_filler_lemma(p);
  }
  return out;
}

}  // namespace

std::optional<RelationKind> relation_kind_from_string(std::string_view name) {
  if (name == "subject") return RelationKind::subject;
  if (name == "object") return RelationKind::object;
  if (name == "pp" || name == "pp-<prep>" || name == "preposition") return RelationKind::preposition;
  if (name == "modifier") return RelationKind::modifier;
  if (name == "ignore") return RelationKind::ignore;
  return std::nullopt;
}

std::string_view to_string(RelationKind kind) {
  switch (kind) {
    case RelationKind::subject: return "subject";
    case RelationKind::object: return "object";
    case RelationKind::preposition: return "pp";
    case RelationKind::modifier: return "modifier";
    case RelationKind::ignore: return "ignore";
  }
  return "ignore";
}

ExtractionConfig ExtractionConfig::defaults() {
  ExtractionConfig config;
  config.relations = {
      {"nsubj", RelationKind::subject},     {"nsubj:pass", RelationKind::subject},
      {"nsubjpass", RelationKind::subject}, {"obj", RelationKind::object},
      {"dobj", RelationKind::object},       {"obl", RelationKind::preposition},
      {"nmod", RelationKind::preposition},  {"obl:agent", RelationKind::preposition},
      {"advmod", RelationKind::modifier},   {"advcl", RelationKind::modifier},
  };
  config.pronouns = {
      "i",       "me",         "my",     "mine",     "myself",   "you",   "your",  "yours",
      "yourself", "yourselves", "he",    "him",      "his",      "himself", "she", "her",
      "hers",    "herself",    "it",     "its",      "itself",   "we",    "us",    "our",
      "ours",    "ourselves",  "they",   "them",     "their",    "theirs", "themselves",
      "this",    "that",       "these",  "those",    "who",      "whom",  "whose", "which",
      "what",    "whoever",    "whatever", "there",  "one",      "someone", "something",
      "anyone",  "anything",   "everyone", "everything", "nobody", "nothing", "somebody",
  };
  return config;
}

RelationKind ExtractionConfig::lookup(std::string_view deprel) const {
  if (auto it = relations.find(deprel); it != relations.end()) return it->second;
  if (auto it = relations.find(universal_part(deprel)); it != relations.end()) return it->second;
  return RelationKind::ignore;
}

const std::set<std::string>* VerbInstance::fillers(std::string_view relation) const {
  auto it = components.find(relation);
  return it == components.end() ? nullptr : &it->second;
}

bool VerbInstance::is_pronominal(std::string_view relation, std::string_view filler) const {
  auto it = pronominal.find(relation);
  return it != pronominal.end() && it->second.count(std::string(filler)) > 0;
}

std::vector<Component> VerbInstance::component_list() const {
  std::vector<Component> out;
  for (const auto& [relation, fillers] : components) {
    for (const auto& f : fillers) out.push_back(Component{relation, f});
  }
  return out;
}

std::string normalize_filler_lemma(std::string_view lemma) {
  std::string out = to_lower_ascii(lemma);
  for (std::size_t i = 0; i < out.size(); ++i) {
    const auto c = static_cast<unsigned char>(out[i]);
    if (std::isspace(c)) {
      out[i] = '_';
    } else if (c == '-' && i > 0 && i + 1 < out.size() &&
               std::isalpha(static_cast<unsigned char>(out[i - 1])) &&
               std::isalpha(static_cast<unsigned char>(out[i + 1]))) {
      out[i] = '_';
    }
  }
  return out;
}

bool is_verbal(const Token& token) {
  return (token.pos == "VERB" || token.pos == "AUX") && !auxiliary_like(token.deprel);
}

ExtendedHead extend_head(const Token& head_token, const Sentence& sentence) {
  const DependencyView view(sentence);
  return extend(view, head_token.index);
}

bool is_pronoun(const ExtendedHead& head, const Token& head_token, const ExtractionConfig& config) {
  if (head_token.pos == "PRON") return true;
  return config.pronouns.count(head_token.lemma) > 0 || config.pronouns.count(head.text) > 0;
}

std::vector<VerbInstance> extract_instances(const Sentence& sentence, const ExtractionConfig& config) {
  const DependencyView view(sentence);
  std::vector<VerbInstance> out;

  for (const Token& verb : sentence.tokens) {
    if (!is_verbal(verb)) continue;
    const auto& children = view.children(verb.index);
    const bool passive = std::any_of(children.begin(), children.end(), [&](int c) {
      return passive_marker(view.token(c).deprel);
    });

    VerbInstance instance;
    instance.verb = verb.lemma;
    instance.sentence_id = sentence.id;
    instance.token_index = verb.index;

    for (int c : children) {
      const Token& dep = view.token(c);
      switch (config.lookup(dep.deprel)) {
        case RelationKind::ignore:
          break;
        case RelationKind::subject:
        case RelationKind::object: {
          const bool as_object = config.lookup(dep.deprel) == RelationKind::object ||
                                 (passive && passive_subject(dep.deprel));
          auto head = extend(view, c);
          const bool pron = is_pronoun(head, dep, config);
          add_component(instance, std::string(as_object ? kObject : kSubject), std::move(head), pron);
          break;
        }
        case RelationKind::preposition: {
          std::string prep = join_underscore(view.child_lemmas(c, "case"));
          if (prep.empty() && has_subtype(dep.deprel, "agent")) prep = "by";
          if (prep.empty()) break;  // bare nominal, e.g. a temporal obl
          auto head = extend(view, c);
          const bool pron = is_pronoun(head, dep, config);
          if (passive && prep == "by") {
            add_component(instance, std::string(kSubject), std::move(head), pron);
          } else {
            add_component(instance, std::string(kPrepositionPrefix) + prep, std::move(head), pron);
          }
          break;
        }
        case RelationKind::modifier: {
          auto markers = view.child_lemmas(c, "mark");
          if (!markers.empty()) {
            add_component(instance, std::string(kModifier), ExtendedHead{join_underscore(markers)}, false);
          } else if (!is_verbal(dep)) {
            add_component(instance, std::string(kModifier), extend(view, c), false);
          }
          break;
        }
      }
    }
    out.push_back(std::move(instance));
  }
  return out;
}

std::vector<VerbInstance> extract_corpus(const Corpus& corpus, const ExtractionConfig& config,
                                         unsigned jobs) {
  const auto& sentences = corpus.sentences();
  std::vector<std::vector<VerbInstance>> per_sentence(sentences.size());
  parallel_for(sentences.size(), jobs, [&](std::size_t i) {
    per_sentence[i] = extract_instances(sentences[i], config);
  });
  std::vector<VerbInstance> out;
  out.reserve(std::accumulate(per_sentence.begin(), per_sentence.end(), std::size_t{0},
                              [](std::size_t n, const auto& v) { return n + v.size(); }));
  for (auto& v : per_sentence) {
    std::move(v.begin(), v.end(), std::back_inserter(out));
  }
  return out;
}

}  // namespace verbpara
