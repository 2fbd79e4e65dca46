#pragma once

#include <compare>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "verbpara/corpus.hpp"

namespace verbpara {

// Relation labels produced by extraction. Prepositional components use
// "pp-<preposition lemma>".
inline constexpr std::string_view kSubject = "subject";
inline constexpr std::string_view kObject = "object";
inline constexpr std::string_view kModifier = "modifier";
inline constexpr std::string_view kPrepositionPrefix = "pp-";

// What a dependency label maps to in a verb instance.
enum class RelationKind { subject, object, preposition, modifier, ignore };

std::optional<RelationKind> relation_kind_from_string(std::string_view name);
std::string_view to_string(RelationKind kind);

struct ExtractionConfig {
  // deprel -> relation kind. Lookup tries the full label ("nsubj:pass") first,
  // then its universal part ("nsubj"). Unlisted labels are ignored.
  std::map<std::string, RelationKind, std::less<>> relations;
  std::set<std::string, std::less<>> pronouns;

  static ExtractionConfig defaults();
  RelationKind lookup(std::string_view deprel) const;
};

// A component head widened into a multi-word term.
struct ExtendedHead {
  std::string text;

  auto operator<=>(const ExtendedHead&) const = default;
};

// One (relation, filler) entry of a verb instance.
struct Component {
  std::string relation;
  std::string filler;

  auto operator<=>(const Component&) const = default;
};

using ComponentMap = std::map<std::string, std::set<std::string>, std::less<>>;

struct VerbInstance {
  std::string verb;
  std::string sentence_id;
  int token_index = 0;
  ComponentMap components;
  // Fillers whose head token was pronominal, keyed like `components`.
  ComponentMap pronominal;

  const std::set<std::string>* fillers(std::string_view relation) const;
  bool is_pronominal(std::string_view relation, std::string_view filler) const;
  std::vector<Component> component_list() const;

  bool operator==(const VerbInstance&) const = default;
};

// Lemma normalization for filler text: lowercase, whitespace and
// letter-hyphen-letter joins become underscores.
std::string normalize_filler_lemma(std::string_view lemma);

bool is_verbal(const Token& token);

// Head plus compound, flat, fixed and numeric modifiers, followed by an
// optional "of <complement>".
ExtendedHead extend_head(const Token& head_token, const Sentence& sentence);

bool is_pronoun(const ExtendedHead& head, const Token& head_token, const ExtractionConfig& config);

std::vector<VerbInstance> extract_instances(const Sentence& sentence, const ExtractionConfig& config);

// All instances of the corpus in sentence order. Deterministic for any `jobs`.
std::vector<VerbInstance> extract_corpus(const Corpus& corpus, const ExtractionConfig& config,
                                         unsigned jobs = 1);

}  // namespace verbpara
