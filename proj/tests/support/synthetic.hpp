#pragma once

#include <cstdint>
#include <filesystem>
#include <string>

#include "verbpara/corpus.hpp"

namespace verbpara::testing {

// Knobs for the random CoNLL-U generator. Each sentence is
//   [modifier] subject verb object prep noun filler* [and verb2 object2] .
// with pronoun subjects mixed in at `pronoun_rate`.
struct SyntheticSpec {
  std::size_t sentences = 10;
  std::size_t subjects = 3;
  std::size_t objects = 3;
  std::size_t verbs = 5;
  std::size_t prep_nouns = 3;
  std::size_t fillers = 8;
  std::size_t min_fillers = 0;
  std::size_t max_fillers = 4;
  double pronoun_rate = 0.1;
  double second_verb_rate = 0.0;
  bool zipf = false;  // skew every vocabulary draw
  std::uint64_t seed = 1;
};

std::string synthetic_conllu(const SyntheticSpec& spec);
Corpus synthetic_corpus(const SyntheticSpec& spec, const std::string& source = "synthetic");

std::filesystem::path source_path(const std::string& relative);
Corpus load_fixture(const std::string& relative);
std::string read_file(const std::filesystem::path& path);

}  // namespace verbpara::testing
