#pragma once

#include <filesystem>
#include <istream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace verbpara {

struct Token {
  int index = 0;  // 1-based
  std::string surface;
  std::string lemma;  // lowercase, never empty
  std::string pos;    // UPOS
  int head = 0;       // 0 = root
  std::string deprel;
};

struct Sentence {
  std::string id;
  std::vector<Token> tokens;
  // `# text` comment when present, otherwise the space-joined surface forms.
  std::string text;

  const Token& token(int index) const { return tokens.at(static_cast<std::size_t>(index - 1)); }
  std::size_t size() const { return tokens.size(); }
};

class Corpus {
 public:
  // Throws InputError if a sentence with the same id is already present.
  void add(Sentence sentence);

  const std::vector<Sentence>& sentences() const { return sentences_; }
  std::size_t size() const { return sentences_.size(); }
  bool empty() const { return sentences_.empty(); }

  // nullptr when the id is unknown.
  const Sentence* find(std::string_view id) const;

 private:
  std::vector<Sentence> sentences_;
  std::unordered_map<std::string, std::size_t> by_id_;
};

// Appends every sentence block of a CoNLL-U stream to `corpus`. Sentence ids
// default to "<source_name>:<block ordinal>"; a `# sent_id` comment wins.
// Multiword-token ranges and empty nodes are skipped. Throws ParseError.
void read_conllu(std::istream& in, std::string_view source_name, Corpus& corpus);

Corpus parse_conllu(std::istream& in, std::string_view source_name = "<stdin>");

// Reads several files into one corpus; the source name is the file name
// without its directory.
Corpus load_corpus(const std::vector<std::filesystem::path>& paths);

std::string to_lower_ascii(std::string_view s);

}  // namespace verbpara
