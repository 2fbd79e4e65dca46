#include "verbpara/corpus.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <optional>

#include "verbpara/error.hpp"

namespace verbpara {

namespace {

constexpr std::size_t kConlluColumns = 10;

std::vector<std::string_view> split_tabs(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const auto tab = line.find('\t', start);
    if (tab == std::string_view::npos) {
      fields.push_back(line.substr(start));
      return fields;
    }
    fields.push_back(line.substr(start, tab - start));
    start = tab + 1;
  }
}

std::optional<int> parse_int(std::string_view s) {
  int value = 0;
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, value);
  if (ec != std::errc{} || ptr != end) return std::nullopt;
  return value;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

// Value of a "# key = value" comment, if the comment has that key.
std::optional<std::string_view> comment_value(std::string_view line, std::string_view key) {
  auto body = trim(line.substr(1));
  if (body.substr(0, key.size()) != key) return std::nullopt;
  body = trim(body.substr(key.size()));
  if (body.empty() || body.front() != '=') return std::nullopt;
  return trim(body.substr(1));
}

struct Block {
  std::size_t first_line = 0;
  std::optional<std::string> sent_id;
  std::optional<std::string> text;
  std::vector<Token> tokens;
  std::vector<std::size_t> token_lines;
};

void validate_block(const Block& block, const std::string& source) {
  const int n = static_cast<int>(block.tokens.size());
  for (std::size_t i = 0; i < block.tokens.size(); ++i) {
    const Token& t = block.tokens[i];
    if (t.head > n) {
      throw ParseError(source, block.token_lines[i],
                       "head " + std::to_string(t.head) + " of token " + std::to_string(t.index) +
                           " is out of range (sentence has " + std::to_string(n) + " tokens)");
    }
  }
  bool has_root = false;
  for (int i = 0; i < n; ++i) {
    const Token& t = block.tokens[static_cast<std::size_t>(i)];
    if (t.index != i + 1) {
      throw ParseError(source, block.first_line,
                       "token ids are not contiguous: expected " + std::to_string(i + 1) +
                           ", found " + std::to_string(t.index));
    }
    if (t.head == 0) has_root = true;
  }
  if (!has_root) throw ParseError(source, block.first_line, "sentence has no root token");
  // Every chain of heads must reach the root within n steps.
  for (const Token& t : block.tokens) {
    int current = t.index;
    int steps = 0;
    while (current != 0) {
      current = block.tokens[static_cast<std::size_t>(current - 1)].head;
      if (++steps > n) {
        throw ParseError(source, block.first_line,
                         "dependency cycle through token " + std::to_string(t.index));
      }
    }
  }
}

}  // namespace

std::string to_lower_ascii(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

void Corpus::add(Sentence sentence) {
  auto [it, inserted] = by_id_.emplace(sentence.id, sentences_.size());
  if (!inserted) throw InputError("duplicate sentence id '" + sentence.id + "'");
  sentences_.push_back(std::move(sentence));
}

const Sentence* Corpus::find(std::string_view id) const {
  auto it = by_id_.find(std::string(id));
  if (it == by_id_.end()) return nullptr;
  return &sentences_[it->second];
}

void read_conllu(std::istream& in, std::string_view source_name, Corpus& corpus) {
  const std::string source(source_name);
  Block block;
  std::size_t ordinal = 0;
  std::size_t line_no = 0;

  auto flush = [&] {
    if (block.tokens.empty()) {
      block = Block{};
      return;
    }
    ++ordinal;
    validate_block(block, source);
    Sentence s;
    s.id = block.sent_id ? *block.sent_id : source + ":" + std::to_string(ordinal);
    if (block.text) {
      s.text = *block.text;
    } else {
      for (const Token& t : block.tokens) {
        if (!s.text.empty()) s.text += ' ';
        s.text += t.surface;
      }
    }
    s.tokens = std::move(block.tokens);
    try {
      corpus.add(std::move(s));
    } catch (const InputError& e) {
      throw ParseError(source, block.first_line, e.what());
    }
    block = Block{};
  };

  std::string raw;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line(raw);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (trim(line).empty()) {
      flush();
      continue;
    }
    if (block.first_line == 0) block.first_line = line_no;
    if (line.front() == '#') {
      if (auto v = comment_value(line, "sent_id")) block.sent_id = std::string(*v);
      else if (auto t = comment_value(line, "text")) block.text = std::string(*t);
      continue;
    }
    const auto fields = split_tabs(line);
    if (fields.size() != kConlluColumns) {
      throw ParseError(source, line_no,
                       "expected " + std::to_string(kConlluColumns) +
                           " tab-separated columns, found " + std::to_string(fields.size()));
    }
    const std::string_view id = fields[0];
    if (id.find('-') != std::string_view::npos || id.find('.') != std::string_view::npos) {
      continue;  // multiword range or empty node
    }
    const auto index = parse_int(id);
    if (!index || *index < 1) throw ParseError(source, line_no, "invalid token id '" + std::string(id) + "'");
    const auto head = parse_int(fields[6]);
    if (!head || *head < 0) {
      throw ParseError(source, line_no, "invalid head '" + std::string(fields[6]) + "'");
    }
    if (*head == *index) throw ParseError(source, line_no, "token is its own head");

    Token t;
    t.index = *index;
    t.surface = std::string(fields[1]);
    t.lemma = fields[2] == "_" ? to_lower_ascii(fields[1]) : to_lower_ascii(fields[2]);
    if (t.lemma.empty()) t.lemma = to_lower_ascii(fields[1]);
    if (t.lemma.empty()) throw ParseError(source, line_no, "empty lemma and surface form");
    t.pos = std::string(fields[3]);
    t.head = *head;
    t.deprel = std::string(fields[7]);
    block.tokens.push_back(std::move(t));
    block.token_lines.push_back(line_no);
  }
  flush();
}

Corpus parse_conllu(std::istream& in, std::string_view source_name) {
  Corpus corpus;
  read_conllu(in, source_name, corpus);
  return corpus;
}

Corpus load_corpus(const std::vector<std::filesystem::path>& paths) {
  Corpus corpus;
  for (const auto& path : paths) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open corpus file '" + path.string() + "'");
    read_conllu(in, path.filename().string(), corpus);
  }
  return corpus;
}

}  // namespace verbpara
