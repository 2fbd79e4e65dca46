#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace verbpara {

// Bad user input: malformed files, unknown ids, invalid flags. CLI exit code 1.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A CoNLL-U or TSV/JSON-lines line that cannot be read.
class ParseError : public InputError {
 public:
  ParseError(const std::string& source, std::size_t line, const std::string& what)
      : InputError(source + ":" + std::to_string(line) + ": " + what),
        source_(source),
        line_(line) {}

  const std::string& source() const { return source_; }
  std::size_t line() const { return line_; }

 private:
  std::string source_;
  std::size_t line_;
};

// Violated pipeline invariant, e.g. a zero MLE count for a factor that must
// have been observed. CLI exit code 2.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace verbpara
