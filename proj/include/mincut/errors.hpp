#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mincut {

// Malformed input text. Carries the 1-based line number of the offending line.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// The input is well formed but structurally unusable: a tree that does not
// span, a disconnected graph where connectivity is required, etc.
class StructuralError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A query was called outside its contract (e = f, wrong edge relation, ...).
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A virtual (binarization) edge or a non-tree edge was used as a cut candidate.
class CandidacyError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace mincut
