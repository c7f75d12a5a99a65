#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hyperstream {

// Violated precondition of a library call (wrong arity, vertex not in range,
// edge not present, ...).
class ContractError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Operation is defined only for some arities (e.g. shadow hypergraphs need k >= 3).
class UnsupportedArityError : public ContractError {
 public:
  using ContractError::ContractError;
};

// An exact computation was asked for an instance above its size cap.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class EmptySamplerError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class NoEdgesError : public std::runtime_error {
 public:
  NoEdgesError() : std::runtime_error("stream contains no edges") {}
};

class EstimationFailedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed edge-list input. line() is 1-based; 0 when not tied to a line.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// Well-formed input that disagrees with the declared header (arity, vertex range, edge count).
class FormatError : public ParseError {
 public:
  using ParseError::ParseError;
};

// A per-edge callback threw during run_passes; pass_index() is 0-based.
class PassError : public std::runtime_error {
 public:
  PassError(std::size_t pass_index, const std::string& what)
      : std::runtime_error("pass " + std::to_string(pass_index + 1) + " failed: " + what),
        pass_index_(pass_index) {}
  std::size_t pass_index() const noexcept { return pass_index_; }

 private:
  std::size_t pass_index_;
};

}  // namespace hyperstream
