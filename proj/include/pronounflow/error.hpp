#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pronounflow {

// Base of every error the library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input text (CoNLL-U, TSV, JSON). Carries the 1-based line
// number when one is known (0 otherwise).
class FormatError : public Error {
 public:
  FormatError(const std::string& what, std::size_t line = 0)
      : Error(line ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// Well-formed lines that describe an invalid dependency structure.
class StructureError : public Error {
 public:
  StructureError(std::string sentence_id, const std::string& what)
      : Error("sentence " + sentence_id + ": " + what),
        sentence_id_(std::move(sentence_id)) {}

  const std::string& sentence_id() const noexcept { return sentence_id_; }

 private:
  std::string sentence_id_;
};

// A caller broke a documented precondition.
class ContractViolation : public Error {
 public:
  using Error::Error;
};

// A fill-mask backend could not answer (network failure, bad response,
// missing fixture entry).
class TransportError : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

// A file could not be opened or read.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace pronounflow
