#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace mbstar {

// Every error carries a stable one-word code so the CLI can render
// machine-greppable diagnostics and map codes to exit statuses.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)) {}

  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t offset, std::vector<std::string> expected, const std::string& found)
      : Error("parse-error", format(offset, expected, found)),
        offset_(offset),
        expected_(std::move(expected)),
        found_(found) {}

  std::size_t offset() const { return offset_; }
  const std::vector<std::string>& expected() const { return expected_; }
  const std::string& found() const { return found_; }

 private:
  static std::string format(std::size_t offset, const std::vector<std::string>& expected,
                            const std::string& found);

  std::size_t offset_;
  std::vector<std::string> expected_;
  std::string found_;
};

class CapExceededError : public Error {
 public:
  CapExceededError(std::size_t atom_count, std::uint64_t cap)
      : Error("cap-exceeded", "enumeration over " + std::to_string(atom_count) +
                                  " decision atoms exceeds cap of " + std::to_string(cap) +
                                  " assignments"),
        atom_count_(atom_count),
        cap_(cap) {}

  CapExceededError(const std::string& message, std::uint64_t cap)
      : Error("cap-exceeded", message), atom_count_(0), cap_(cap) {}

  std::size_t atom_count() const { return atom_count_; }
  std::uint64_t cap() const { return cap_; }

 private:
  std::size_t atom_count_;
  std::uint64_t cap_;
};

class UnknownAtomError : public Error {
 public:
  explicit UnknownAtomError(const std::string& atom)
      : Error("unknown-atom", "formula refers to decision atom '" + atom +
                                  "' absent from the closure") {}
};

class ClosureMismatchError : public Error {
 public:
  explicit ClosureMismatchError(const std::string& message)
      : Error("closure-mismatch", message) {}
};

class ZeroConditionError : public Error {
 public:
  explicit ZeroConditionError(const std::string& given)
      : Error("zero-condition", "conditioning formula has probability zero: " + given) {}
};

class HypothesisViolatedError : public Error {
 public:
  explicit HypothesisViolatedError(const std::string& term)
      : Error("hypothesis-violated", "theorem hypothesis violated: P(" + term + ") = 0"),
        term_(term) {}

  const std::string& term() const { return term_; }

 private:
  std::string term_;
};

class InvalidInputError : public Error {
 public:
  explicit InvalidInputError(const std::string& message)
      : Error("invalid-input", message) {}
};

class IoError : public Error {
 public:
  explicit IoError(const std::string& message) : Error("io-error", message) {}
};

}  // namespace mbstar
