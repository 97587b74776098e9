#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace provstream {

enum class Errc {
  kDuplicateInputConnection,
  kCycleDetected,
  kTypeMismatch,
  kUnknownProcessor,
  kInvalidPipe,
  kPositionNotYetProduced,
  kFieldAccess,
  kDomain,
  kNoFireableTransition,
  kContractViolation,
  kParse,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

// Log parsing failure; carries the 1-based line number of the offending line.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error(Errc::kParse, "line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace provstream
