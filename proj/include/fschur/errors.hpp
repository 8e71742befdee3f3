#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace fschur {

// Raised when a computation would enumerate more elements than the
// configured cap allows.  Callers distinguish this from contract misuse
// (std::invalid_argument) and from internal invariant violations
// (std::logic_error), which indicate a bug and abort the run.
class CapExceededError : public std::runtime_error {
public:
  CapExceededError(const std::string& what_arg, std::uint64_t cap)
      : std::runtime_error(what_arg), cap_(cap) {}
  std::uint64_t cap() const { return cap_; }

private:
  std::uint64_t cap_;
};

// Parse failure in cycle notation, group files or group specs.
class ParseError : public std::runtime_error {
public:
  explicit ParseError(const std::string& what_arg, int line = 0)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what_arg
                                    : what_arg),
        line_(line) {}
  int line() const { return line_; }

private:
  int line_;
};

inline constexpr std::uint64_t kDefaultEnumerationCap = 200000;

}  // namespace fschur
