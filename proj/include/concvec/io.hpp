#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "concvec/state.hpp"

namespace concvec::io {

/// Input error with the 1-based line of the offending text, 0 if unknown.
class FormatError : public std::runtime_error {
 public:
  FormatError(std::size_t line, const std::string& what)
      : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Parses a state document:
///
///   {"dims": [2, 2, 2],
///    "amps": [{"idx": [0, 0, 0], "re": 0.70710678, "im": 0.0}, ...],
///    "normalize": false}
///
/// Unknown keys, duplicate or out-of-range indices, and (with normalize off)
/// an unnormalized vector are rejected with a FormatError.
PureState parse_state(std::string_view text);
PureState read_state_file(const std::string& path);

/// Serializes nonzero amplitudes in flat-offset order with 12 decimals.
std::string format_state(const PureState& psi);
void write_state_file(const std::string& path, const PureState& psi);

/// Fixed-point, 12 digits after the decimal point, locale independent;
/// negative zero prints as zero.
std::string format_number(double value);

/// The double nearest to format_number(value).
double round_printed(double value);

}  // namespace concvec::io
