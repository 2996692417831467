#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace concvec::cli {

inline constexpr const char* kVersion = "1.0.0";

/// Exit-code contract of the concvec tool.
enum ExitCode : int { kOk = 0, kInputError = 1, kMismatch = 2 };

enum class Format { text, json };

struct ComputeOptions {
  std::string state_path;
  double tol = 1e-10;
  Format format = Format::text;
};

struct ComponentsOptions {
  std::string state_path;
  std::size_t i = 0;
  std::size_t j = 1;
  Format format = Format::text;
};

struct GenOptions {
  std::string family;
  std::size_t m = 3;
  double s = 0.5;
  double phi = 0.0;
  double alpha = 1.0;
  double beta = 0.0;
  std::size_t n = 2;
  std::vector<std::size_t> dims;
  std::uint64_t seed = 0;
  std::string out;  // empty: standard output
};

struct SweepOptions {
  std::string family;
  std::size_t steps = 11;
  std::vector<double> phi_values{0.0};
  std::string out;  // empty: standard output
};

struct VerifyOptions {
  std::string state_path;
  double tol = 1e-9;
};

// Each command writes its document to `out`. Input problems throw
// io::FormatError or std::invalid_argument; run() maps them to kInputError.
int compute(const ComputeOptions& opts, std::ostream& out);
int components(const ComponentsOptions& opts, std::ostream& out);
int gen(const GenOptions& opts, std::ostream& out);
int sweep(const SweepOptions& opts, std::ostream& out);
int verify(const VerifyOptions& opts, std::ostream& out);

/// Parses argv, dispatches, and converts exceptions to exit codes with a
/// message on `err`.
int run(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace concvec::cli
