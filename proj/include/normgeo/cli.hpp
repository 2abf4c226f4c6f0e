#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>

namespace normgeo {

namespace exit_code {
inline constexpr int kPass = 0;
inline constexpr int kCheckFailed = 1;
inline constexpr int kUsage = 2;
}  // namespace exit_code

struct RunConfig {
  std::string subcommand;  // verify | tensors | connection | metric | cubic | oracle | group
  std::size_t n = 1;
  std::size_t max_n = 0;  // verify: 0 means "use n if given, else 1..3"
  bool n_given = false;
  std::string alpha = "1";  // exact scalar text, e.g. "-1/2" or "1/3 + 1/2*sqrt2"
  bool alpha_given = false;  // cubic: also report the alpha-connection form
  std::uint64_t seed = 1;
  std::size_t samples = 1'000'000;
  unsigned threads = 0;
  std::string what;
  // JSON arguments (inline text or @file)
  std::string sigma, mu, s, t, w, a, b, x, v;
  std::string group_mode;  // act | phi | phi-inv | pullback
  std::string certificate_path;
  std::string output_path;
  std::string format = "json";  // json | table
  bool as_float = false;
};

struct RunResult {
  int exit_code = exit_code::kPass;
  std::string output;
  std::string error;
};

/// NORMGEO_SEED if set (must be a non-negative integer), else 1.
std::uint64_t default_seed();

/// Executes one configured subcommand. Never throws: invalid input maps to
/// exit code 2 with a message in error.
RunResult run(const RunConfig& config);

/// Parses argv, runs, and writes output to --output or out. Usage and IO
/// errors go to err with exit code 2.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace normgeo
