#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ejnet/eisenstein.hpp"
#include "ejnet/panconnectivity.hpp"

namespace ejnet::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFalse = 1;
inline constexpr int kExitUsage = 2;

/// Parses "a,b" into a validated generator. Throws InvalidGenerator or
/// std::invalid_argument on malformed text.
Generator parse_alpha(const std::string& text);

struct BenchRow {
  Generator alpha;
  std::size_t n = 0;
  double seconds = 0.0;
  bool succeeded = true;
};

/// Times panconnectivity_list for each generator, keeping the minimum of `repeat` runs.
std::vector<BenchRow> run_bench(const std::vector<Generator>& alphas, unsigned repeat, const SweepOptions& options);

/// Least-squares slope of log(seconds) against log(n); empty with fewer than two rows.
std::optional<double> fit_loglog_slope(const std::vector<BenchRow>& rows);

/// Directory searched for named fixtures such as "table1".
std::string fixture_dir();

/// Entry point shared by the executable and the tests.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ejnet::cli
