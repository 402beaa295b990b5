#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hypercheck/identities.hpp"
#include "hypercheck/rational.hpp"

namespace hypercheck {

struct IntRange {
  long lo = 0;
  long hi = -1;  ///< inclusive; lo > hi is an empty range
};

/// Random rational parameters k/q: q drawn from `denominators`, k uniform in
/// [-bound, bound] with q not dividing k, then shifted by an integer offset.
struct SamplerSpec {
  std::vector<std::string> names;
  std::vector<long> denominators{7, 11, 13};
  long numerator_bound = 40;
  long count = 0;
  bool grid = false;  ///< count values per name, combined as a cartesian product
  std::map<std::string, long> bound;  ///< per-name numerator bound
  std::map<std::string, long> shift;  ///< per-name integer offset
};

/// A sweep description. Text grammar (sections and `key = value` lines,
/// `#` or `;` start a comment):
///
///   [sweep]    name, identity, mode (exact|numeric), order, seed, threads
///   [ranges]   <integer parameter> = lo..hi
///   [values]   <parameter> = v1, v2, ...      (rationals "p/q")
///   [sample]   names = a, b; denominators = 7, 11; numerator_bound = 40;
///              count = 20; combine = tuples|grid; bound.<name> = B; shift.<name> = s
///   [numeric]  precision_bits = 192; abs_err = 1e-30
struct SweepConfig {
  std::string name;
  std::string identity;
  EvalMode mode = EvalMode::exact;
  long order = 30;
  std::uint64_t seed = 1;
  unsigned threads = 0;  ///< 0: one per hardware thread
  NumericSettings numeric;
  std::vector<std::pair<std::string, IntRange>> ranges;
  std::vector<std::pair<std::string, std::vector<Rational>>> values;
  SamplerSpec sample;
};

/// Throws ConfigError with the offending line number.
[[nodiscard]] SweepConfig parse_sweep_config(std::string_view text);
/// Throws ConfigError when the file cannot be read or parsed.
[[nodiscard]] SweepConfig load_sweep_config(const std::filesystem::path& path);

}  // namespace hypercheck
