// Copyright (c) 2026 The ppm authors
// SPDX-License-Identifier: Apache-2.0

#ifndef PPM_COMMON_HPP
#define PPM_COMMON_HPP

#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ppm {

enum class Errc {
  missing_column,
  unparseable_timestamp,
  empty_log,
  malformed_xml,
  missing_concept_name,
  shape_mismatch,
  index_out_of_range,
  untracked_loss,
  unfitted_normalizer,
  already_normalized,
  unknown_activity,
  non_finite_loss,
  non_finite_value,
  empty_eval_set,
  checkpoint_mismatch,
  no_runs_found,
  invalid_config,
  io_error,
};

const char* errc_name(Errc c);

/// Single exception type for all library failures; the code identifies the
/// contract that was violated and the message carries the specifics.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& message) { throw Error(code, message); }

/// Deterministic RNG. mt19937_64's output sequence is pinned by the standard;
/// the distribution mappings below are hand-rolled so that draws are
/// bit-identical across compilers and platforms (std::uniform_*_distribution
/// are implementation-defined).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() { return state_(); }

  /// Uniform in [0, 1) with 53 random mantissa bits.
  double next_unit() { return static_cast<double>(state_() >> 11) * 0x1.0p-53; }

  double next_uniform(double lo, double hi) { return lo + (hi - lo) * next_unit(); }

  /// Uniform integer in [0, n), rejection-sampled to avoid modulo bias.
  std::uint64_t next_below(std::uint64_t n);

  template <class T>
  void shuffle(std::vector<T>& items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      std::size_t j = static_cast<std::size_t>(next_below(i));
      std::swap(items[i - 1], items[j]);
    }
  }

 private:
  std::mt19937_64 state_;
};

/// Derives an independent seed stream from a master seed and a purpose tag,
/// so e.g. init and shuffling never consume from the same sequence.
std::uint64_t mix_seed(std::uint64_t seed, std::string_view tag);

// --- timestamps ------------------------------------------------------------

/// Milliseconds per hour; durations throughout the pipeline are in hours.
inline constexpr double kMsPerHour = 3'600'000.0;

/// Days since 1970-01-01 for a proleptic Gregorian date (Hinnant's algorithm).
std::int64_t days_from_civil(int year, unsigned month, unsigned day);

/// Parses `text` as a UTC instant in epoch milliseconds.
///
/// `pattern` is either the literal "iso8601" (accepts 2011-04-03T10:05:38.123+02:00,
/// trailing Z, or no zone designator = UTC) or a strftime-like pattern built from
/// %Y %m %d %H %M %S %f and literal characters.
/// Returns nullopt when the text does not match.
std::optional<std::int64_t> parse_timestamp(std::string_view text, std::string_view pattern);

/// Fixed rendering used by cache/debug output: "YYYY-mm-ddTHH:MM:SS.sssZ".
std::string format_timestamp(std::int64_t epoch_ms);

}  // namespace ppm

#endif  // PPM_COMMON_HPP
