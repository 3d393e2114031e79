// Copyright (c) 2026 The ppm authors
// SPDX-License-Identifier: Apache-2.0

#include "ppm/common.hpp"

#include <cstdio>

namespace ppm {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::missing_column: return "MissingColumn";
    case Errc::unparseable_timestamp: return "UnparseableTimestamp";
    case Errc::empty_log: return "EmptyLog";
    case Errc::malformed_xml: return "MalformedXml";
    case Errc::missing_concept_name: return "MissingConceptName";
    case Errc::shape_mismatch: return "ShapeMismatch";
    case Errc::index_out_of_range: return "IndexOutOfRange";
    case Errc::untracked_loss: return "UntrackedLoss";
    case Errc::unfitted_normalizer: return "UnfittedNormalizer";
    case Errc::already_normalized: return "AlreadyNormalized";
    case Errc::unknown_activity: return "UnknownActivity";
    case Errc::non_finite_loss: return "NonFiniteLoss";
    case Errc::non_finite_value: return "NonFiniteValue";
    case Errc::empty_eval_set: return "EmptyEvalSet";
    case Errc::checkpoint_mismatch: return "MismatchError";
    case Errc::no_runs_found: return "NoRunsFound";
    case Errc::invalid_config: return "InvalidConfig";
    case Errc::io_error: return "IoError";
  }
  return "Error";
}

std::uint64_t Rng::next_below(std::uint64_t n) {
  if (n == 0) fail(Errc::index_out_of_range, "next_below(0)");
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  std::uint64_t x;
  do {
    x = state_();
  } while (x >= limit);
  return x % n;
}

std::uint64_t mix_seed(std::uint64_t seed, std::string_view tag) {
  // splitmix64 over the seed and a FNV-1a hash of the tag
  std::uint64_t h = 1469598103934665603ULL;
  for (char c : tag) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ULL;
  }
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL + h;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::int64_t days_from_civil(int y, unsigned m, unsigned d) {
  y -= m <= 2;
  const std::int64_t era = (y >= 0 ? y : y - 399) / 400;
  const unsigned yoe = static_cast<unsigned>(y - era * 400);
  const unsigned doy = (153 * (m + (m > 2 ? -3 : 9)) + 2) / 5 + d - 1;
  const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
  return era * 146097 + static_cast<std::int64_t>(doe) - 719468;
}

namespace {

void civil_from_days(std::int64_t z, int& y, unsigned& m, unsigned& d) {
  z += 719468;
  const std::int64_t era = (z >= 0 ? z : z - 146096) / 146097;
  const unsigned doe = static_cast<unsigned>(z - era * 146097);
  const unsigned yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
  const std::int64_t yr = static_cast<std::int64_t>(yoe) + era * 400;
  const unsigned doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
  const unsigned mp = (5 * doy + 2) / 153;
  d = doy - (153 * mp + 2) / 5 + 1;
  m = mp + (mp < 10 ? 3 : -9);
  y = static_cast<int>(yr + (m <= 2));
}

bool read_digits(std::string_view s, std::size_t& pos, int count, long& out) {
  if (pos + count > s.size()) return false;
  long v = 0;
  for (int i = 0; i < count; ++i) {
    char c = s[pos + i];
    if (c < '0' || c > '9') return false;
    v = v * 10 + (c - '0');
  }
  pos += count;
  out = v;
  return true;
}

// Fraction of a second with up to 9 digits, scaled to milliseconds (truncated).
bool read_fraction(std::string_view s, std::size_t& pos, long& millis) {
  std::size_t start = pos;
  long v = 0;
  while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9' && pos - start < 9) {
    v = v * 10 + (s[pos] - '0');
    ++pos;
  }
  std::size_t digits = pos - start;
  if (digits == 0) return false;
  while (digits < 3) {
    v *= 10;
    ++digits;
  }
  while (digits > 3) {
    v /= 10;
    --digits;
  }
  millis = v;
  return true;
}

std::optional<std::int64_t> parse_iso8601(std::string_view s) {
  std::size_t pos = 0;
  long year, month, day, hour, minute, second;
  if (!read_digits(s, pos, 4, year)) return std::nullopt;
  if (pos >= s.size() || s[pos] != '-') return std::nullopt;
  ++pos;
  if (!read_digits(s, pos, 2, month)) return std::nullopt;
  if (pos >= s.size() || s[pos] != '-') return std::nullopt;
  ++pos;
  if (!read_digits(s, pos, 2, day)) return std::nullopt;
  if (pos >= s.size() || (s[pos] != 'T' && s[pos] != ' ')) return std::nullopt;
  ++pos;
  if (!read_digits(s, pos, 2, hour)) return std::nullopt;
  if (pos >= s.size() || s[pos] != ':') return std::nullopt;
  ++pos;
  if (!read_digits(s, pos, 2, minute)) return std::nullopt;
  if (pos >= s.size() || s[pos] != ':') return std::nullopt;
  ++pos;
  if (!read_digits(s, pos, 2, second)) return std::nullopt;
  long millis = 0;
  if (pos < s.size() && (s[pos] == '.' || s[pos] == ',')) {
    ++pos;
    if (!read_fraction(s, pos, millis)) return std::nullopt;
  }
  long offset_min = 0;
  if (pos < s.size()) {
    char c = s[pos];
    if (c == 'Z' || c == 'z') {
      ++pos;
    } else if (c == '+' || c == '-') {
      ++pos;
      long oh, om = 0;
      if (!read_digits(s, pos, 2, oh)) return std::nullopt;
      if (pos < s.size() && s[pos] == ':') ++pos;
      if (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') {
        if (!read_digits(s, pos, 2, om)) return std::nullopt;
      }
      offset_min = oh * 60 + om;
      if (c == '-') offset_min = -offset_min;
    }
  }
  if (pos != s.size()) return std::nullopt;
  if (month < 1 || month > 12 || day < 1 || day > 31 || hour > 23 || minute > 59 || second > 60)
    return std::nullopt;
  std::int64_t days = days_from_civil(static_cast<int>(year), static_cast<unsigned>(month),
                                      static_cast<unsigned>(day));
  std::int64_t ms = ((days * 24 + hour) * 60 + minute) * 60'000 + second * 1000 + millis;
  return ms - offset_min * 60'000;
}

}  // namespace

std::optional<std::int64_t> parse_timestamp(std::string_view text, std::string_view pattern) {
  if (pattern.empty() || pattern == "iso8601") return parse_iso8601(text);
  std::size_t pos = 0;
  long year = 1970, month = 1, day = 1, hour = 0, minute = 0, second = 0, millis = 0;
  for (std::size_t pi = 0; pi < pattern.size(); ++pi) {
    char pc = pattern[pi];
    if (pc != '%') {
      if (pos >= text.size() || text[pos] != pc) return std::nullopt;
      ++pos;
      continue;
    }
    if (++pi >= pattern.size()) return std::nullopt;
    bool ok = true;
    switch (pattern[pi]) {
      case 'Y': ok = read_digits(text, pos, 4, year); break;
      case 'm': ok = read_digits(text, pos, 2, month); break;
      case 'd': ok = read_digits(text, pos, 2, day); break;
      case 'H': ok = read_digits(text, pos, 2, hour); break;
      case 'M': ok = read_digits(text, pos, 2, minute); break;
      case 'S': ok = read_digits(text, pos, 2, second); break;
      case 'f': ok = read_fraction(text, pos, millis); break;
      case '%':
        ok = pos < text.size() && text[pos] == '%';
        ++pos;
        break;
      default: return std::nullopt;
    }
    if (!ok) return std::nullopt;
  }
  if (pos != text.size()) return std::nullopt;
  if (month < 1 || month > 12 || day < 1 || day > 31 || hour > 23 || minute > 59 || second > 60)
    return std::nullopt;
  std::int64_t days = days_from_civil(static_cast<int>(year), static_cast<unsigned>(month),
                                      static_cast<unsigned>(day));
  return ((days * 24 + hour) * 60 + minute) * 60'000 + second * 1000 + millis;
}

std::string format_timestamp(std::int64_t epoch_ms) {
  std::int64_t days = epoch_ms / 86'400'000;
  std::int64_t rem = epoch_ms % 86'400'000;
  if (rem < 0) {
    rem += 86'400'000;
    --days;
  }
  int y;
  unsigned m, d;
  civil_from_days(days, y, m, d);
  int hh = static_cast<int>(rem / 3'600'000);
  int mm = static_cast<int>(rem / 60'000 % 60);
  int ss = static_cast<int>(rem / 1000 % 60);
  int ms = static_cast<int>(rem % 1000);
  char buf[40];
  std::snprintf(buf, sizeof buf, "%04d-%02u-%02uT%02d:%02d:%02d.%03dZ", y, m, d, hh, mm, ss, ms);
  return buf;
}

}  // namespace ppm
