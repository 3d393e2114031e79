// Copyright (c) 2026 The ppm authors
// SPDX-License-Identifier: Apache-2.0

#ifndef PPM_EVENTLOG_HPP
#define PPM_EVENTLOG_HPP

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "ppm/common.hpp"

namespace ppm {

/// One step of a process execution. `extras` keeps any additional categorical
/// attributes in source order; they are carried through the cache but not
/// encoded by default.
struct Event {
  std::string case_id;
  std::string activity;
  std::int64_t timestamp_ms = 0;  // UTC epoch milliseconds
  std::optional<std::string> resource;
  std::vector<std::pair<std::string, std::string>> extras;

  bool operator==(const Event&) const = default;
};

/// Time-ordered events of a single case. Events are sorted by timestamp with
/// source order breaking ties.
struct Trace {
  std::string case_id;
  std::vector<Event> events;

  bool operator==(const Trace&) const = default;

  /// Total duration from first to last event, in hours.
  double duration_hours() const {
    return static_cast<double>(events.back().timestamp_ms - events.front().timestamp_ms) / kMsPerHour;
  }
};

/// Reserved tokens. START/END live at indices 0 and 1 of the activity vocab;
/// UNK at index 0 of the resource vocab.
inline constexpr const char* kStartToken = "<START>";
inline constexpr const char* kEndToken = "<END>";
inline constexpr const char* kUnkToken = "<UNK>";
inline constexpr std::int64_t kStartIndex = 0;
inline constexpr std::int64_t kEndIndex = 1;
inline constexpr std::int64_t kUnkIndex = 0;

/// Contiguous string<->index bijection with reserved tokens up front.
/// Entry order is first-appearance order, which makes vocab construction
/// deterministic for a given input.
class Vocab {
 public:
  static Vocab activities() {
    Vocab v;
    v.add(kStartToken);
    v.add(kEndToken);
    return v;
  }
  static Vocab resources() {
    Vocab v;
    v.add(kUnkToken);
    return v;
  }
  static Vocab from_entries(std::vector<std::string> entries);

  std::int64_t add(const std::string& entry);
  /// Index of `entry`, or -1 when absent.
  std::int64_t lookup(const std::string& entry) const;
  bool contains(const std::string& entry) const { return lookup(entry) >= 0; }
  std::int64_t size() const { return static_cast<std::int64_t>(entries_.size()); }
  const std::string& at(std::int64_t index) const;
  const std::vector<std::string>& entries() const { return entries_; }

  bool operator==(const Vocab& other) const { return entries_ == other.entries_; }

 private:
  std::vector<std::string> entries_;
  std::unordered_map<std::string, std::int64_t> index_;
};

struct EventLog {
  std::vector<Trace> traces;
  Vocab activity_vocab = Vocab::activities();
  Vocab resource_vocab = Vocab::resources();

  std::size_t total_events() const {
    std::size_t n = 0;
    for (const auto& t : traces) n += t.events.size();
    return n;
  }
};

/// Maps CSV header names to event fields. `resource` and `lifecycle` are
/// optional; everything else must be present in the header.
struct ColumnMap {
  std::string case_id;
  std::string activity;
  std::string timestamp;
  std::optional<std::string> resource;
  std::optional<std::string> lifecycle;
};

struct ParseOptions {
  /// When set, only events whose lifecycle attribute equals this value are
  /// kept (e.g. "complete"). Recorded in the cache manifest.
  std::optional<std::string> lifecycle_keep;
};

EventLog parse_csv(const std::string& path, const ColumnMap& columns,
                   const std::string& timestamp_format = "iso8601", const ParseOptions& opts = {});

/// Parses a XES event log. Standard keys: trace-level concept:name is the
/// case id, event-level concept:name / time:timestamp / org:resource map to
/// activity, timestamp and resource; every other event attribute lands in
/// `extras`.
EventLog parse_xes(const std::string& path, const ParseOptions& opts = {});

/// Builds an in-memory log from pre-assembled traces (vocabularies are
/// rebuilt). Used by tests and synthetic-log generation.
EventLog make_log(std::vector<Trace> traces);

struct SplitStats {
  /// Events removed from val/test because their activity never occurs in
  /// train. Each removed event is one would-be prediction target, scored as
  /// an automatic miss at evaluation time.
  std::size_t dropped_events_val = 0;
  std::size_t dropped_events_test = 0;
  std::size_t dropped_traces = 0;  // traces that became empty after filtering
};

struct SplitResult {
  EventLog train, val, test;
  SplitStats stats;
  /// case_id -> partition name ("train" / "val" / "test"), insertion-ordered.
  std::vector<std::pair<std::string, std::string>> assignment;
};

/// Splits at trace level with a seeded uniform permutation. Partition sizes
/// are floor(ratio * n) for val/test with the remainder going to train.
/// Vocabularies of all three partitions are rebuilt from train only;
/// val/test events with activities unseen in train are dropped (counted in
/// stats) and resources unseen in train are rewritten to the UNK token.
SplitResult split_log(const EventLog& log, std::array<double, 3> ratios, std::uint64_t seed);

}  // namespace ppm

#endif  // PPM_EVENTLOG_HPP
