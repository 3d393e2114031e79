// Copyright (c) 2026 The ppm authors
// SPDX-License-Identifier: Apache-2.0

#include "ppm/eventlog.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace ppm {

Vocab Vocab::from_entries(std::vector<std::string> entries) {
  Vocab v;
  for (auto& e : entries) v.add(e);
  return v;
}

std::int64_t Vocab::add(const std::string& entry) {
  auto it = index_.find(entry);
  if (it != index_.end()) return it->second;
  std::int64_t id = static_cast<std::int64_t>(entries_.size());
  entries_.push_back(entry);
  index_.emplace(entry, id);
  return id;
}

std::int64_t Vocab::lookup(const std::string& entry) const {
  auto it = index_.find(entry);
  return it == index_.end() ? -1 : it->second;
}

const std::string& Vocab::at(std::int64_t index) const {
  if (index < 0 || index >= size()) fail(Errc::index_out_of_range, "vocab index " + std::to_string(index));
  return entries_[static_cast<std::size_t>(index)];
}

namespace detail {

// Groups rows into traces: per-case stable sort by timestamp, traces ordered
// by first appearance of their case in the source.
EventLog assemble_log(std::vector<Event> events) {
  if (events.empty()) fail(Errc::empty_log, "no events after parsing");
  EventLog log;
  std::unordered_map<std::string, std::size_t> trace_of;
  for (auto& ev : events) {
    auto [it, inserted] = trace_of.emplace(ev.case_id, log.traces.size());
    if (inserted) log.traces.push_back(Trace{ev.case_id, {}});
    log.traces[it->second].events.push_back(std::move(ev));
  }
  for (auto& trace : log.traces) {
    std::stable_sort(trace.events.begin(), trace.events.end(),
                     [](const Event& a, const Event& b) { return a.timestamp_ms < b.timestamp_ms; });
  }
  for (const auto& trace : log.traces) {
    for (const auto& ev : trace.events) {
      log.activity_vocab.add(ev.activity);
      if (ev.resource) log.resource_vocab.add(*ev.resource);
    }
  }
  return log;
}

}  // namespace detail

EventLog make_log(std::vector<Trace> traces) {
  std::vector<Event> events;
  for (auto& t : traces)
    for (auto& e : t.events) events.push_back(std::move(e));
  return detail::assemble_log(std::move(events));
}

namespace {

EventLog rebuild_partition(std::vector<Trace> traces, const Vocab& acts, const Vocab& res,
                           bool filter, std::size_t* dropped_events, std::size_t* dropped_traces) {
  EventLog out;
  out.activity_vocab = acts;
  out.resource_vocab = res;
  for (auto& trace : traces) {
    if (filter) {
      std::vector<Event> kept;
      kept.reserve(trace.events.size());
      for (auto& ev : trace.events) {
        if (!acts.contains(ev.activity)) {
          ++*dropped_events;
          continue;
        }
        if (ev.resource && !res.contains(*ev.resource)) ev.resource = kUnkToken;
        kept.push_back(std::move(ev));
      }
      trace.events = std::move(kept);
      if (trace.events.empty()) {
        ++*dropped_traces;
        continue;
      }
    }
    out.traces.push_back(std::move(trace));
  }
  return out;
}

}  // namespace

SplitResult split_log(const EventLog& log, std::array<double, 3> ratios, std::uint64_t seed) {
  if (log.traces.empty()) fail(Errc::empty_log, "cannot split an empty log");
  double total = ratios[0] + ratios[1] + ratios[2];
  if (std::abs(total - 1.0) > 1e-9) fail(Errc::invalid_config, "split ratios must sum to 1");

  const std::size_t n = log.traces.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  Rng rng(mix_seed(seed, "split"));
  rng.shuffle(order);

  const std::size_t n_val = static_cast<std::size_t>(ratios[1] * static_cast<double>(n));
  const std::size_t n_test = static_cast<std::size_t>(ratios[2] * static_cast<double>(n));
  const std::size_t n_train = n - n_val - n_test;

  std::vector<Trace> train, val, test;
  SplitResult result;
  for (std::size_t i = 0; i < n; ++i) {
    const Trace& t = log.traces[order[i]];
    const char* part = i < n_train ? "train" : (i < n_train + n_val ? "val" : "test");
    result.assignment.emplace_back(t.case_id, part);
    if (i < n_train)
      train.push_back(t);
    else if (i < n_train + n_val)
      val.push_back(t);
    else
      test.push_back(t);
  }

  // Vocabularies come from the train partition only, so the all-activity node
  // set of every graph is defined by what training has seen.
  Vocab acts = Vocab::activities();
  Vocab res = Vocab::resources();
  for (const auto& t : train) {
    for (const auto& ev : t.events) {
      acts.add(ev.activity);
      if (ev.resource) res.add(*ev.resource);
    }
  }

  std::size_t unused = 0;
  result.train = rebuild_partition(std::move(train), acts, res, false, &unused, &unused);
  result.val = rebuild_partition(std::move(val), acts, res, true, &result.stats.dropped_events_val,
                                 &result.stats.dropped_traces);
  result.test = rebuild_partition(std::move(test), acts, res, true, &result.stats.dropped_events_test,
                                  &result.stats.dropped_traces);
  return result;
}

}  // namespace ppm
