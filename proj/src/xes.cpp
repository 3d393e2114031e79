// Copyright (c) 2026 The ppm authors
// SPDX-License-Identifier: Apache-2.0

#include <boost/iostreams/filter/gzip.hpp>
#include <boost/iostreams/filtering_stream.hpp>
#include <boost/property_tree/ptree.hpp>
#include <boost/property_tree/xml_parser.hpp>
#include <fstream>

#include "ppm/eventlog.hpp"

namespace ppm {
namespace detail {
EventLog assemble_log(std::vector<Event> events);
}

namespace {

namespace pt = boost::property_tree;

std::optional<std::string> attr_value(const pt::ptree& element, const std::string& key) {
  for (const auto& [name, child] : element) {
    if (name != "string" && name != "date" && name != "int" && name != "float" && name != "boolean" &&
        name != "id")
      continue;
    if (child.get<std::string>("<xmlattr>.key", "") == key)
      return child.get<std::string>("<xmlattr>.value", "");
  }
  return std::nullopt;
}

Event parse_event(const pt::ptree& node, const std::string& case_id, std::size_t trace_index) {
  Event ev;
  ev.case_id = case_id;
  for (const auto& [name, child] : node) {
    if (name == "<xmlattr>") continue;
    std::string key = child.get<std::string>("<xmlattr>.key", "");
    std::string value = child.get<std::string>("<xmlattr>.value", "");
    if (key == "concept:name") {
      ev.activity = value;
    } else if (key == "time:timestamp") {
      auto ts = parse_timestamp(value, "iso8601");
      if (!ts)
        fail(Errc::unparseable_timestamp, "trace " + std::to_string(trace_index) + ": '" + value + "'");
      ev.timestamp_ms = *ts;
    } else if (key == "org:resource") {
      if (!value.empty()) ev.resource = value;
    } else if (!key.empty()) {
      ev.extras.emplace_back(key, value);
    }
  }
  if (ev.activity.empty())
    fail(Errc::missing_concept_name,
         "event without concept:name in trace " + std::to_string(trace_index));
  return ev;
}

}  // namespace

EventLog parse_xes(const std::string& path, const ParseOptions& opts) {
  std::ifstream file(path, std::ios::binary);
  if (!file) fail(Errc::io_error, "cannot open " + path);
  boost::iostreams::filtering_istream in;
  if (path.size() > 3 && path.compare(path.size() - 3, 3, ".gz") == 0)
    in.push(boost::iostreams::gzip_decompressor());
  in.push(file);

  pt::ptree doc;
  try {
    pt::read_xml(in, doc);
  } catch (const std::exception& e) {
    fail(Errc::malformed_xml, std::string(e.what()));
  }

  auto log_node = doc.get_child_optional("log");
  if (!log_node) fail(Errc::malformed_xml, "no <log> root element in " + path);

  std::vector<Event> events;
  std::size_t trace_index = 0;
  for (const auto& [name, trace_node] : *log_node) {
    if (name != "trace") continue;
    auto case_id = attr_value(trace_node, "concept:name");
    if (!case_id || case_id->empty())
      fail(Errc::missing_concept_name, "trace " + std::to_string(trace_index));
    for (const auto& [child_name, event_node] : trace_node) {
      if (child_name != "event") continue;
      Event ev = parse_event(event_node, *case_id, trace_index);
      if (opts.lifecycle_keep) {
        auto it = std::find_if(ev.extras.begin(), ev.extras.end(),
                               [](const auto& kv) { return kv.first == "lifecycle:transition"; });
        if (it == ev.extras.end() || it->second != *opts.lifecycle_keep) continue;
      }
      events.push_back(std::move(ev));
    }
    ++trace_index;
  }
  if (events.empty()) fail(Errc::empty_log, path + " contains no events");
  return detail::assemble_log(std::move(events));
}

}  // namespace ppm
