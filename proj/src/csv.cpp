// Copyright (c) 2026 The ppm authors
// SPDX-License-Identifier: Apache-2.0
//
// RFC-4180-style CSV reader for event logs: quoted fields, doubled-quote
// escapes and embedded newlines are supported.

#include <fstream>
#include <sstream>

#include "ppm/eventlog.hpp"

namespace ppm {
namespace detail {
EventLog assemble_log(std::vector<Event> events);
}

namespace {

// Reads one CSV record (possibly spanning physical lines). Returns false at EOF.
bool read_record(std::istream& in, std::vector<std::string>& fields) {
  fields.clear();
  std::string field;
  bool in_quotes = false;
  bool any = false;
  int c;
  while ((c = in.get()) != EOF) {
    any = true;
    char ch = static_cast<char>(c);
    if (in_quotes) {
      if (ch == '"') {
        if (in.peek() == '"') {
          field.push_back('"');
          in.get();
        } else {
          in_quotes = false;
        }
      } else {
        field.push_back(ch);
      }
    } else if (ch == '"') {
      in_quotes = true;
    } else if (ch == ',') {
      fields.push_back(std::move(field));
      field.clear();
    } else if (ch == '\n') {
      break;
    } else if (ch != '\r') {
      field.push_back(ch);
    }
  }
  if (!any) return false;
  fields.push_back(std::move(field));
  return true;
}

std::size_t require_column(const std::vector<std::string>& header, const std::string& name) {
  for (std::size_t i = 0; i < header.size(); ++i)
    if (header[i] == name) return i;
  fail(Errc::missing_column, "column '" + name + "' not found in CSV header");
}

}  // namespace

EventLog parse_csv(const std::string& path, const ColumnMap& columns,
                   const std::string& timestamp_format, const ParseOptions& opts) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Errc::io_error, "cannot open " + path);

  std::vector<std::string> header;
  if (!read_record(in, header)) fail(Errc::empty_log, path + " is empty");
  // Strip a UTF-8 BOM if the file starts with one.
  if (!header.empty() && header[0].size() >= 3 && header[0].compare(0, 3, "\xEF\xBB\xBF") == 0)
    header[0].erase(0, 3);

  const std::size_t case_col = require_column(header, columns.case_id);
  const std::size_t act_col = require_column(header, columns.activity);
  const std::size_t time_col = require_column(header, columns.timestamp);
  std::optional<std::size_t> res_col, lc_col;
  if (columns.resource) res_col = require_column(header, *columns.resource);
  if (columns.lifecycle) lc_col = require_column(header, *columns.lifecycle);

  std::vector<Event> events;
  std::vector<std::string> fields;
  std::size_t row = 1;
  while (read_record(in, fields)) {
    ++row;
    if (fields.size() == 1 && fields[0].empty()) continue;  // blank line
    if (fields.size() < header.size()) fields.resize(header.size());
    if (lc_col && opts.lifecycle_keep && fields[*lc_col] != *opts.lifecycle_keep) continue;
    Event ev;
    ev.case_id = fields[case_col];
    ev.activity = fields[act_col];
    if (ev.activity.empty())
      fail(Errc::missing_concept_name, "row " + std::to_string(row) + " has an empty activity");
    auto ts = parse_timestamp(fields[time_col], timestamp_format);
    if (!ts)
      fail(Errc::unparseable_timestamp,
           "row " + std::to_string(row) + ": '" + fields[time_col] + "'");
    ev.timestamp_ms = *ts;
    if (res_col && !fields[*res_col].empty()) ev.resource = fields[*res_col];
    events.push_back(std::move(ev));
  }
  if (events.empty()) fail(Errc::empty_log, path + " contains a header but no events");
  return detail::assemble_log(std::move(events));
}

}  // namespace ppm
