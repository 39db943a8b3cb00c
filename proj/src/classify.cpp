// Copyright 2026 The wordrep Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "wordrep/classify.hpp"

#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "json.hpp"
#include "wordrep/error.hpp"
#include "wordrep/graph6.hpp"
#include "wordrep/orientation_search.hpp"

namespace wordrep {

using nlohmann::json;

ClassificationRecord classify(const Graph& g, const ClassifyOptions& options) {
  ClassificationRecord record;
  record.graph6 = encode_graph6(g);
  record.n = g.order();
  record.representable = is_word_representable(g);
  if (options.rep_number) {
    record.rep_number =
        record.representable ? representation_number(g, options.cap).number
                             : RepNumber::infinite();
  }
  if (options.k3) {
    // A semi-transitive orientation is in particular 3-shortcut-free.
    record.k3_orientable =
        record.representable ||
        find_k_shortcut_free_orientation(g, 3).has_value();
  }
  return record;
}

std::string to_json_line(const ClassificationRecord& record) {
  json j = json::object();
  j["g6"] = record.graph6;
  j["n"] = record.n;
  j["wr"] = record.representable;
  if (!record.rep_number) {
    j["repnum"] = nullptr;
  } else if (record.rep_number->is_infinite()) {
    j["repnum"] = "inf";
  } else {
    j["repnum"] = record.rep_number->value();
  }
  j["k3"] = record.k3_orientable ? json(*record.k3_orientable) : json(nullptr);
  return j.dump();
}

ClassificationRecord parse_record(std::string_view line) {
  json j;
  try {
    j = json::parse(line);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed record: ") + e.what(), e.byte);
  }
  try {
    ClassificationRecord record;
    record.graph6 = j.at("g6").get<std::string>();
    record.n = j.at("n").get<int>();
    record.representable = j.at("wr").get<bool>();
    const json& rep = j.at("repnum");
    if (rep.is_string()) {
      if (rep.get<std::string>() != "inf") throw ParseError("bad repnum", 0);
      record.rep_number = RepNumber::infinite();
    } else if (rep.is_number_integer()) {
      record.rep_number = RepNumber::finite(rep.get<int>());
    }
    const json& k3 = j.at("k3");
    if (k3.is_boolean()) record.k3_orientable = k3.get<bool>();
    return record;
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed record: ") + e.what(), 0);
  }
}

void EnumerationSummary::add(const ClassificationRecord& record) {
  n = record.n;
  ++total;
  if (!record.representable) ++nwr;
  if (record.rep_number) {
    if (!histogram) histogram.emplace();
    if (!record.rep_number->is_infinite()) {
      ++(*histogram)[record.rep_number->value()];
    }
  }
  if (record.k3_orientable) {
    if (!non_3st) non_3st = 0;
    if (!*record.k3_orientable) ++*non_3st;
    if (*record.k3_orientable && !record.representable) {
      separated.push_back(record.graph6);
    }
  }
}

namespace {

void add_optional(std::optional<std::int64_t>& into,
                  const std::optional<std::int64_t>& from) {
  if (!from) return;
  into = into.value_or(0) + *from;
}

}  // namespace

void EnumerationSummary::merge(const EnumerationSummary& other) {
  if (total == 0) n = other.n;
  total += other.total;
  nwr += other.nwr;
  if (other.histogram) {
    if (!histogram) histogram.emplace();
    for (const auto& [k, c] : *other.histogram) (*histogram)[k] += c;
  }
  add_optional(non_3st, other.non_3st);
  separated.insert(separated.end(), other.separated.begin(),
                   other.separated.end());
  add_optional(minimal, other.minimal);
  add_optional(non_minimal, other.non_minimal);
  add_optional(minimal_non_3st, other.minimal_non_3st);
  add_optional(non_minimal_non_3st, other.non_minimal_non_3st);
  cpu_seconds += other.cpu_seconds;
}

double EnumerationSummary::percent_nwr() const {
  return total == 0 ? 0.0 : 100.0 * static_cast<double>(nwr) / total;
}

bool EnumerationSummary::same_counts(const EnumerationSummary& other) const {
  return summary_to_json(*this, false) == summary_to_json(other, false);
}

namespace {

template <typename T>
json optional_json(const std::optional<T>& value) {
  return value ? json(*value) : json(nullptr);
}

template <typename T>
std::optional<T> optional_from(const json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return j.at(key).get<T>();
}

std::string histogram_text(const EnumerationSummary& s) {
  if (!s.histogram) return "";
  std::string out;
  for (const auto& [k, c] : *s.histogram) {
    out += std::to_string(k) + ":" + std::to_string(c) + ";";
  }
  return out + "inf:" + std::to_string(s.nwr);
}

std::map<int, std::int64_t> histogram_from_text(const std::string& text) {
  std::map<int, std::int64_t> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ';')) {
    const auto colon = item.find(':');
    if (colon == std::string::npos) throw ParseError("bad histogram entry", 0);
    const std::string key = item.substr(0, colon);
    if (key == "inf") continue;
    out[std::stoi(key)] = std::stoll(item.substr(colon + 1));
  }
  return out;
}

}  // namespace

std::string summary_to_json(const EnumerationSummary& s, bool include_timing) {
  json j = json::object();
  j["n"] = s.n;
  j["total"] = s.total;
  j["nwr"] = s.nwr;
  if (s.histogram) {
    json h = json::object();
    for (const auto& [k, c] : *s.histogram) h[std::to_string(k)] = c;
    h["inf"] = s.nwr;
    j["repnum_histogram"] = h;
  } else {
    j["repnum_histogram"] = nullptr;
  }
  j["non_3st"] = optional_json(s.non_3st);
  j["separated"] = s.separated;
  j["minimal"] = optional_json(s.minimal);
  j["non_minimal"] = optional_json(s.non_minimal);
  j["minimal_non_3st"] = optional_json(s.minimal_non_3st);
  j["non_minimal_non_3st"] = optional_json(s.non_minimal_non_3st);
  if (include_timing) j["cpu_seconds"] = s.cpu_seconds;
  return j.dump();
}

EnumerationSummary summary_from_json(std::string_view text) {
  try {
    const json j = json::parse(text);
    EnumerationSummary s;
    s.n = j.at("n").get<int>();
    s.total = j.at("total").get<std::int64_t>();
    s.nwr = j.at("nwr").get<std::int64_t>();
    if (j.contains("repnum_histogram") && !j.at("repnum_histogram").is_null()) {
      s.histogram.emplace();
      for (const auto& [key, value] : j.at("repnum_histogram").items()) {
        if (key != "inf") (*s.histogram)[std::stoi(key)] = value.get<std::int64_t>();
      }
    }
    s.non_3st = optional_from<std::int64_t>(j, "non_3st");
    if (j.contains("separated")) {
      s.separated = j.at("separated").get<std::vector<std::string>>();
    }
    s.minimal = optional_from<std::int64_t>(j, "minimal");
    s.non_minimal = optional_from<std::int64_t>(j, "non_minimal");
    s.minimal_non_3st = optional_from<std::int64_t>(j, "minimal_non_3st");
    s.non_minimal_non_3st =
        optional_from<std::int64_t>(j, "non_minimal_non_3st");
    s.cpu_seconds = optional_from<double>(j, "cpu_seconds").value_or(0.0);
    return s;
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed summary: ") + e.what(), 0);
  }
}

namespace {

constexpr const char* kCsvHeader =
    "n,total,nwr,percent,elapsed,minimal,non_minimal,non_3st,"
    "minimal_non_3st,non_minimal_non_3st,repnum_histogram";

std::string csv_optional(const std::optional<std::int64_t>& v) {
  return v ? std::to_string(*v) : "";
}

std::optional<std::int64_t> csv_optional_from(const std::string& field) {
  if (field.empty()) return std::nullopt;
  return std::stoll(field);
}

}  // namespace

void write_summary_csv(std::ostream& out,
                       const std::vector<EnumerationSummary>& summaries) {
  out << kCsvHeader << '\n';
  for (const auto& s : summaries) {
    char percent[32], elapsed[32];
    std::snprintf(percent, sizeof percent, "%.2f", s.percent_nwr());
    std::snprintf(elapsed, sizeof elapsed, "%.3f", s.cpu_seconds);
    out << s.n << ',' << s.total << ',' << s.nwr << ',' << percent << ','
        << elapsed << ',' << csv_optional(s.minimal) << ','
        << csv_optional(s.non_minimal) << ',' << csv_optional(s.non_3st) << ','
        << csv_optional(s.minimal_non_3st) << ','
        << csv_optional(s.non_minimal_non_3st) << ',' << histogram_text(s)
        << '\n';
  }
}

std::vector<EnumerationSummary> read_summary_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != kCsvHeader) {
    throw ParseError("summary CSV header mismatch", 0);
  }
  std::vector<EnumerationSummary> out;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::stringstream row(line);
    std::string field;
    while (std::getline(row, field, ',')) fields.push_back(field);
    if (!line.empty() && line.back() == ',') fields.emplace_back();
    if (fields.size() != 11) {
      throw ParseError("summary CSV row needs 11 fields", 0);
    }
    EnumerationSummary s;
    try {
      s.n = std::stoi(fields[0]);
      s.total = std::stoll(fields[1]);
      s.nwr = std::stoll(fields[2]);
      s.cpu_seconds = std::stod(fields[4]);
      s.minimal = csv_optional_from(fields[5]);
      s.non_minimal = csv_optional_from(fields[6]);
      s.non_3st = csv_optional_from(fields[7]);
      s.minimal_non_3st = csv_optional_from(fields[8]);
      s.non_minimal_non_3st = csv_optional_from(fields[9]);
      if (!fields[10].empty()) s.histogram = histogram_from_text(fields[10]);
    } catch (const std::logic_error&) {
      throw ParseError("summary CSV row has a non-numeric field", 0);
    }
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace wordrep
