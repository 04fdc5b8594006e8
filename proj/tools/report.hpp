/*
 * Copyright 2026 The finzeta Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <algorithm>
#include <cctype>
#include <complex>
#include <cstdio>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "finzeta/exact.hpp"

namespace finzeta::cli {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "1.0";

inline Json to_json(std::complex<double> z) { return Json{{"re", z.real()}, {"im", z.imag()}}; }

inline Json to_json(const Rational& q) {
  return Json{{"num", q.get_num().get_str()}, {"den", q.get_den().get_str()}};
}

/// Accepts "a", "bi", "a+bi", "a-bi", "i", "-i" (no spaces).
inline std::optional<std::complex<double>> parse_complex(std::string text) {
  text.erase(std::remove_if(text.begin(), text.end(), [](unsigned char c) { return std::isspace(c); }),
             text.end());
  if (text.empty()) return std::nullopt;
  auto parse_real = [](const std::string& s) -> std::optional<double> {
    if (s.empty()) return std::nullopt;
    std::size_t used = 0;
    try {
      const double v = std::stod(s, &used);
      if (used != s.size()) return std::nullopt;
      return v;
    } catch (const std::exception&) {
      return std::nullopt;
    }
  };
  if (text.back() != 'i') {
    auto re = parse_real(text);
    if (!re) return std::nullopt;
    return std::complex<double>(*re, 0.0);
  }
  text.pop_back();
  // split at the last sign that is not a leading sign or an exponent sign
  std::size_t split = std::string::npos;
  for (std::size_t i = text.size(); i-- > 1;) {
    if ((text[i] == '+' || text[i] == '-') && text[i - 1] != 'e' && text[i - 1] != 'E') {
      split = i;
      break;
    }
  }
  const std::string re_part = split == std::string::npos ? "" : text.substr(0, split);
  std::string im_part = split == std::string::npos ? text : text.substr(split);
  if (im_part.empty() || im_part == "+") im_part = "1";
  if (im_part == "-") im_part = "-1";
  auto im = parse_real(im_part);
  if (!im) return std::nullopt;
  double re = 0;
  if (!re_part.empty()) {
    auto r = parse_real(re_part);
    if (!r) return std::nullopt;
    re = *r;
  }
  return std::complex<double>(re, *im);
}

inline std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return buf;
}

inline std::string format_cell(const Json& v) {
  if (v.is_null()) return "-";
  if (v.is_string()) return v.get<std::string>();
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  if (v.is_number_integer() || v.is_number_unsigned()) return v.dump();
  if (v.is_number_float()) return format_double(v.get<double>());
  if (v.is_object() && v.contains("re") && v.contains("im")) {
    const double re = v["re"].get<double>(), im = v["im"].get<double>();
    if (im == 0) return format_double(re);
    std::string s = re == 0 ? "" : format_double(re);
    if (!s.empty() && im >= 0) s += "+";
    return s + format_double(im) + "i";
  }
  if (v.is_object() && v.contains("num") && v.contains("den")) {
    const auto den = v["den"].get<std::string>();
    return den == "1" ? v["num"].get<std::string>() : v["num"].get<std::string>() + "/" + den;
  }
  if (v.is_array()) {
    std::string s;
    for (const auto& e : v) s += (s.empty() ? "" : " ") + format_cell(e);
    return "(" + s + ")";
  }
  return v.dump();
}

inline std::vector<std::string> column_keys(const Json& rows) {
  std::vector<std::string> keys;
  for (const auto& row : rows)
    for (const auto& [k, _] : row.items())
      if (std::find(keys.begin(), keys.end(), k) == keys.end()) keys.push_back(k);
  return keys;
}

inline void render_rows(std::ostream& os, const Json& rows) {
  const auto keys = column_keys(rows);
  if (keys.empty()) {
    os << "  (none)\n";
    return;
  }
  std::vector<std::vector<std::string>> cells;
  std::vector<std::size_t> width(keys.size());
  for (std::size_t c = 0; c < keys.size(); ++c) width[c] = keys[c].size();
  for (const auto& row : rows) {
    std::vector<std::string> line;
    for (std::size_t c = 0; c < keys.size(); ++c) {
      line.push_back(row.contains(keys[c]) ? format_cell(row[keys[c]]) : "");
      width[c] = std::max(width[c], line.back().size());
    }
    cells.push_back(std::move(line));
  }
  auto emit = [&](const std::vector<std::string>& line) {
    os << ' ';
    for (std::size_t c = 0; c < line.size(); ++c) {
      os << ' ' << line[c];
      if (c + 1 < line.size()) os << std::string(width[c] - line[c].size(), ' ');
    }
    os << '\n';
  };
  emit(keys);
  for (const auto& line : cells) emit(line);
}

inline void render_table(std::ostream& os, const Json& report) {
  os << "finzeta " << report["command"].get<std::string>() << '\n';
  for (const auto& [k, v] : report["parameters"].items()) os << "  " << k << " = " << format_cell(v) << '\n';
  if (report.contains("summary")) {
    os << "summary:\n";
    for (const auto& [k, v] : report["summary"].items()) os << "  " << k << " = " << format_cell(v) << '\n';
  }
  os << "results:\n";
  render_rows(os, report["results"]);
  if (report.contains("checks") && !report["checks"].empty()) {
    os << "checks:\n";
    render_rows(os, report["checks"]);
  }
  if (!report["notes"].empty()) {
    os << "notes:\n";
    for (const auto& n : report["notes"]) os << "  - " << n.get<std::string>() << '\n';
  }
  os << "status: " << report["status"].get<std::string>() << '\n';
  if (report.contains("wall_time_s")) os << "wall_time_s: " << format_cell(report["wall_time_s"]) << '\n';
}

inline std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

/// Results array only, one row per result.
inline void render_csv(std::ostream& os, const Json& report) {
  const auto& rows = report["results"];
  const auto keys = column_keys(rows);
  for (std::size_t c = 0; c < keys.size(); ++c) os << (c ? "," : "") << csv_escape(keys[c]);
  os << '\n';
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < keys.size(); ++c)
      os << (c ? "," : "") << (row.contains(keys[c]) ? csv_escape(format_cell(row[keys[c]])) : "");
    os << '\n';
  }
}

}  // namespace finzeta::cli
