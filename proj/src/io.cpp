// Copyright 2026 The amplekit Authors
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

#include "amplekit/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>

namespace amplekit {

namespace {

std::string_view trimmed(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

int parse_header(std::string_view line, int lineno) {
  if (line.substr(0, 2) != "n=") throw ParseError("expected header 'n=<int>'", lineno);
  auto digits = line.substr(2);
  int n = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
  if (ec != std::errc{} || ptr != digits.data() + digits.size() || digits.empty())
    throw ParseError("malformed header '" + std::string(line) + "'", lineno);
  if (n < 1 || n > kMaxDomain)
    throw ParseError("n must be between 1 and " + std::to_string(kMaxDomain), lineno);
  return n;
}

struct Line {
  int number;
  std::string text;
};

std::vector<Line> content_lines(std::istream& in) {
  std::vector<Line> out;
  std::string raw;
  for (int lineno = 1; std::getline(in, raw); ++lineno) {
    auto s = trimmed(raw);
    if (s.empty() || s.front() == '#') continue;
    out.push_back({lineno, std::string(s)});
  }
  return out;
}

Concept parse_concept(const Line& line, int n) {
  if (static_cast<int>(line.text.size()) != n)
    throw ParseError("expected " + std::to_string(n) + " characters, got " +
                         std::to_string(line.text.size()),
                     line.number);
  try {
    return parse_bitstring(line.text, n);
  } catch (const Error& e) {
    throw ParseError(e.what(), line.number);
  }
}

}  // namespace

ConceptClass read_class(std::istream& in) {
  auto lines = content_lines(in);
  if (lines.empty()) throw ParseError("empty class file", 0);
  const int n = parse_header(lines.front().text, lines.front().number);
  if (lines.size() == 1) throw ParseError("class file has no concepts", lines.front().number);
  std::vector<std::pair<Concept, int>> seen;
  seen.reserve(lines.size() - 1);
  for (std::size_t i = 1; i < lines.size(); ++i) seen.emplace_back(parse_concept(lines[i], n), lines[i].number);
  std::sort(seen.begin(), seen.end());
  std::vector<Concept> concepts;
  concepts.reserve(seen.size());
  for (std::size_t i = 0; i < seen.size(); ++i) {
    if (i > 0 && seen[i].first == seen[i - 1].first) {
      int later = std::max(seen[i].second, seen[i - 1].second);
      throw ParseError("duplicate concept " + to_bitstring(seen[i].first, n), later);
    }
    concepts.push_back(seen[i].first);
  }
  return ConceptClass(n, std::move(concepts));
}

void write_class(std::ostream& out, const ConceptClass& c) {
  out << "n=" << c.n() << '\n';
  for (Concept x : c) out << to_bitstring(x, c.n()) << '\n';
}

ConceptClass ingest(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'", 0);
  return read_class(in);
}

void emit(const std::string& path, const ConceptClass& c) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write '" + path + "'");
  write_class(out, c);
}

Ordering read_ordering(std::istream& in, int n) {
  auto lines = content_lines(in);
  std::size_t start = 0;
  if (!lines.empty() && lines.front().text.substr(0, 2) == "n=") {
    int header = parse_header(lines.front().text, lines.front().number);
    if (n >= 0 && header != n)
      throw ParseError("ordering width differs from the class", lines.front().number);
    n = header;
    start = 1;
  }
  if (n < 0) throw ParseError("ordering without a header", lines.empty() ? 0 : lines.front().number);
  Ordering out;
  for (std::size_t i = start; i < lines.size(); ++i) out.push_back(parse_concept(lines[i], n));
  return out;
}

void write_ordering(std::ostream& out, int n, const Ordering& order) {
  out << "n=" << n << '\n';
  for (Concept x : order) out << to_bitstring(x, n) << '\n';
}

}  // namespace amplekit
