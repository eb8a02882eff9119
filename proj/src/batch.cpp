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

#include "amplekit/batch.hpp"

#include <ostream>
#include <sstream>

#include "amplekit/generate.hpp"
#include "amplekit/graph.hpp"
#include "amplekit/io.hpp"
#include "amplekit/repmap.hpp"
#include "amplekit/shatter.hpp"

namespace amplekit {

BatchChecks parse_batch_checks(const std::string& text) {
  BatchChecks checks;
  std::stringstream in(text);
  std::string name;
  while (std::getline(in, name, ',')) {
    if (name.empty() || name == "stats") continue;
    if (name == "ample") checks.characterizations = true;
    else if (name == "corners") checks.corners = true;
    else if (name == "peel") checks.peel = true;
    else if (name == "repmap") checks.repmap = true;
    else if (name == "all") checks = {true, true, true, true};
    else throw UsageError("unknown check suite '" + name + "'");
  }
  return checks;
}

bool BatchRow::failed() const {
  if (!error.empty()) return false;
  return !sandwich || !sauer || characterizations == "disagree" || repmap == "fail";
}

std::string batch_header() {
  return "file,n,size,vc_dim,shattered,strongly_shattered,sandwich,sauer,ample,maximum,"
         "characterizations,corners,peel,repmap,error";
}

namespace {

const char* flag(bool b) { return b ? "true" : "false"; }

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

}  // namespace

std::string batch_line(const BatchRow& row) {
  std::ostringstream out;
  out << csv_field(row.file) << ',';
  if (!row.error.empty()) {
    out << "-,-,-,-,-,-,-,-,-,-,-,-,-," << csv_field(row.error);
    return out.str();
  }
  out << row.n << ',' << row.size << ',' << row.vc_dim << ',' << row.shattered << ','
      << row.strongly_shattered << ',' << flag(row.sandwich) << ',' << flag(row.sauer) << ','
      << flag(row.ample) << ',' << flag(row.maximum) << ',' << row.characterizations << ','
      << row.corners << ',' << row.peel << ',' << row.repmap << ',';
  return out.str();
}

BatchRow batch_row(const std::string& path, const BatchChecks& checks, std::uint64_t budget) {
  BatchRow row;
  row.file = path;
  std::optional<ConceptClass> loaded;
  try {
    loaded = ingest(path);
  } catch (const ParseError& e) {
    row.error = e.what();
    return row;
  }
  const ConceptClass& c = *loaded;
  auto upper = shattered_complex(c);
  auto lower = strongly_shattered_complex(c);
  row.n = c.n();
  row.size = c.size();
  row.vc_dim = upper.dimension();
  row.shattered = upper.size();
  row.strongly_shattered = lower.size();
  row.sandwich = lower.size() <= c.size() && c.size() <= upper.size();
  row.sauer = c.size() <= phi(row.vc_dim, c.n());
  row.ample = upper.size() == c.size();
  row.maximum = c.size() == phi(row.vc_dim, c.n());
  if (checks.characterizations)
    row.characterizations = ample_characterization_report(c).agree() ? "agree" : "disagree";
  if (checks.corners) row.corners = std::to_string(corners(c).size());
  if (checks.peel) {
    if (!row.ample) {
      row.peel = "not_ample";
    } else {
      auto res = corner_peeling_search(c, budget);
      row.peel = res.status == PeelStatus::found                 ? "found"
                 : res.status == PeelStatus::not_peelable_proven ? "not_peelable"
                                                                 : "budget";
    }
  }
  if (checks.repmap) {
    if (!row.maximum) {
      row.repmap = "not_maximum";
    } else {
      VerifyOptions opts;
      opts.exec = Exec::serial;
      row.repmap = verify_repmap(c, build_maximum_repmap(c), opts).all() ? "ok" : "fail";
    }
  }
  return row;
}

int batch(const std::vector<std::string>& paths, const BatchChecks& checks, std::ostream& out,
          std::uint64_t budget) {
  std::vector<BatchRow> rows(paths.size());
  const auto count = static_cast<std::int64_t>(paths.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t i = 0; i < count; ++i) {
    auto k = static_cast<std::size_t>(i);
    try {
      rows[k] = batch_row(paths[k], checks, budget);
    } catch (const std::exception& e) {
      rows[k].file = paths[k];
      rows[k].error = e.what();
    }
  }
  out << batch_header() << '\n';
  int code = 0;
  for (const auto& row : rows) {
    out << batch_line(row) << '\n';
    if (!row.error.empty()) code = 2;
    else if (row.failed() && code == 0) code = 1;
  }
  return code;
}

}  // namespace amplekit
