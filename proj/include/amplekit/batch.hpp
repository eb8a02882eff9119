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

#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "amplekit/peeling.hpp"

namespace amplekit {

// Named check suites; "stats" always runs.
struct BatchChecks {
  bool characterizations = false;  // "ample"
  bool corners = false;            // "corners"
  bool peel = false;               // "peel"
  bool repmap = false;             // "repmap"
};

// Comma-separated suite names; throws UsageError on an unknown name.
BatchChecks parse_batch_checks(const std::string& text);

struct BatchRow {
  std::string file;
  std::string error;  // parse error; the other fields are then unset
  int n = 0;
  std::size_t size = 0;
  int vc_dim = 0;
  std::size_t shattered = 0;
  std::size_t strongly_shattered = 0;
  bool sandwich = false;
  bool sauer = false;
  bool ample = false;
  bool maximum = false;
  std::string characterizations = "-";  // agree | disagree
  std::string corners = "-";            // count
  std::string peel = "-";               // found | not_peelable | budget | not_ample
  std::string repmap = "-";             // ok | fail | not_maximum

  bool failed() const;
};

// Column order of the CSV, fixed:
// file,n,size,vc_dim,shattered,strongly_shattered,sandwich,sauer,ample,
// maximum,characterizations,corners,peel,repmap,error
std::string batch_header();
std::string batch_line(const BatchRow& row);

BatchRow batch_row(const std::string& path, const BatchChecks& checks,
                   std::uint64_t budget = kDefaultPeelBudget);

// Runs every file (in parallel across files), writes the CSV in input order
// and returns the exit code: 2 on a parse error, 1 on a failed check, else 0.
int batch(const std::vector<std::string>& paths, const BatchChecks& checks, std::ostream& out,
          std::uint64_t budget = kDefaultPeelBudget);

}  // namespace amplekit
