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

#include <iosfwd>
#include <string>
#include <vector>

#include "amplekit/core.hpp"
#include "amplekit/peeling.hpp"

namespace amplekit {

// Class files: a header `n=<int>` (1 <= n <= 24), then one n-character 0/1
// string per concept, leftmost character = coordinate 1. Lines starting
// with '#' and blank lines are ignored. Errors carry 1-based line numbers;
// a repeated concept is an error.
ConceptClass read_class(std::istream& in);
// Canonical form: header then concepts in ascending mask order.
void write_class(std::ostream& out, const ConceptClass& c);

ConceptClass ingest(const std::string& path);
void emit(const std::string& path, const ConceptClass& c);

// Same layout as a class file, but the order of the lines is kept. The
// header is optional when n is given.
Ordering read_ordering(std::istream& in, int n = -1);
void write_ordering(std::ostream& out, int n, const Ordering& order);

}  // namespace amplekit
