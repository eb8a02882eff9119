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

#include "amplekit/batch.hpp"
#include "amplekit/compress.hpp"
#include "amplekit/core.hpp"
#include "amplekit/generate.hpp"
#include "amplekit/graph.hpp"
#include "amplekit/io.hpp"
#include "amplekit/kernels.hpp"
#include "amplekit/matching.hpp"
#include "amplekit/peeling.hpp"
#include "amplekit/repmap.hpp"
#include "amplekit/shatter.hpp"
