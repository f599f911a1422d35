// Copyright 2026 The gslab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#pragma once

#include <iosfwd>

#include "gslab/limits.hpp"

namespace gslab::cli {

enum ExitCode { kOk = 0, kFailed = 1, kUsage = 2, kResource = 3 };

/// Defaults overridden by GSLAB_ENUM_LIMIT, GSLAB_STATEVEC_LIMIT, GSLAB_ORBIT_LIMIT, GSLAB_PP_LIMIT,
/// GSLAB_BP_CAP. Non-positive or malformed values are rejected with ParseError.
Limits limits_from_env();

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace gslab::cli
