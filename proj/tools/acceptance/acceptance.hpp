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

#include <functional>
#include <string>
#include <vector>

#include "gslab/limits.hpp"

namespace gslab::acceptance {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

struct Criterion {
  int id;
  std::string key;
  std::function<CriterionResult()> run;
};

/// The 13 end-to-end checks, in order.
std::vector<Criterion> criteria(const Limits& limits = {});

/// Runs every criterion; exceptions count as failures.
std::vector<CriterionResult> run_all(const Limits& limits = {});

/// One line per criterion: "PASS  3  title  (detail, 0.12 s)".
std::string format_line(const CriterionResult& r);

}  // namespace gslab::acceptance
