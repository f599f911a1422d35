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

#include "gslab/bit_matrix.hpp"
#include "gslab/canonical.hpp"
#include "gslab/clifford.hpp"
#include "gslab/css.hpp"
#include "gslab/entanglement.hpp"
#include "gslab/errors.hpp"
#include "gslab/families.hpp"
#include "gslab/gf2.hpp"
#include "gslab/graph.hpp"
#include "gslab/io.hpp"
#include "gslab/lc.hpp"
#include "gslab/limits.hpp"
#include "gslab/pauli.hpp"
#include "gslab/reduction.hpp"
#include "gslab/stabilizer.hpp"
#include "gslab/state_vector.hpp"
