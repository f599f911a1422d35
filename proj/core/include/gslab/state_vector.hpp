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

#include <complex>
#include <cstddef>
#include <vector>

#include "gslab/clifford.hpp"
#include "gslab/graph.hpp"
#include "gslab/limits.hpp"

namespace gslab {

class CheckMatrix;

/// Dense amplitudes; bit q of the basis index is the value of qubit q.
using Amplitudes = std::vector<std::complex<double>>;

/// 2^{-n/2} (-1)^{e(x)} with e(x) the number of edges inside the support of x.
Amplitudes graph_state_vector(const Graph& g, const Limits& limits = {});

/// The +1 eigenstate of the check matrix, normalized, global phase fixed so
/// that the first non-zero amplitude is real and positive.
Amplitudes state_vector(const CheckMatrix& c, const Limits& limits = {});

/// Number of basis states with a negative amplitude in |G>.
std::size_t minus_sign_count(const Graph& g, const Limits& limits = {});

void apply_gate(Amplitudes& psi, std::size_t qubit, Gate gate);

/// max_x |a(x) - b(x)|
double max_abs_diff(const Amplitudes& a, const Amplitudes& b);
/// max_x |a(x) - e^{i phi} b(x)| for the phase aligning the largest entries.
double max_abs_diff_up_to_phase(const Amplitudes& a, const Amplitudes& b);

}  // namespace gslab
