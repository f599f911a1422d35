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

#include <array>
#include <complex>
#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "gslab/pauli.hpp"

namespace gslab {

/// Named single-qubit Clifford gates. SqrtX is proportional to
/// exp(-i pi/4 X); Sdg is proportional to exp(+i pi/4 Z).
enum class Gate { I, H, S, Sdg, X, Y, Z, SqrtX, SqrtXdg, SqrtY, SqrtYdg };

inline constexpr std::array<Gate, 11> kAllGates{Gate::I,  Gate::H,     Gate::S,       Gate::Sdg,
                                                Gate::X,  Gate::Y,     Gate::Z,       Gate::SqrtX,
                                                Gate::SqrtXdg, Gate::SqrtY, Gate::SqrtYdg};

struct SignedLetter {
  PauliLetter letter = PauliLetter::I;
  bool negative = false;
  friend bool operator==(const SignedLetter&, const SignedLetter&) = default;
};

/// U P U^dagger for a single-qubit Pauli letter P.
SignedLetter conjugate(Gate gate, PauliLetter p);

Gate inverse(Gate gate);

/// Row-major 2x2 unitary.
using Matrix2 = std::array<std::complex<double>, 4>;
Matrix2 gate_matrix(Gate gate);

std::string_view gate_name(Gate gate);
std::optional<Gate> parse_gate(std::string_view name);

/// A single-qubit gate placed on a qubit.
struct LocalGate {
  std::size_t qubit = 0;
  Gate gate = Gate::I;
  friend bool operator==(const LocalGate&, const LocalGate&) = default;
};

/// Conjugates one qubit of a Pauli element in place.
void conjugate_in_place(PauliElement& p, std::size_t qubit, Gate gate);

}  // namespace gslab
