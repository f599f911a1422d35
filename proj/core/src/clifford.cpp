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
#include "gslab/clifford.hpp"

#include <cmath>

#include "gslab/errors.hpp"

namespace gslab {

namespace {

struct Table {
  Gate gate;
  std::string_view name;
  SignedLetter x;
  SignedLetter z;
  SignedLetter y;
  Gate inverse;
};

constexpr SignedLetter pos(PauliLetter p) { return {p, false}; }
constexpr SignedLetter neg(PauliLetter p) { return {p, true}; }

using enum PauliLetter;

constexpr std::array<Table, 11> kTables{{
    {Gate::I, "I", pos(X), pos(Z), pos(Y), Gate::I},
    {Gate::H, "H", pos(Z), pos(X), neg(Y), Gate::H},
    {Gate::S, "S", pos(Y), pos(Z), neg(X), Gate::Sdg},
    {Gate::Sdg, "Sdg", neg(Y), pos(Z), pos(X), Gate::S},
    {Gate::X, "X", pos(X), neg(Z), neg(Y), Gate::X},
    {Gate::Y, "Y", neg(X), neg(Z), pos(Y), Gate::Y},
    {Gate::Z, "Z", neg(X), pos(Z), neg(Y), Gate::Z},
    {Gate::SqrtX, "SqrtX", pos(X), neg(Y), pos(Z), Gate::SqrtXdg},
    {Gate::SqrtXdg, "SqrtXdg", pos(X), pos(Y), neg(Z), Gate::SqrtX},
    {Gate::SqrtY, "SqrtY", neg(Z), pos(X), pos(Y), Gate::SqrtYdg},
    {Gate::SqrtYdg, "SqrtYdg", pos(Z), neg(X), pos(Y), Gate::SqrtY},
}};

const Table& table(Gate g) { return kTables[static_cast<std::size_t>(g)]; }

}  // namespace

SignedLetter conjugate(Gate gate, PauliLetter p) {
  const auto& t = table(gate);
  switch (p) {
    case PauliLetter::I:
      return pos(I);
    case PauliLetter::X:
      return t.x;
    case PauliLetter::Z:
      return t.z;
    case PauliLetter::Y:
      return t.y;
  }
  return pos(I);
}

Gate inverse(Gate gate) { return table(gate).inverse; }

Matrix2 gate_matrix(Gate gate) {
  using C = std::complex<double>;
  const double r = 1.0 / std::sqrt(2.0);
  const C i{0.0, 1.0};
  switch (gate) {
    case Gate::I:
      return {1.0, 0.0, 0.0, 1.0};
    case Gate::H:
      return {r, r, r, -r};
    case Gate::S:
      return {1.0, 0.0, 0.0, i};
    case Gate::Sdg:
      return {1.0, 0.0, 0.0, -i};
    case Gate::X:
      return {0.0, 1.0, 1.0, 0.0};
    case Gate::Y:
      return {0.0, -i, i, 0.0};
    case Gate::Z:
      return {1.0, 0.0, 0.0, -1.0};
    case Gate::SqrtX:
      return {0.5 * (1.0 + i), 0.5 * (1.0 - i), 0.5 * (1.0 - i), 0.5 * (1.0 + i)};
    case Gate::SqrtXdg:
      return {0.5 * (1.0 - i), 0.5 * (1.0 + i), 0.5 * (1.0 + i), 0.5 * (1.0 - i)};
    case Gate::SqrtY:
      return {0.5 * (1.0 + i), -0.5 * (1.0 + i), 0.5 * (1.0 + i), 0.5 * (1.0 + i)};
    case Gate::SqrtYdg:
      return {0.5 * (1.0 - i), 0.5 * (1.0 - i), -0.5 * (1.0 - i), 0.5 * (1.0 - i)};
  }
  throw InvalidParam("unknown gate");
}

std::string_view gate_name(Gate gate) { return table(gate).name; }

std::optional<Gate> parse_gate(std::string_view name) {
  for (const auto& t : kTables) {
    if (t.name == name) return t.gate;
  }
  return std::nullopt;
}

void conjugate_in_place(PauliElement& p, std::size_t qubit, Gate gate) {
  if (qubit >= p.num_qubits()) throw VertexOutOfRange("qubit out of range");
  const auto image = conjugate(gate, p.letter(qubit));
  p.set_letter(qubit, image.letter);
  if (image.negative) p.set_phase(static_cast<std::uint8_t>(p.phase() + 2));
}

}  // namespace gslab
