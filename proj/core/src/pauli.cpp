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
#include "gslab/pauli.hpp"

#include <bit>
#include <functional>

#include "gslab/errors.hpp"

namespace gslab {

char letter_char(PauliLetter p) {
  switch (p) {
    case PauliLetter::I:
      return 'I';
    case PauliLetter::X:
      return 'X';
    case PauliLetter::Z:
      return 'Z';
    case PauliLetter::Y:
      return 'Y';
  }
  return '?';
}

PauliElement::PauliElement(BitVector x, BitVector z, std::uint8_t phase)
    : x_(std::move(x)), z_(std::move(z)), phase_(phase & 3u) {
  if (x_.size() != z_.size()) throw InvalidParam("x and z parts must have equal length");
}

PauliElement PauliElement::parse(std::string_view text) {
  std::uint8_t phase = 0;
  if (!text.empty() && (text.front() == '+' || text.front() == '-')) {
    if (text.front() == '-') phase = 2;
    text.remove_prefix(1);
  }
  if (!text.empty() && text.front() == 'i') {
    phase = (phase + 1) & 3u;
    text.remove_prefix(1);
  }
  PauliElement p(text.size());
  p.phase_ = phase;
  for (std::size_t q = 0; q < text.size(); ++q) {
    switch (text[q]) {
      case 'I':
      case '_':
        break;
      case 'X':
        p.x_.set(q);
        break;
      case 'Z':
        p.z_.set(q);
        break;
      case 'Y':
        p.x_.set(q);
        p.z_.set(q);
        break;
      default:
        throw ParseError(std::string("invalid Pauli letter '") + text[q] + "'");
    }
  }
  return p;
}

void PauliElement::set_letter(std::size_t q, PauliLetter p) {
  const auto bits = static_cast<unsigned>(p);
  x_.set(q, bits & 1u);
  z_.set(q, bits & 2u);
}

std::size_t PauliElement::weight() const { return support().popcount(); }

bool PauliElement::commutes_with(const PauliElement& other) const {
  return x_.dot(other.z_) == z_.dot(other.x_);
}

std::uint8_t product_phase(const PauliElement& a, const PauliElement& b) {
  const auto ax = a.xbits().words();
  const auto az = a.zbits().words();
  const auto bx = b.xbits().words();
  const auto bz = b.zbits().words();
  int total = 0;
  for (std::size_t k = 0; k < ax.size(); ++k) {
    const std::uint64_t a_x = ax[k] & ~az[k];
    const std::uint64_t a_y = ax[k] & az[k];
    const std::uint64_t a_z = ~ax[k] & az[k];
    const std::uint64_t b_x = bx[k] & ~bz[k];
    const std::uint64_t b_y = bx[k] & bz[k];
    const std::uint64_t b_z = ~bx[k] & bz[k];
    // XY = iZ, YZ = iX, ZX = iY; the reversed orders give -i.
    const std::uint64_t plus = (a_x & b_y) | (a_y & b_z) | (a_z & b_x);
    const std::uint64_t minus = (a_y & b_x) | (a_z & b_y) | (a_x & b_z);
    total += std::popcount(plus) - std::popcount(minus);
  }
  return static_cast<std::uint8_t>(((total % 4) + 4) % 4);
}

PauliElement& PauliElement::operator*=(const PauliElement& other) {
  if (other.num_qubits() != num_qubits()) throw InvalidParam("Pauli elements act on different qubit counts");
  phase_ = static_cast<std::uint8_t>((phase_ + other.phase_ + product_phase(*this, other)) & 3u);
  x_ ^= other.x_;
  z_ ^= other.z_;
  return *this;
}

BitVector PauliElement::symplectic() const {
  const std::size_t n = num_qubits();
  BitVector v(2 * n);
  for (std::size_t q = 0; q < n; ++q) {
    if (x_.get(q)) v.set(q);
    if (z_.get(q)) v.set(n + q);
  }
  return v;
}

std::string PauliElement::to_string() const {
  static constexpr const char* kPrefix[4] = {"+", "+i", "-", "-i"};
  std::string s = kPrefix[phase_];
  for (std::size_t q = 0; q < num_qubits(); ++q) s.push_back(letter_char(letter(q)));
  return s;
}

std::size_t PauliElementHash::operator()(const PauliElement& p) const noexcept {
  std::size_t h = p.phase();
  for (auto w : p.xbits().words()) h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  for (auto w : p.zbits().words()) h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

}  // namespace gslab
