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

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

#include "gslab/bit_matrix.hpp"

namespace gslab {

enum class PauliLetter : std::uint8_t { I = 0, X = 1, Z = 2, Y = 3 };

char letter_char(PauliLetter p);

/// An n-qubit Pauli operator i^k * P_0 (x) ... (x) P_{n-1}.
///
/// Qubit q carries letter I, X, Z or Y for (x_q, z_q) = (0,0), (1,0), (0,1),
/// (1,1). Y is the Hermitian Pauli matrix, so Y = iXZ; the phase exponent k
/// is kept mod 4 and is 0 or 2 for Hermitian elements.
class PauliElement {
 public:
  PauliElement() = default;
  explicit PauliElement(std::size_t n) : x_(n), z_(n) {}
  PauliElement(BitVector x, BitVector z, std::uint8_t phase = 0);

  /// Parses an optional sign prefix ("+", "-", "+i", "-i", "i") followed by
  /// letters from {I, X, Y, Z}.
  static PauliElement parse(std::string_view text);

  std::size_t num_qubits() const { return x_.size(); }
  const BitVector& xbits() const { return x_; }
  const BitVector& zbits() const { return z_; }
  /// Exponent k of the leading i^k.
  std::uint8_t phase() const { return phase_; }
  void set_phase(std::uint8_t k) { phase_ = k & 3u; }
  bool is_negative() const { return phase_ == 2; }
  bool is_hermitian() const { return (phase_ & 1u) == 0; }

  PauliLetter letter(std::size_t q) const {
    return static_cast<PauliLetter>(static_cast<unsigned>(x_.get(q)) | (static_cast<unsigned>(z_.get(q)) << 1));
  }
  void set_letter(std::size_t q, PauliLetter p);

  std::size_t weight() const;
  BitVector support() const { return x_ | z_; }
  bool is_identity() const { return x_.none() && z_.none(); }

  bool commutes_with(const PauliElement& other) const;

  /// this <- this * other, with the phase tracked exactly.
  PauliElement& operator*=(const PauliElement& other);
  friend PauliElement operator*(PauliElement a, const PauliElement& b) { return a *= b; }

  /// Concatenated [x | z] bits, length 2n.
  BitVector symplectic() const;

  /// Sign prefix plus letters, e.g. "+XZZ" or "-YY"; non-Hermitian phases
  /// print as "+i"/"-i".
  std::string to_string() const;

  friend bool operator==(const PauliElement&, const PauliElement&) = default;
  friend auto operator<=>(const PauliElement& a, const PauliElement& b) {
    if (auto c = a.x_ <=> b.x_; c != 0) return c;
    if (auto c = a.z_ <=> b.z_; c != 0) return c;
    return a.phase_ <=> b.phase_;
  }

 private:
  BitVector x_;
  BitVector z_;
  std::uint8_t phase_ = 0;
};

struct PauliElementHash {
  std::size_t operator()(const PauliElement& p) const noexcept;
};

/// Exponent (mod 4) of i picked up by multiplying a * b on top of the two
/// input phases.
std::uint8_t product_phase(const PauliElement& a, const PauliElement& b);

}  // namespace gslab
