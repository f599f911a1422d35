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
#include "gslab/bit_matrix.hpp"

#include <algorithm>
#include <utility>

#include "gslab/errors.hpp"

namespace gslab {

BitVector BitVector::from_string(std::string_view bits) {
  BitVector v(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1') {
      v.set(i);
    } else if (bits[i] != '0') {
      throw ParseError("bit string may only contain '0' and '1'");
    }
  }
  return v;
}

BitVector BitVector::from_indices(std::size_t size, std::span<const std::size_t> indices) {
  BitVector v(size);
  for (auto i : indices) {
    if (i >= size) throw InvalidParam("bit index out of range");
    v.set(i);
  }
  return v;
}

std::size_t BitVector::popcount() const {
  std::size_t total = 0;
  for (auto w : words_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

bool BitVector::any() const {
  return std::any_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w != 0; });
}

std::size_t BitVector::first_set() const {
  for (std::size_t k = 0; k < words_.size(); ++k) {
    if (words_[k] != 0) return k * kWordBits + static_cast<std::size_t>(std::countr_zero(words_[k]));
  }
  return size_;
}

std::vector<std::size_t> BitVector::indices() const {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < words_.size(); ++k) {
    auto w = words_[k];
    while (w != 0) {
      out.push_back(k * kWordBits + static_cast<std::size_t>(std::countr_zero(w)));
      w &= w - 1;
    }
  }
  return out;
}

BitVector& BitVector::operator^=(const BitVector& other) {
  for (std::size_t k = 0; k < words_.size(); ++k) words_[k] ^= other.words_[k];
  return *this;
}

BitVector& BitVector::operator&=(const BitVector& other) {
  for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= other.words_[k];
  return *this;
}

BitVector& BitVector::operator|=(const BitVector& other) {
  for (std::size_t k = 0; k < words_.size(); ++k) words_[k] |= other.words_[k];
  return *this;
}

bool BitVector::dot(const BitVector& other) const {
  std::uint64_t acc = 0;
  for (std::size_t k = 0; k < words_.size(); ++k) acc ^= words_[k] & other.words_[k];
  return std::popcount(acc) & 1;
}

bool BitVector::is_subset_of(const BitVector& other) const {
  for (std::size_t k = 0; k < words_.size(); ++k) {
    if (words_[k] & ~other.words_[k]) return false;
  }
  return true;
}

std::string BitVector::to_string() const {
  std::string s(size_, '0');
  for (std::size_t i = 0; i < size_; ++i) {
    if (get(i)) s[i] = '1';
  }
  return s;
}

BitMatrix BitMatrix::identity(std::size_t n) {
  BitMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i);
  return m;
}

BitMatrix BitMatrix::ones(std::size_t rows, std::size_t cols) {
  BitMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c);
  }
  return m;
}

namespace {

template <typename Range>
BitMatrix parse_rows(const Range& rows) {
  std::size_t cols = 0;
  bool first = true;
  for (const auto& r : rows) {
    if (first) {
      cols = std::string_view(r).size();
      first = false;
    } else if (std::string_view(r).size() != cols) {
      throw ParseError("matrix rows have different lengths");
    }
  }
  BitMatrix m(static_cast<std::size_t>(std::distance(rows.begin(), rows.end())), cols);
  std::size_t i = 0;
  for (const auto& r : rows) m.set_row(i++, BitVector::from_string(r));
  return m;
}

}  // namespace

BitMatrix BitMatrix::from_rows(std::initializer_list<std::string_view> rows) { return parse_rows(rows); }

BitMatrix BitMatrix::from_rows(std::span<const std::string> rows) { return parse_rows(rows); }

BitMatrix BitMatrix::from_rows(std::span<const BitVector> rows, std::size_t cols) {
  BitMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) m.set_row(i, rows[i]);
  return m;
}

BitVector BitMatrix::row(std::size_t r) const {
  BitVector v(cols_);
  auto src = row_words(r);
  std::copy(src.begin(), src.end(), v.words().begin());
  return v;
}

void BitMatrix::set_row(std::size_t r, const BitVector& bits) {
  if (bits.size() != cols_) throw InvalidParam("row length does not match column count");
  auto src = bits.words();
  std::copy(src.begin(), src.end(), row_words(r).begin());
}

void BitMatrix::xor_row(std::size_t dst, std::size_t src) {
  auto* d = data_.data() + dst * stride_;
  const auto* s = data_.data() + src * stride_;
  for (std::size_t k = 0; k < stride_; ++k) d[k] ^= s[k];
}

void BitMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  std::swap_ranges(data_.begin() + static_cast<std::ptrdiff_t>(a * stride_),
                   data_.begin() + static_cast<std::ptrdiff_t>((a + 1) * stride_),
                   data_.begin() + static_cast<std::ptrdiff_t>(b * stride_));
}

std::size_t BitMatrix::row_popcount(std::size_t r) const {
  std::size_t total = 0;
  for (auto w : row_words(r)) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

std::size_t BitMatrix::count_ones() const {
  std::size_t total = 0;
  for (auto w : data_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

bool BitMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](std::uint64_t w) { return w == 0; });
}

bool BitMatrix::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = r + 1; c < cols_; ++c) {
      if (get(r, c) != get(c, r)) return false;
    }
  }
  return true;
}

BitMatrix BitMatrix::transposed() const {
  BitMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      if (get(r, c)) t.set(c, r);
    }
  }
  return t;
}

BitMatrix BitMatrix::submatrix(std::span<const std::size_t> rows, std::span<const std::size_t> cols) const {
  BitMatrix s(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (get(rows[i], cols[j])) s.set(i, j);
    }
  }
  return s;
}

BitMatrix BitMatrix::hconcat(const BitMatrix& other) const {
  if (rows_ != other.rows_) throw InvalidParam("hconcat needs equal row counts");
  BitMatrix out(rows_, cols_ + other.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      if (get(r, c)) out.set(r, c);
    }
    for (std::size_t c = 0; c < other.cols_; ++c) {
      if (other.get(r, c)) out.set(r, cols_ + c);
    }
  }
  return out;
}

BitMatrix BitMatrix::multiply(const BitMatrix& other) const {
  if (cols_ != other.rows_) throw InvalidParam("matrix dimensions do not agree");
  BitMatrix out(rows_, other.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    auto dst = out.row_words(r);
    for (std::size_t k = 0; k < cols_; ++k) {
      if (!get(r, k)) continue;
      auto src = other.row_words(k);
      for (std::size_t w = 0; w < dst.size(); ++w) dst[w] ^= src[w];
    }
  }
  return out;
}

BitVector BitMatrix::multiply(const BitVector& v) const {
  if (v.size() != cols_) throw InvalidParam("vector length does not match column count");
  BitVector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    std::uint64_t acc = 0;
    auto words = row_words(r);
    auto vw = v.words();
    for (std::size_t k = 0; k < stride_; ++k) acc ^= words[k] & vw[k];
    if (std::popcount(acc) & 1) out.set(r);
  }
  return out;
}

std::string BitMatrix::to_string() const {
  std::string s;
  s.reserve(rows_ * (cols_ + 1));
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) s.push_back(get(r, c) ? '1' : '0');
    s.push_back('\n');
  }
  return s;
}

}  // namespace gslab
