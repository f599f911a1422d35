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
#include "gslab/gf2.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

#include "gslab/errors.hpp"

namespace gslab {

RowEchelon row_echelon(BitMatrix m) {
  RowEchelon out;
  std::size_t pivot_row = 0;
  for (std::size_t c = 0; c < m.cols() && pivot_row < m.rows(); ++c) {
    std::size_t r = pivot_row;
    while (r < m.rows() && !m.get(r, c)) ++r;
    if (r == m.rows()) continue;
    m.swap_rows(pivot_row, r);
    for (std::size_t k = 0; k < m.rows(); ++k) {
      if (k != pivot_row && m.get(k, c)) m.xor_row(k, pivot_row);
    }
    out.pivot_cols.push_back(c);
    ++pivot_row;
  }
  out.reduced = std::move(m);
  return out;
}

std::size_t rank_xor(const BitMatrix& m) { return row_echelon(m).rank(); }

std::size_t rank_rational(const BitMatrix& m) {
  using boost::multiprecision::cpp_int;
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::vector<std::vector<cpp_int>> a(rows, std::vector<cpp_int>(cols));
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) a[r][c] = m.get(r, c) ? 1 : 0;
  }
  // Bareiss fraction-free elimination: every division below is exact.
  cpp_int prev = 1;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t p = rank;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[rank]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      for (std::size_t k = c + 1; k < cols; ++k) {
        a[r][k] = (a[r][k] * a[rank][c] - a[r][c] * a[rank][k]) / prev;
      }
      a[r][c] = 0;
    }
    prev = a[rank][c];
    ++rank;
  }
  return rank;
}

std::vector<BitVector> kernel_xor(const BitMatrix& m) {
  const auto ech = row_echelon(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : ech.pivot_cols) is_pivot[c] = true;
  std::vector<BitVector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    BitVector v(m.cols());
    v.set(free);
    for (std::size_t i = 0; i < ech.pivot_cols.size(); ++i) {
      if (ech.reduced.get(i, free)) v.set(ech.pivot_cols[i]);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

namespace {

using Mask = std::uint64_t;

struct Cells {
  std::vector<Mask> rows;  // bit c of rows[r] is cell (r, c)
  std::size_t ones() const {
    std::size_t t = 0;
    for (auto r : rows) t += static_cast<std::size_t>(std::popcount(r));
    return t;
  }
  bool empty() const {
    return std::all_of(rows.begin(), rows.end(), [](Mask m) { return m == 0; });
  }
};

Cells to_cells(const BitMatrix& m, const Limits& limits) {
  if (m.cols() > 64 || m.rows() > 64) {
    throw ResourceLimit("biclique search supports at most 64 rows and 64 columns");
  }
  if (m.count_ones() > limits.bp_max_ones) {
    throw ResourceLimit("matrix has " + std::to_string(m.count_ones()) +
                        " ones; biclique search limit is " + std::to_string(limits.bp_max_ones));
  }
  Cells cells;
  cells.rows.resize(m.rows(), 0);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (m.get(r, c)) cells.rows[r] |= Mask{1} << c;
    }
  }
  return cells;
}

struct RectMask {
  Mask rows = 0;
  Mask cols = 0;
};

Rectangle to_rectangle(const RectMask& r, std::size_t nrows, std::size_t ncols) {
  Rectangle out{BitVector(nrows), BitVector(ncols)};
  for (std::size_t i = 0; i < nrows; ++i) {
    if ((r.rows >> i) & 1u) out.rows.set(i);
  }
  for (std::size_t j = 0; j < ncols; ++j) {
    if ((r.cols >> j) & 1u) out.cols.set(j);
  }
  return out;
}

// Greedy fooling set: remaining cells no two of which fit in one rectangle
// of 'allowed'. Its size lower-bounds both cover and partition numbers.
std::size_t fooling_bound(const Cells& remaining, const Cells& allowed) {
  std::vector<std::pair<std::size_t, std::size_t>> chosen;
  for (std::size_t r = 0; r < remaining.rows.size(); ++r) {
    Mask m = remaining.rows[r];
    while (m != 0) {
      const auto c = static_cast<std::size_t>(std::countr_zero(m));
      m &= m - 1;
      bool ok = true;
      for (auto [r2, c2] : chosen) {
        if (r2 == r || c2 == c) {
          ok = false;
          break;
        }
        const bool compatible = ((allowed.rows[r] >> c2) & 1u) && ((allowed.rows[r2] >> c) & 1u);
        if (compatible) {
          ok = false;
          break;
        }
      }
      if (ok) chosen.emplace_back(r, c);
    }
  }
  return chosen.size();
}

std::pair<std::size_t, std::size_t> first_cell(const Cells& c) {
  for (std::size_t r = 0; r < c.rows.size(); ++r) {
    if (c.rows[r] != 0) return {r, static_cast<std::size_t>(std::countr_zero(c.rows[r]))};
  }
  return {c.rows.size(), 0};
}

std::vector<RectMask> maximal_rectangles(const Cells& cells) {
  // Closed column sets are intersections of row supports.
  std::vector<Mask> closed;
  for (auto r : cells.rows) {
    if (r == 0) continue;
    std::vector<Mask> fresh{r};
    for (auto c : closed) {
      auto meet = c & r;
      if (meet != 0) fresh.push_back(meet);
    }
    for (auto f : fresh) {
      if (std::find(closed.begin(), closed.end(), f) == closed.end()) closed.push_back(f);
    }
  }
  std::vector<RectMask> rects;
  for (auto cols : closed) {
    Mask rows = 0;
    for (std::size_t r = 0; r < cells.rows.size(); ++r) {
      if ((cells.rows[r] & cols) == cols) rows |= Mask{1} << r;
    }
    rects.push_back({rows, cols});
  }
  std::sort(rects.begin(), rects.end(), [](const RectMask& a, const RectMask& b) {
    const auto sa = std::popcount(a.rows) * std::popcount(a.cols);
    const auto sb = std::popcount(b.rows) * std::popcount(b.cols);
    if (sa != sb) return sa > sb;
    return std::pair(a.rows, a.cols) < std::pair(b.rows, b.cols);
  });
  return rects;
}

void remove_rect(Cells& cells, const RectMask& rect) {
  for (std::size_t r = 0; r < cells.rows.size(); ++r) {
    if ((rect.rows >> r) & 1u) cells.rows[r] &= ~rect.cols;
  }
}

bool cover_search(const Cells& remaining, const Cells& all, const std::vector<RectMask>& rects,
                  std::size_t budget, std::vector<RectMask>& picked) {
  if (remaining.empty()) return true;
  if (budget == 0 || fooling_bound(remaining, all) > budget) return false;
  const auto [r, c] = first_cell(remaining);
  for (const auto& rect : rects) {
    if (!((rect.rows >> r) & 1u) || !((rect.cols >> c) & 1u)) continue;
    Cells next = remaining;
    remove_rect(next, rect);
    picked.push_back(rect);
    if (cover_search(next, all, rects, budget - 1, picked)) return true;
    picked.pop_back();
  }
  return false;
}

// Enumerates every submask of 'pool' (including 0).
template <typename F>
bool for_each_submask(Mask pool, F&& f) {
  Mask sub = pool;
  while (true) {
    if (f(sub)) return true;
    if (sub == 0) return false;
    sub = (sub - 1) & pool;
  }
}

bool partition_search(const Cells& remaining, std::size_t budget, std::vector<RectMask>& picked) {
  if (remaining.empty()) return true;
  if (budget == 0 || fooling_bound(remaining, remaining) > budget) return false;
  const auto [r, c] = first_cell(remaining);
  const Mask cbit = Mask{1} << c;
  // Every cell before (r, c) is already covered, so the rectangle lives in
  // rows >= r and, within row r, in the remaining columns.
  const Mask col_pool = remaining.rows[r] & ~cbit;
  return for_each_submask(col_pool, [&](Mask extra_cols) {
    const Mask cols = extra_cols | cbit;
    Mask row_pool = 0;
    for (std::size_t k = r + 1; k < remaining.rows.size(); ++k) {
      if ((remaining.rows[k] & cols) == cols) row_pool |= Mask{1} << k;
    }
    return for_each_submask(row_pool, [&](Mask extra_rows) {
      const RectMask rect{extra_rows | (Mask{1} << r), cols};
      Cells next = remaining;
      remove_rect(next, rect);
      picked.push_back(rect);
      if (partition_search(next, budget - 1, picked)) return true;
      picked.pop_back();
      return false;
    });
  });
}

template <typename Search>
std::optional<std::vector<Rectangle>> deepen(const BitMatrix& m, std::size_t cap, const Cells& cells,
                                             Search&& search) {
  if (cells.empty()) return std::vector<Rectangle>{};
  const std::size_t lower = fooling_bound(cells, cells);
  for (std::size_t k = std::max<std::size_t>(lower, 1); k <= cap; ++k) {
    std::vector<RectMask> picked;
    if (search(k, picked)) {
      std::vector<Rectangle> out;
      for (const auto& p : picked) out.push_back(to_rectangle(p, m.rows(), m.cols()));
      return out;
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<std::vector<Rectangle>> minimum_biclique_cover(const BitMatrix& m, std::size_t cap,
                                                             const Limits& limits) {
  if (cap == 0) throw InvalidParam("cap must be at least 1");
  const Cells cells = to_cells(m, limits);
  const auto rects = maximal_rectangles(cells);
  return deepen(m, cap, cells, [&](std::size_t k, std::vector<RectMask>& picked) {
    return cover_search(cells, cells, rects, k, picked);
  });
}

std::optional<std::vector<Rectangle>> minimum_biclique_partition(const BitMatrix& m, std::size_t cap,
                                                                 const Limits& limits) {
  if (cap == 0) throw InvalidParam("cap must be at least 1");
  const Cells cells = to_cells(m, limits);
  return deepen(m, cap, cells, [&](std::size_t k, std::vector<RectMask>& picked) {
    return partition_search(cells, k, picked);
  });
}

std::optional<std::size_t> boolean_rank(const BitMatrix& m, std::size_t cap, const Limits& limits) {
  auto cover = minimum_biclique_cover(m, cap, limits);
  if (!cover) return std::nullopt;
  return cover->size();
}

std::optional<std::size_t> biclique_partition_number(const BitMatrix& m, std::size_t cap,
                                                     const Limits& limits) {
  auto part = minimum_biclique_partition(m, cap, limits);
  if (!part) return std::nullopt;
  return part->size();
}

}  // namespace gslab
