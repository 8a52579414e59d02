#include "padic/oracles.hpp"

#include <algorithm>
#include <stdexcept>

namespace padic {

RationalMatrix RationalMatrix::identity(std::size_t order) {
  RationalMatrix m(order);
  for (std::size_t i = 0; i < order; ++i) m.at(i, i) = 1;
  return m;
}

bool RationalMatrix::is_skew_symmetric() const {
  for (std::size_t i = 0; i < order_; ++i) {
    if (at(i, i) != 0) return false;
    for (std::size_t j = i + 1; j < order_; ++j)
      if (at(i, j) != -at(j, i)) return false;
  }
  return true;
}

RationalMatrix RationalMatrix::transposed() const {
  RationalMatrix t(order_);
  for (std::size_t i = 0; i < order_; ++i)
    for (std::size_t j = 0; j < order_; ++j) t.at(j, i) = at(i, j);
  return t;
}

Rational RationalMatrix::determinant() const {
  RationalMatrix work(*this);
  Rational det = 1;
  for (std::size_t col = 0; col < order_; ++col) {
    std::size_t pivot = col;
    while (pivot < order_ && work.at(pivot, col) == 0) ++pivot;
    if (pivot == order_) return 0;
    if (pivot != col) {
      for (std::size_t j = 0; j < order_; ++j)
        std::swap(work.at(pivot, j), work.at(col, j));
      det = -det;
    }
    det *= work.at(col, col);
    const Rational inv = 1 / work.at(col, col);
    for (std::size_t r = col + 1; r < order_; ++r) {
      if (work.at(r, col) == 0) continue;
      const Rational factor = work.at(r, col) * inv;
      for (std::size_t j = col; j < order_; ++j)
        work.at(r, j) -= factor * work.at(col, j);
    }
  }
  return det;
}

RationalMatrix operator*(const RationalMatrix& x, const RationalMatrix& y) {
  if (x.order_ != y.order_)
    throw std::invalid_argument("RationalMatrix: order mismatch");
  RationalMatrix out(x.order_);
  for (std::size_t i = 0; i < x.order_; ++i)
    for (std::size_t k = 0; k < x.order_; ++k) {
      const Rational& xik = x.at(i, k);
      if (xik == 0) continue;
      for (std::size_t j = 0; j < x.order_; ++j)
        out.at(i, j) += xik * y.at(k, j);
    }
  return out;
}

bool operator==(const RationalMatrix& x, const RationalMatrix& y) {
  return x.order_ == y.order_ && x.entries_ == y.entries_;
}

Nat plane_partition_count(const BoxDims& d, const EnumerationGuard& guard) {
  const bool cells_ok = d.a == 0 || d.b <= guard.max_cells / d.a;
  if (!cells_ok || d.c > guard.max_height)
    throw std::domain_error(
        "plane_partition_count: box exceeds the enumeration guard; use formula path");
  if (d.a == 0 || d.b == 0 || d.c == 0) return 1;  // only the zero array

  const std::size_t rows = d.a, cols = d.b;
  const std::uint64_t height = d.c;
  std::vector<std::uint64_t> cell(rows * cols, 0);
  std::uint64_t count = 0;

  // Row-major DFS; each cell is bounded by its upper and left neighbors.
  std::size_t pos = 0;
  std::vector<std::uint64_t> value(rows * cols);
  const auto bound = [&](std::size_t p) {
    const std::size_t r = p / cols, c = p % cols;
    std::uint64_t b = height;
    if (r > 0) b = std::min(b, cell[p - cols]);
    if (c > 0) b = std::min(b, cell[p - 1]);
    return b;
  };
  value[0] = bound(0) + 1;
  while (true) {
    if (value[pos] == 0) {  // exhausted this cell, backtrack
      if (pos == 0) break;
      --pos;
      continue;
    }
    cell[pos] = --value[pos];
    if (pos + 1 == rows * cols) {
      ++count;
      continue;
    }
    ++pos;
    value[pos] = bound(pos) + 1;
  }
  return nat_from_u64(count);
}

SkewReduction skew_congruence_reduce(const RationalMatrix& a) {
  if (!a.is_skew_symmetric())
    throw std::domain_error("skew_congruence_reduce: input is not skew-symmetric");
  const std::size_t n = a.order();
  RationalMatrix m(a);
  RationalMatrix t = RationalMatrix::identity(n);

  // Congruence helpers: apply the row operation to m and t, then mirror it
  // on the columns of m.
  const auto swap_rc = [&](std::size_t x, std::size_t y) {
    if (x == y) return;
    for (std::size_t j = 0; j < n; ++j) {
      std::swap(m.at(x, j), m.at(y, j));
      std::swap(t.at(x, j), t.at(y, j));
    }
    for (std::size_t i = 0; i < n; ++i) std::swap(m.at(i, x), m.at(i, y));
  };
  const auto add_row = [&](std::size_t dst, std::size_t src, const Rational& f) {
    if (f == 0) return;
    for (std::size_t j = 0; j < n; ++j) {
      m.at(dst, j) += f * m.at(src, j);
      t.at(dst, j) += f * t.at(src, j);
    }
    for (std::size_t i = 0; i < n; ++i) m.at(i, dst) += f * m.at(i, src);
  };
  const auto scale_row = [&](std::size_t x, const Rational& f) {
    for (std::size_t j = 0; j < n; ++j) {
      m.at(x, j) *= f;
      t.at(x, j) *= f;
    }
    for (std::size_t i = 0; i < n; ++i) m.at(i, x) *= f;
  };

  std::size_t block = 0;
  while (block + 1 < n) {
    // First nonzero entry of the trailing submatrix, row-major.
    std::size_t pi = n, pj = n;
    for (std::size_t i = block; i < n && pi == n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (m.at(i, j) != 0) {
          pi = i;
          pj = j;
          break;
        }
    if (pi == n) break;
    swap_rc(block, pi);  // pj > pi >= block, so the pivot column is untouched
    swap_rc(block + 1, pj);

    const Rational b = m.at(block, block + 1);
    for (std::size_t r = block + 2; r < n; ++r) {
      //  m(r, block)   changes by beta * m(block+1, block) = -beta b
      //  m(r, block+1) changes by alpha * m(block, block+1) = alpha b
      const Rational beta = m.at(r, block) / b;
      const Rational alpha = -m.at(r, block + 1) / b;
      add_row(r, block, alpha);
      add_row(r, block + 1, beta);
    }
    scale_row(block + 1, 1 / b);  // b*S2 block -> S2, exact over Q
    block += 2;
  }

  return SkewReduction{std::move(t), block};
}

RationalMatrix skew_canonical_form(std::size_t order, std::uint64_t rank) {
  if (rank % 2 != 0 || rank > order)
    throw std::invalid_argument("skew_canonical_form: rank must be even and <= order");
  RationalMatrix m(order);
  for (std::uint64_t p = 0; p < rank / 2; ++p) {
    m.at(2 * p, 2 * p + 1) = 1;
    m.at(2 * p + 1, 2 * p) = -1;
  }
  return m;
}

}  // namespace padic
