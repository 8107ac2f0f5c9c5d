#pragma once

#include <oinst/error.hpp>
#include <oinst/matrix.hpp>
#include <oinst/rational.hpp>

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <utility>
#include <vector>

namespace oinst {

namespace detail {

/// Integer matrix obtained by scaling each row by the lcm of its denominators.
/// `scale` accumulates the product of the row factors.
struct IntegerImage {
  IntMatrix m;
  Int scale = 1;
};

inline IntegerImage clear_denominators(const RatMatrix& a) {
  IntegerImage out{IntMatrix(a.rows(), a.cols()), 1};
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Int l = 1;
    for (const Rat& v : a.row(i)) {
      Int d = v.den();
      if (d != 1) l = lcm(l, d);
    }
    for (std::size_t j = 0; j < a.cols(); ++j) out.m(i, j) = a(i, j).num() * (l / a(i, j).den());
    out.scale *= l;
  }
  return out;
}

struct BareissResult {
  std::vector<std::size_t> pivot_cols;
  int sign = 1;   // parity of row swaps
  Int last = 1;   // last pivot; equals the determinant of the leading pivot minor
};

/// Fraction-free row echelon form in place. Pivots are the first nonzero
/// entry at or below the current row, scanning columns left to right; every
/// division is exact.
inline BareissResult bareiss(IntMatrix& m) {
  BareissResult res;
  Int prev = 1;
  std::size_t r = 0;
  const std::size_t rows = m.rows(), cols = m.cols();
  for (std::size_t col = 0; col < cols && r < rows; ++col) {
    std::size_t p = r;
    while (p < rows && sgn(m(p, col)) == 0) ++p;
    if (p == rows) continue;
    if (p != r) {
      for (std::size_t j = col; j < cols; ++j) swap(m(p, j), m(r, j));
      res.sign = -res.sign;
    }
    const Int piv = m(r, col);
    for (std::size_t i = r + 1; i < rows; ++i) {
      const Int lead = m(i, col);
      for (std::size_t j = col + 1; j < cols; ++j) {
        Int v = piv * m(i, j) - lead * m(r, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        m(i, j) = std::move(v);
      }
      m(i, col) = 0;
    }
    prev = piv;
    res.pivot_cols.push_back(col);
    ++r;
  }
  res.last = prev;
  return res;
}

}  // namespace detail

/// Exact rank by fraction-free elimination.
inline std::size_t rank(const RatMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  auto img = detail::clear_denominators(m);
  return detail::bareiss(img.m).pivot_cols.size();
}

inline Rat det(const RatMatrix& m) {
  if (!m.is_square()) throw Error(ErrorKind::NonSquare, "det of " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  if (m.rows() == 0) return Rat(1);
  auto img = detail::clear_denominators(m);
  auto res = detail::bareiss(img.m);
  if (res.pivot_cols.size() < m.rows()) return Rat(0);
  return Rat(res.sign * res.last, img.scale);
}

/// Reduced row echelon form over the rationals; returns pivot columns.
inline std::vector<std::size_t> rref(RatMatrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t col = 0; col < m.cols() && r < m.rows(); ++col) {
    std::size_t p = r;
    while (p < m.rows() && m(p, col).is_zero()) ++p;
    if (p == m.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    const Rat inv = Rat(1) / m(r, col);
    for (std::size_t j = col; j < m.cols(); ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, col).is_zero()) continue;
      const Rat f = m(i, col);
      for (std::size_t j = col; j < m.cols(); ++j)
        if (!m(r, j).is_zero()) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(col);
    ++r;
  }
  return pivots;
}

/// Basis of {v : m v = 0}, one vector per free column of the RREF.
inline std::vector<RatVector> kernel_basis(const RatMatrix& m) {
  RatMatrix e = m;
  const auto pivots = rref(e);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<RatVector> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    RatVector v(m.cols());
    v[f] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -e(r, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

inline RatMatrix inverse(const RatMatrix& m) {
  if (!m.is_square()) throw Error(ErrorKind::NonSquare, "inverse");
  const std::size_t n = m.rows();
  RatMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  const auto pivots = rref(aug);
  if (pivots.size() < n || (n > 0 && pivots.back() >= n)) throw Error(ErrorKind::Singular, "matrix is not invertible");
  RatMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

/// Pfaffian of an even-order skew matrix. Each step pairs row/column k with
/// its first nonzero partner and clears the rest of the two rows with
/// shear congruences, which leave the Pfaffian unchanged.
inline Rat pfaffian(const RatMatrix& m) {
  if (!m.is_skew()) throw Error(ErrorKind::NotSkew, "pfaffian needs a skew-symmetric matrix");
  const std::size_t n = m.rows();
  if (n % 2 != 0) throw Error(ErrorKind::OddOrder, "pfaffian of odd order " + std::to_string(n));
  RatMatrix a = m;
  Rat pf = 1;

  // col_i -= f*col_s and row_i -= f*row_s, restricted to indices >= from.
  auto shear = [&](std::size_t i, std::size_t s, const Rat& f, std::size_t from) {
    for (std::size_t t = from; t < n; ++t)
      if (!a(t, s).is_zero()) a(t, i) -= f * a(t, s);
    for (std::size_t t = from; t < n; ++t)
      if (!a(s, t).is_zero()) a(i, t) -= f * a(s, t);
  };

  for (std::size_t k = 0; k < n; k += 2) {
    std::size_t j = k + 1;
    while (j < n && a(k, j).is_zero()) ++j;
    if (j == n) return Rat(0);
    if (j != k + 1) {
      for (std::size_t t = 0; t < n; ++t) std::swap(a(t, j), a(t, k + 1));
      for (std::size_t t = 0; t < n; ++t) std::swap(a(j, t), a(k + 1, t));
      pf = -pf;
    }
    const Rat piv = a(k, k + 1);
    pf *= piv;
    for (std::size_t i = k + 2; i < n; ++i) {
      if (!a(k, i).is_zero()) shear(i, k + 1, a(k, i) / piv, k);
      if (!a(k + 1, i).is_zero()) shear(i, k, a(k + 1, i) / a(k + 1, k), k);
    }
  }
  return pf;
}

/// Index set S with rank(M[S,S]) = rank(M) for symmetric M. Indices are taken
/// greedily in increasing order while the Schur complement has a nonzero
/// diagonal entry; when it has none, the lexicographically first index pair
/// with a nonzero off-diagonal entry is taken as a 2x2 pivot.
inline std::vector<std::size_t> principal_rank_subset(const RatMatrix& m) {
  if (!m.is_symmetric()) throw Error(ErrorKind::NotSymmetric, "principal_rank_subset needs a symmetric matrix");
  const std::size_t n = m.rows();
  const std::size_t target = rank(m);
  std::vector<std::size_t> chosen;
  if (target == n) {
    chosen.resize(n);
    std::iota(chosen.begin(), chosen.end(), std::size_t{0});
    return chosen;
  }

  RatMatrix s = m;  // Schur complement of the chosen block, full index space
  std::vector<bool> used(n, false);

  auto eliminate = [&](const std::vector<std::size_t>& piv) {
    std::vector<std::size_t> rest;
    for (std::size_t i = 0; i < n; ++i)
      if (!used[i] && std::find(piv.begin(), piv.end(), i) == piv.end()) rest.push_back(i);
    const RatMatrix block_inv = inverse(s.submatrix(piv, piv));
    const RatMatrix cross = s.submatrix(piv, rest);
    const RatMatrix update = cross.transpose() * block_inv * cross;
    for (std::size_t a = 0; a < rest.size(); ++a)
      for (std::size_t b = 0; b < rest.size(); ++b) s(rest[a], rest[b]) -= update(a, b);
    for (auto p : piv) {
      used[p] = true;
      chosen.push_back(p);
    }
  };

  while (chosen.size() < target) {
    bool progressed = false;
    for (std::size_t i = 0; i < n && chosen.size() < target; ++i) {
      if (!used[i] && !s(i, i).is_zero()) {
        eliminate({i});
        progressed = true;
      }
    }
    if (chosen.size() >= target) break;
    if (progressed) continue;  // later pivots can revive earlier diagonals
    bool paired = false;
    for (std::size_t i = 0; i < n && !paired; ++i) {
      if (used[i]) continue;
      for (std::size_t j = i + 1; j < n; ++j) {
        if (!used[j] && !s(i, j).is_zero()) {
          eliminate({i, j});
          paired = true;
          break;
        }
      }
    }
    if (!paired) break;  // unreachable for symmetric input
  }
  std::sort(chosen.begin(), chosen.end());
  return chosen;
}

/// Scales a rational vector to the primitive integer vector on the same ray.
inline std::vector<Int> primitive_integer(std::span<const Rat> v) {
  Int l = 1;
  for (const Rat& x : v)
    if (x.den() != 1) l = lcm(l, x.den());
  std::vector<Int> out;
  out.reserve(v.size());
  Int g = 0;
  for (const Rat& x : v) {
    out.push_back(x.num() * (l / x.den()));
    g = gcd(g, out.back());
  }
  if (g > 1)
    for (auto& x : out) x /= g;
  return out;
}

}  // namespace oinst
