#pragma once

#include <oinst/error.hpp>
#include <oinst/matrix.hpp>

#include <algorithm>
#include <cstddef>
#include <sstream>
#include <string>
#include <vector>

namespace oinst {

/// Σ_j coeffs[j] x_j in the homogeneous coordinates x_0..x_n.
struct LinForm {
  RatVector coeffs;

  static LinForm zero(std::size_t n) { return {RatVector(n + 1)}; }
  static LinForm var(std::size_t n, std::size_t j, Rat s = 1) {
    LinForm f = zero(n);
    f.coeffs.at(j) = std::move(s);
    return f;
  }

  std::size_t n() const { return coeffs.size() - 1; }
  bool is_zero() const {
    for (const auto& v : coeffs)
      if (!v.is_zero()) return false;
    return true;
  }

  Rat eval(std::span<const Rat> x) const {
    Rat s;
    for (std::size_t j = 0; j < coeffs.size(); ++j)
      if (!coeffs[j].is_zero()) s += coeffs[j] * x[j];
    return s;
  }

  LinForm& operator+=(const LinForm& o) {
    for (std::size_t j = 0; j < coeffs.size(); ++j) coeffs[j] += o.coeffs[j];
    return *this;
  }

  friend bool operator==(const LinForm&, const LinForm&) = default;
};

/// Renders like "2x_1", "-x_0-x_2", "0".
inline std::string to_string(const LinForm& f) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t j = 0; j < f.coeffs.size(); ++j) {
    const Rat& a = f.coeffs[j];
    if (a.is_zero()) continue;
    if (a.sign() < 0)
      os << '-';
    else if (!first)
      os << '+';
    const Rat mag = a.sign() < 0 ? -a : a;
    if (mag != Rat(1)) os << mag;
    os << "x_" << j;
    first = false;
  }
  return first ? "0" : os.str();
}

/// Dense matrix whose entries are linear forms over a shared n.
class LinFormMatrix {
 public:
  LinFormMatrix(std::size_t rows, std::size_t cols, std::size_t n)
      : rows_(rows), cols_(cols), n_(n), entries_(rows * cols, LinForm::zero(n)) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t n() const noexcept { return n_; }

  LinForm& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const LinForm& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  LinFormMatrix transpose() const {
    LinFormMatrix t(cols_, rows_, n_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  /// Numeric matrix at the point x.
  RatMatrix eval(std::span<const Rat> x) const {
    RatMatrix m(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) m(i, j) = (*this)(i, j).eval(x);
    return m;
  }

  /// Coefficient matrix of x_l.
  RatMatrix coefficient(std::size_t l) const {
    RatMatrix m(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) m(i, j) = (*this)(i, j).coeffs[l];
    return m;
  }

  /// Σ_l coefficient(l) x_l, the inverse of `coefficient`.
  static LinFormMatrix from_coefficients(const std::vector<RatMatrix>& per_var) {
    const std::size_t n = per_var.size() - 1;
    LinFormMatrix out(per_var[0].rows(), per_var[0].cols(), n);
    for (std::size_t l = 0; l <= n; ++l)
      for (std::size_t i = 0; i < out.rows_; ++i)
        for (std::size_t j = 0; j < out.cols_; ++j) out(i, j).coeffs[l] = per_var[l](i, j);
    return out;
  }

  friend bool operator==(const LinFormMatrix&, const LinFormMatrix&) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::size_t n_;
  std::vector<LinForm> entries_;
};

/// Product of two linear-form matrices as a matrix of quadratic forms,
/// stored as one coefficient matrix per monomial x_j x_l (j <= l).
struct QuadFormMatrix {
  std::size_t n = 0;
  std::vector<RatMatrix> by_monomial;  // index j*(n+1)+l, only j <= l populated

  bool is_zero() const {
    for (const auto& m : by_monomial)
      if (!m.is_zero()) return false;
    return true;
  }
};

inline QuadFormMatrix multiply(const LinFormMatrix& a, const LinFormMatrix& b) {
  if (a.cols() != b.rows() || a.n() != b.n()) throw Error(ErrorKind::ShapeMismatch, "linear-form product");
  const std::size_t v = a.n() + 1;
  QuadFormMatrix q{a.n(), std::vector<RatMatrix>(v * v, RatMatrix(a.rows(), b.cols()))};
  for (std::size_t j = 0; j < v; ++j)
    for (std::size_t l = 0; l < v; ++l) {
      const RatMatrix prod = a.coefficient(j) * b.coefficient(l);
      auto& slot = q.by_monomial[std::min(j, l) * v + std::max(j, l)];
      slot += prod;
    }
  return q;
}

inline std::ostream& operator<<(std::ostream& os, const LinFormMatrix& m) {
  std::vector<std::string> cells(m.rows() * m.cols());
  std::size_t width = 1;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      cells[i * m.cols() + j] = to_string(m(i, j));
      width = std::max(width, cells[i * m.cols() + j].size());
    }
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << "  ";
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const auto& s = cells[i * m.cols() + j];
      os << std::string(width - s.size() + (j ? 2 : 0), ' ') << s;
    }
    os << '\n';
  }
  return os;
}

}  // namespace oinst
