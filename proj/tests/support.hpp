#pragma once

// Fixtures and independent oracles shared by the test suites. Nothing here
// calls into the elimination routines it is used to check.

#include <oinst/oinst.hpp>

#include <cstddef>
#include <string>
#include <vector>

namespace oinst::testing {

inline SpecFile load_example(const std::string& name) { return load_spec(std::string(OINST_DATA_DIR) + "/" + name + ".json"); }

inline FlatForm example_form(const std::string& name) { return flatten(load_example(name).tensor()); }

inline RatMatrix rat(std::initializer_list<std::initializer_list<Rat>> rows) { return RatMatrix(rows); }

inline Point pt(std::initializer_list<long> xs) {
  Point p;
  for (long x : xs) p.emplace_back(x);
  return p;
}

// ---- oracles ---------------------------------------------------------------

/// Laplace expansion along the first row.
inline Rat cofactor_det(const RatMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  if (n == 1) return m(0, 0);
  Rat total;
  for (std::size_t j = 0; j < n; ++j) {
    if (m(0, j).is_zero()) continue;
    std::vector<std::size_t> rows, cols;
    for (std::size_t i = 1; i < n; ++i) rows.push_back(i);
    for (std::size_t k = 0; k < n; ++k)
      if (k != j) cols.push_back(k);
    const Rat minor = cofactor_det(m.submatrix(rows, cols));
    total += (j % 2 ? -1 : 1) * m(0, j) * minor;
  }
  return total;
}

/// Pf(A) = Σ_{j>0} (-1)^{j+1} a_{0j} Pf(A without rows/cols 0, j).
inline Rat expansion_pfaffian(const RatMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  Rat total;
  for (std::size_t j = 1; j < n; ++j) {
    if (m(0, j).is_zero()) continue;
    std::vector<std::size_t> keep;
    for (std::size_t k = 1; k < n; ++k)
      if (k != j) keep.push_back(k);
    total += ((j % 2) ? 1 : -1) * m(0, j) * expansion_pfaffian(m.submatrix(keep, keep));
  }
  return total;
}

/// Rational Gaussian elimination, pivoting on the last nonzero entry of each
/// column (a different pivot order from the library's).
inline std::size_t gauss_rank(RatMatrix m) {
  std::size_t r = 0;
  for (std::size_t col = m.cols(); col-- > 0 && r < m.rows();) {
    std::size_t p = m.rows();
    for (std::size_t i = m.rows(); i-- > r;)
      if (!m(i, col).is_zero()) {
        p = i;
        break;
      }
    if (p == m.rows()) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      if (m(i, col).is_zero()) continue;
      const Rat f = m(i, col) / m(r, col);
      for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    ++r;
  }
  return r;
}

/// Direct product formula Σ_t B_t[i,k] C_t[j,l], written out index by index.
inline Rat tensor_entry(const TensorSpec& s, std::size_t i, std::size_t j, std::size_t k, std::size_t l) {
  Rat v;
  for (const auto& t : s.terms) v += t.B(i, k) * t.C(j, l);
  return v;
}

// ---- generators ------------------------------------------------------------

inline RatMatrix random_skew(std::size_t dim, Rng& rng, long box) {
  RatMatrix m(dim, dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = i + 1; j < dim; ++j) {
      m(i, j) = rng.uniform(-box, box);
      m(j, i) = -m(i, j);
    }
  return m;
}

inline RatMatrix random_matrix(std::size_t rows, std::size_t cols, Rng& rng, long box) {
  RatMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rng.uniform(-box, box);
  return m;
}

inline TensorSpec random_spec(std::size_t c, std::size_t n, std::size_t terms, Rng& rng, long box = 3) {
  TensorSpec s{c, n, {}};
  for (std::size_t t = 0; t < terms; ++t) s.terms.push_back({random_skew(c, rng, box), random_skew(n + 1, rng, box)});
  return s;
}

// ---- printed displays --------------------------------------------------------

/// Parses "2x_1", "-x_0-x_2", "0" into a linear form in x_0..x_n.
inline LinForm parse_linform(const std::string& s, std::size_t n) {
  LinForm f = LinForm::zero(n);
  std::size_t pos = 0;
  while (pos < s.size()) {
    int sign = 1;
    if (s[pos] == '+' || s[pos] == '-') sign = s[pos++] == '-' ? -1 : 1;
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == s.size()) return f;  // the literal "0"
    long coeff = pos > start ? std::stol(s.substr(start, pos - start)) : 1;
    pos += 2;  // "x_"
    start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    f.coeffs.at(std::stoul(s.substr(start, pos - start))) += Rat(sign * coeff);
  }
  return f;
}

inline LinFormMatrix parse_display(const std::vector<std::vector<std::string>>& rows, std::size_t n) {
  LinFormMatrix m(rows.size(), rows.front().size(), n);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = parse_linform(rows[i][j], n);
  return m;
}

inline const std::vector<std::vector<std::string>> kPrintedBetaTC6P3 = {
    {"0", "2x_1", "0", "0", "0", "0"},
    {"0", "-2x_0", "0", "0", "0", "0"},
    {"0", "-6x_3", "0", "0", "0", "0"},
    {"0", "6x_2", "0", "0", "0", "0"},
    {"-2x_1", "0", "0", "0", "0", "0"},
    {"2x_0", "0", "0", "0", "0", "0"},
    {"6x_3", "0", "0", "0", "0", "0"},
    {"-6x_2", "0", "0", "0", "0", "0"},
    {"0", "0", "0", "-x_1", "0", "0"},
    {"0", "0", "0", "x_0", "0", "0"},
    {"0", "0", "0", "-3x_3", "0", "0"},
    {"0", "0", "0", "3x_2", "0", "0"},
    {"0", "0", "x_1", "0", "0", "0"},
    {"0", "0", "x_0", "0", "0", "0"},
    {"0", "0", "-3x_3", "0", "0", "0"},
    {"0", "0", "3x_2", "0", "0", "0"},
    {"0", "0", "0", "0", "0", "x_1"},
    {"0", "0", "0", "0", "0", "-x_0"},
    {"0", "0", "0", "0", "0", "-3x_3"},
    {"0", "0", "0", "0", "0", "3x_2"},
    {"0", "0", "0", "0", "-x_1", "0"},
    {"0", "0", "0", "0", "x_0", "0"},
    {"0", "0", "0", "0", "3x_3", "0"},
    {"0", "0", "0", "0", "-3x_2", "0"},
};

inline const std::vector<std::vector<std::string>> kPrintedBetaTC5P3 = {
    {"0", "x_1", "x_3", "0", "x_3"},
    {"0", "-x_0", "x_2", "0", "x_2"},
    {"0", "x_3", "-x_1", "0", "-x_1"},
    {"0", "-x_2", "-x_0", "0", "-x_0"},
    {"-x_1", "0", "x_1", "x_3", "0"},
    {"x_0", "0", "-x_0", "0", "0"},
    {"-x_3", "0", "x_3", "x_3", "0"},
    {"x_2", "0", "-x_2", "-x_0-x_2", "0"},
    {"-x_3", "-x_1", "0", "0", "x_3"},
    {"x_2", "x_0", "0", "0", "0"},
    {"x_1", "-x_3", "0", "0", "x_3"},
    {"x_0", "x_2", "0", "0", "-x_0-x_2"},
    {"0", "-x_3", "0", "0", "-x_3"},
    {"0", "0", "0", "0", "x_2"},
    {"0", "-x_3", "0", "0", "-x_1"},
    {"0", "x_0+x_2", "0", "0", "-x_0"},
    {"-x_3", "0", "-x_3", "-x_3", "0"},
    {"-x_2", "0", "0", "-x_2", "0"},
    {"-x_3", "0", "-x_3", "0", "0"},
    {"x_0", "0", "x_0+x_2", "x_0", "0"},
};

/// γ on the c6p3 example at P = (a,b,c,d), Q = (e,f,g,h), as printed.
inline Rat c6p3_lambda1(const Point& P, const Point& Q) {
  const auto &a = P[0], &b = P[1], &c = P[2], &d = P[3], &e = Q[0], &f = Q[1], &g = Q[2], &h = Q[3];
  return 2 * b * e - 2 * a * f - 6 * d * g + 6 * c * h;
}
inline Rat c6p3_lambda2(const Point& P, const Point& Q) {
  const auto &a = P[0], &b = P[1], &c = P[2], &d = P[3], &e = Q[0], &f = Q[1], &g = Q[2], &h = Q[3];
  return -b * e + a * f + 3 * d * g - 3 * c * h;
}
inline Rat c6p3_lambda3(const Point& P, const Point& Q) {
  const auto &a = P[0], &b = P[1], &c = P[2], &d = P[3], &e = Q[0], &f = Q[1], &g = Q[2], &h = Q[3];
  return b * e - a * f - 3 * d * g + 3 * c * h;
}

}  // namespace oinst::testing
