#pragma once

#include <oinst/error.hpp>
#include <oinst/linalg.hpp>
#include <oinst/matrix.hpp>

#include <cstddef>
#include <string>
#include <vector>

namespace oinst {

/// One pure tensor B ⊗ C with B ∈ Λ²H_c^∨ (c×c skew) and C ∈ Λ²V^∨ ((n+1)×(n+1) skew).
struct Term {
  RatMatrix B;
  RatMatrix C;

  friend bool operator==(const Term&, const Term&) = default;
};

/// A = Σ_t B_t ⊗ C_t on H_c ⊗ V with dim V = n+1.
struct TensorSpec {
  std::size_t c = 0;
  std::size_t n = 0;
  std::vector<Term> terms;

  std::size_t dim_v() const { return n + 1; }

  friend bool operator==(const TensorSpec&, const TensorSpec&) = default;
};

/// Throws ShapeMismatch / NotSkew describing the first offending term.
inline void validate(const TensorSpec& spec) {
  if (spec.c == 0 || spec.n == 0) throw Error(ErrorKind::ShapeMismatch, "c and n must be at least 1");
  for (std::size_t t = 0; t < spec.terms.size(); ++t) {
    const auto& [B, C] = spec.terms[t];
    const std::string where = "/terms/" + std::to_string(t);
    if (B.rows() != spec.c || B.cols() != spec.c) throw Error(ErrorKind::ShapeMismatch, where + "/B must be c x c");
    if (C.rows() != spec.dim_v() || C.cols() != spec.dim_v())
      throw Error(ErrorKind::ShapeMismatch, where + "/C must be (n+1) x (n+1)");
    if (!B.is_skew()) throw Error(ErrorKind::NotSkew, where + "/B");
    if (!C.is_skew()) throw Error(ErrorKind::NotSkew, where + "/C");
  }
}

/// The form A as a symmetric c(n+1) × c(n+1) matrix. Basis vector h_i ⊗ v_j
/// sits at index i*(n+1)+j. `terms` keeps a pure-tensor decomposition when
/// one is known (flatten and act preserve it); it is empty otherwise.
struct FlatForm {
  std::size_t c = 0;
  std::size_t n = 0;
  RatMatrix M;
  std::vector<Term> terms;

  std::size_t dim_v() const { return n + 1; }
  std::size_t order() const { return c * (n + 1); }
  std::size_t index(std::size_t i, std::size_t j) const { return i * (n + 1) + j; }
  const Rat& at(std::size_t i, std::size_t j, std::size_t k, std::size_t l) const { return M(index(i, j), index(k, l)); }

  /// Wraps a raw matrix without a known decomposition (used for zero forms
  /// and rejection tests); no invariants are checked.
  static FlatForm raw(std::size_t c, std::size_t n, RatMatrix m) {
    if (m.rows() != c * (n + 1) || m.cols() != c * (n + 1)) throw Error(ErrorKind::ShapeMismatch, "raw form order");
    return FlatForm{c, n, std::move(m), {}};
  }

  static FlatForm zero(std::size_t c, std::size_t n) { return raw(c, n, RatMatrix(c * (n + 1), c * (n + 1))); }
};

inline FlatForm flatten(const TensorSpec& spec) {
  validate(spec);
  FlatForm f{spec.c, spec.n, RatMatrix(spec.c * spec.dim_v(), spec.c * spec.dim_v()), spec.terms};
  for (const auto& [B, C] : spec.terms) f.M += kron(B, C);
  return f;
}

/// Symmetric, and antisymmetric under swapping the two H indices:
/// M[(i,j),(k,l)] = -M[(k,j),(i,l)]. Together these characterize
/// Λ²H^∨ ⊗ Λ²V^∨ inside S²(H ⊗ V)^∨.
inline bool wedge_membership(const RatMatrix& m, std::size_t c, std::size_t n) {
  const std::size_t v = n + 1;
  if (m.rows() != c * v || m.cols() != c * v) return false;
  if (!m.is_symmetric()) return false;
  for (std::size_t i = 0; i < c; ++i)
    for (std::size_t k = i; k < c; ++k)
      for (std::size_t j = 0; j < v; ++j)
        for (std::size_t l = 0; l < v; ++l)
          if (m(i * v + j, k * v + l) != -m(k * v + j, i * v + l)) return false;
  return true;
}

inline bool wedge_membership(const FlatForm& f) { return wedge_membership(f.M, f.c, f.n); }

/// GL(H_c) action (h ⊗ Id) A (hᵀ ⊗ Id).
inline FlatForm act(const RatMatrix& h, const FlatForm& f) {
  if (h.rows() != f.c || h.cols() != f.c) throw Error(ErrorKind::ShapeMismatch, "h must be c x c");
  if (det(h).is_zero()) throw Error(ErrorKind::Singular, "h is not invertible");
  const RatMatrix lift = kron(h, RatMatrix::identity(f.dim_v()));
  FlatForm out{f.c, f.n, lift * f.M * lift.transpose(), {}};
  const RatMatrix ht = h.transpose();
  for (const auto& [B, C] : f.terms) out.terms.push_back({h * B * ht, C});
  return out;
}

}  // namespace oinst
