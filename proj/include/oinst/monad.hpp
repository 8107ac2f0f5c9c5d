#pragma once

#include <oinst/error.hpp>
#include <oinst/linalg.hpp>
#include <oinst/linform.hpp>
#include <oinst/random.hpp>
#include <oinst/tensor.hpp>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace oinst {

/// α: H_c ⊗ O(-1) -> (H_c ⊗ V) ⊗ O with entry δ_{i,i'} x_j at row (i,j), column i'.
inline LinFormMatrix build_alpha(std::size_t c, std::size_t n) {
  LinFormMatrix a(c * (n + 1), c, n);
  for (std::size_t i = 0; i < c; ++i)
    for (std::size_t j = 0; j <= n; ++j) a(i * (n + 1) + j, i) = LinForm::var(n, j);
  return a;
}

namespace detail {

inline void check_subset(std::span<const std::size_t> s, std::size_t order) {
  std::vector<bool> seen(order, false);
  for (auto i : s) {
    if (i >= order || seen[i]) throw Error(ErrorKind::BadSubset, "index " + std::to_string(i) + " out of range or repeated");
    seen[i] = true;
  }
}

inline std::vector<std::size_t> full_range(std::size_t n) {
  std::vector<std::size_t> r(n);
  for (std::size_t i = 0; i < n; ++i) r[i] = i;
  return r;
}

}  // namespace detail

/// α for W ≅ K^S, where S indexes an invertible principal block of F. The
/// coimage is identified with K^S through x ↦ F[S,S]^{-1} F[S,:] x, so that
/// q_A = F[S,S]. For S = everything this is the plain pattern above.
inline LinFormMatrix build_alpha(const FlatForm& f, std::span<const std::size_t> s) {
  detail::check_subset(s, f.order());
  if (s.size() == f.order()) return build_alpha(f.c, f.n);
  const auto all = detail::full_range(f.order());
  const RatMatrix block = f.M.submatrix(s, s);
  if (det(block).is_zero()) throw Error(ErrorKind::BadSubset, "F[S,S] is singular");
  const RatMatrix proj = inverse(block) * f.M.submatrix(s, all);
  const LinFormMatrix full = build_alpha(f.c, f.n);
  std::vector<RatMatrix> per_var;
  for (std::size_t l = 0; l <= f.n; ++l) per_var.push_back(proj * full.coefficient(l));
  return LinFormMatrix::from_coefficients(per_var);
}

/// β = a_A^∨ ∘ (q_A ⊗ Id), c × |S|: entry (k, s) = Σ_l F[s,(k,l)] x_l.
inline LinFormMatrix build_beta(const FlatForm& f, std::span<const std::size_t> s) {
  detail::check_subset(s, f.order());
  LinFormMatrix b(f.c, s.size(), f.n);
  for (std::size_t k = 0; k < f.c; ++k)
    for (std::size_t col = 0; col < s.size(); ++col)
      for (std::size_t l = 0; l <= f.n; ++l) b(k, col).coeffs[l] = f.M(s[col], f.index(k, l));
  return b;
}

/// The monad H_c(-1) --α--> W --β--> H_c^∨(1) for a form of rank 2c+r.
struct Monad {
  std::vector<std::size_t> subset;  // basis of W inside H_c ⊗ V
  RatMatrix q;                      // q_A = F[S,S]
  LinFormMatrix alpha;
  LinFormMatrix beta;
};

inline Monad build_monad(const FlatForm& f, std::size_t r) {
  const std::size_t rk = rank(f.M);
  if (rk != 2 * f.c + r)
    throw Error(ErrorKind::RankMismatch, "rank(A) = " + std::to_string(rk) + " but 2c+r = " + std::to_string(2 * f.c + r));
  auto s = principal_rank_subset(f.M);
  Monad m{s, f.M.submatrix(s, s), build_alpha(f, s), build_beta(f, s)};
  return m;
}

inline LinFormMatrix build_beta(const FlatForm& f, std::size_t r) { return build_monad(f, r).beta; }

/// β·α = 0 as a matrix of quadratic forms (every monomial coefficient).
inline bool verify_monad_identity(const LinFormMatrix& alpha, const LinFormMatrix& beta) {
  if (beta.cols() != alpha.rows()) throw Error(ErrorKind::ShapeMismatch, "beta.cols != alpha.rows");
  return multiply(beta, alpha).is_zero();
}

/// A(h ⊗ v) as a vector in H_c^∨ ⊗ V^∨.
inline RatVector apply_decomposable(const FlatForm& f, std::span<const Rat> h, std::span<const Rat> v) {
  RatVector hv(f.order());
  for (std::size_t i = 0; i < f.c; ++i)
    for (std::size_t j = 0; j <= f.n; ++j) hv[f.index(i, j)] = h[i] * v[j];
  return mat_vec(f.M, hv);
}

/// For fixed h, the c(n+1) × (n+1) matrix v ↦ A(h ⊗ v).
inline RatMatrix slice_by_h(const FlatForm& f, std::span<const Rat> h) {
  RatMatrix s(f.order(), f.dim_v());
  for (std::size_t row = 0; row < f.order(); ++row)
    for (std::size_t j = 0; j <= f.n; ++j)
      for (std::size_t i = 0; i < f.c; ++i)
        if (!h[i].is_zero()) s(row, j) += f.M(row, f.index(i, j)) * h[i];
  return s;
}

/// For fixed v, the c(n+1) × c matrix h ↦ A(h ⊗ v).
inline RatMatrix slice_by_v(const FlatForm& f, std::span<const Rat> v) {
  RatMatrix s(f.order(), f.c);
  for (std::size_t row = 0; row < f.order(); ++row)
    for (std::size_t i = 0; i < f.c; ++i)
      for (std::size_t j = 0; j <= f.n; ++j)
        if (!v[j].is_zero()) s(row, i) += f.M(row, f.index(i, j)) * v[j];
  return s;
}

struct DegeneracyWitness {
  std::vector<Int> h;
  std::vector<Int> v;
};

namespace detail {

inline RatVector basis_vector(std::size_t len, std::size_t k) {
  RatVector e(len);
  e[k] = 1;
  return e;
}

inline RatVector to_rat(const std::vector<Int>& v) { return RatVector(v.begin(), v.end()); }

}  // namespace detail

/// Searches for nonzero h, v with A(h ⊗ v) = 0. Standard basis vectors are
/// swept first in both slice directions, then `budget` seeded samples of h and
/// v in [-10,10]; each probe looks for a kernel vector of the corresponding
/// slice. A miss is not a certificate of non-degeneracy.
inline std::optional<DegeneracyWitness> nondegeneracy_witness_search(const FlatForm& f, std::size_t budget,
                                                                     std::uint64_t seed, long box = 10) {
  if (rank(f.M) == f.order()) return std::nullopt;

  auto probe_h = [&](const RatVector& h) -> std::optional<DegeneracyWitness> {
    auto ker = kernel_basis(slice_by_h(f, h));
    if (ker.empty()) return std::nullopt;
    return DegeneracyWitness{primitive_integer(h), primitive_integer(ker.front())};
  };
  auto probe_v = [&](const RatVector& v) -> std::optional<DegeneracyWitness> {
    auto ker = kernel_basis(slice_by_v(f, v));
    if (ker.empty()) return std::nullopt;
    return DegeneracyWitness{primitive_integer(ker.front()), primitive_integer(v)};
  };

  for (std::size_t i = 0; i < f.c; ++i)
    if (auto w = probe_h(detail::basis_vector(f.c, i))) return w;
  for (std::size_t j = 0; j <= f.n; ++j)
    if (auto w = probe_v(detail::basis_vector(f.dim_v(), j))) return w;

  for (std::size_t s = 0; s < budget; ++s) {
    Rng rng(seed, s);
    if (auto w = probe_h(rng.nonzero_point(f.c, box))) return w;
    if (auto w = probe_v(rng.nonzero_point(f.dim_v(), box))) return w;
  }
  return std::nullopt;
}

enum class NondegStatus { CertifiedFullRank, CertifiedPureTensor, SampledNoCounterexample, CounterexampleFound, Unknown };

inline const char* to_string(NondegStatus s) {
  switch (s) {
    case NondegStatus::CertifiedFullRank: return "CertifiedFullRank";
    case NondegStatus::CertifiedPureTensor: return "CertifiedPureTensor";
    case NondegStatus::SampledNoCounterexample: return "SampledNoCounterexample";
    case NondegStatus::CounterexampleFound: return "CounterexampleFound";
    case NondegStatus::Unknown: return "Unknown";
  }
  return "Unknown";
}

enum class Precheck { Ok, ChargeOneForbidden, ChargeTwoForbidden, RankBoundViolated };

inline const char* to_string(Precheck p) {
  switch (p) {
    case Precheck::Ok: return "Ok";
    case Precheck::ChargeOneForbidden: return "ChargeOneForbidden";
    case Precheck::ChargeTwoForbidden: return "ChargeTwoForbidden";
    case Precheck::RankBoundViolated: return "RankBoundViolated";
  }
  return "Ok";
}

struct NondegStrategy {
  std::size_t budget = 1000;
  std::uint64_t seed = 0;
  long box = 10;
};

struct ConditionReport {
  std::size_t c = 0, n = 0, r = 0;
  std::size_t rank_A = 0;
  std::size_t a1_expected = 0;
  bool a1_ok = false;
  NondegStatus a2_status = NondegStatus::Unknown;
  std::size_t a2_samples = 0;
  std::optional<DegeneracyWitness> a2_witness;
  bool a3_ok = false;
  std::vector<std::size_t> q_subset;
  Precheck precheck = Precheck::Ok;
  std::vector<Precheck> precheck_flags;
  std::vector<std::string> warnings;

  bool a2_ok() const {
    return a2_status == NondegStatus::CertifiedFullRank || a2_status == NondegStatus::CertifiedPureTensor ||
           a2_status == NondegStatus::SampledNoCounterexample;
  }
  bool conditions_ok() const { return a1_ok && a2_ok() && a3_ok; }
  bool all_ok() const { return conditions_ok() && precheck == Precheck::Ok; }
};

/// Charge and rank-bound prechecks, in reporting priority order.
inline std::vector<Precheck> prechecks(std::size_t c, std::size_t n, std::size_t r) {
  std::vector<Precheck> flags;
  if (c == 1) flags.push_back(Precheck::ChargeOneForbidden);
  if (c == 2) flags.push_back(Precheck::ChargeTwoForbidden);
  if (r > (n - 1) * c) flags.push_back(Precheck::RankBoundViolated);
  return flags;
}

inline ConditionReport check_conditions(const FlatForm& f, std::size_t r, const NondegStrategy& strategy = {}) {
  ConditionReport rep;
  rep.c = f.c;
  rep.n = f.n;
  rep.r = r;
  rep.rank_A = rank(f.M);
  rep.a1_expected = 2 * f.c + r;
  rep.a1_ok = rep.rank_A == rep.a1_expected;

  if (!wedge_membership(f)) rep.warnings.push_back("form is not in the wedge-square tensor subspace");

  bool pure_certified = false;
  if (f.terms.size() == 1) {
    const auto& [B, C] = f.terms.front();
    pure_certified = rank(B) == f.c && rank(C) == f.dim_v();
  }
  if (rep.rank_A == f.order()) {
    rep.a2_status = NondegStatus::CertifiedFullRank;
  } else if (pure_certified) {
    rep.a2_status = NondegStatus::CertifiedPureTensor;
  } else if (auto w = nondegeneracy_witness_search(f, strategy.budget, strategy.seed, strategy.box)) {
    rep.a2_status = NondegStatus::CounterexampleFound;
    rep.a2_witness = std::move(w);
  } else if (strategy.budget > 0) {
    rep.a2_status = NondegStatus::SampledNoCounterexample;
    rep.a2_samples = strategy.budget;
  }

  rep.q_subset = principal_rank_subset(f.M);
  if (rep.q_subset.size() == rep.a1_expected) {
    const RatMatrix q = f.M.submatrix(rep.q_subset, rep.q_subset);
    rep.a3_ok = q.is_symmetric() && !det(q).is_zero();
  }

  rep.precheck_flags = prechecks(f.c, f.n, r);
  if (!rep.precheck_flags.empty()) rep.precheck = rep.precheck_flags.front();
  if (f.c == 1) rep.warnings.push_back("charge 1: the wedge square of H_1 is zero, so A is the degenerate zero map");
  if (f.c == 2 && rep.conditions_ok())
    rep.warnings.push_back("charge 2: (A1)-(A3) pass in linear algebra, but charge-2 orthogonal instantons with no "
                           "global sections do not exist; verdict overridden");
  return rep;
}

}  // namespace oinst
