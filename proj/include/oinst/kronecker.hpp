#pragma once

#include <oinst/error.hpp>
#include <oinst/linalg.hpp>
#include <oinst/monad.hpp>
#include <oinst/random.hpp>
#include <oinst/tensor.hpp>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace oinst {

using Point = RatVector;

/// β(Q)·α(P) without the line check: entry (i,k) = Σ_{j,l} F[(i,j),(k,l)] Q_j P_l.
/// For A = Σ B_t ⊗ C_t this is Σ_t B_t[i,k] (Qᵀ C_t P).
inline RatMatrix gamma_bilinear(const FlatForm& f, std::span<const Rat> p, std::span<const Rat> q) {
  if (p.size() != f.dim_v() || q.size() != f.dim_v()) throw Error(ErrorKind::ShapeMismatch, "points must have n+1 coordinates");
  RatMatrix g(f.c, f.c);
  for (std::size_t i = 0; i < f.c; ++i)
    for (std::size_t k = 0; k < f.c; ++k) {
      Rat s;
      for (std::size_t j = 0; j <= f.n; ++j) {
        if (q[j].is_zero()) continue;
        for (std::size_t l = 0; l <= f.n; ++l)
          if (!p[l].is_zero()) s += f.at(i, j, k, l) * q[j] * p[l];
      }
      g(i, k) = std::move(s);
    }
  return g;
}

/// P ∧ Q ≠ 0, i.e. the two points span a line.
inline bool spans_line(std::span<const Rat> p, std::span<const Rat> q) {
  RatMatrix m(2, p.size());
  for (std::size_t j = 0; j < p.size(); ++j) {
    m(0, j) = p[j];
    m(1, j) = q[j];
  }
  return rank(m) == 2;
}

struct GammaEval {
  Point P, Q;
  RatMatrix M;
};

inline GammaEval gamma_eval(const FlatForm& f, const Point& p, const Point& q) {
  if (p.size() != f.dim_v() || q.size() != f.dim_v()) throw Error(ErrorKind::ShapeMismatch, "points must have n+1 coordinates");
  if (!spans_line(p, q)) throw Error(ErrorKind::DegenerateLine, "P and Q are proportional");
  return {p, q, gamma_bilinear(f, p, q)};
}

enum class Splitting { Trivial, Jumping };

inline const char* to_string(Splitting s) { return s == Splitting::Trivial ? "Trivial" : "Jumping"; }

struct SplitVerdict {
  Splitting verdict = Splitting::Jumping;
  Rat determinant;
  std::optional<Rat> pfaffian;
  RatMatrix gamma;
};

/// E|_L is trivial iff γ(P ∧ Q) is invertible.
inline SplitVerdict splitting_type(const FlatForm& f, const Point& p, const Point& q) {
  auto g = gamma_eval(f, p, q);
  SplitVerdict v;
  v.determinant = det(g.M);
  v.verdict = v.determinant.is_zero() ? Splitting::Jumping : Splitting::Trivial;
  if (f.c % 2 == 0 && g.M.is_skew()) {
    v.pfaffian = pfaffian(g.M);
    if (*v.pfaffian * *v.pfaffian != v.determinant) throw std::logic_error("Pf^2 != det on a gamma evaluation");
  }
  v.gamma = std::move(g.M);
  return v;
}

/// γ with entries as bilinear forms: coeff[i*c+k](l, j) multiplies P_l Q_j.
/// Recovered exactly from the values on pairs of basis vectors.
struct SymbolicGamma {
  std::size_t c = 0, n = 0;
  std::vector<RatMatrix> coeff;

  const RatMatrix& entry(std::size_t i, std::size_t k) const { return coeff[i * c + k]; }
};

inline SymbolicGamma symbolic_gamma(const FlatForm& f) {
  SymbolicGamma s{f.c, f.n, std::vector<RatMatrix>(f.c * f.c, RatMatrix(f.dim_v(), f.dim_v()))};
  for (std::size_t l = 0; l <= f.n; ++l)
    for (std::size_t j = 0; j <= f.n; ++j) {
      Point p(f.dim_v()), q(f.dim_v());
      p[l] = 1;
      q[j] = 1;
      const RatMatrix g = gamma_bilinear(f, p, q);
      for (std::size_t i = 0; i < f.c; ++i)
        for (std::size_t k = 0; k < f.c; ++k) s.coeff[i * f.c + k](l, j) = g(i, k);
    }
  return s;
}

/// Renders a bilinear form with P = (a,b,c,d), Q = (e,f,g,h) when n = 3 and
/// p0..pn, q0..qn otherwise, e.g. "2be-2af-6dg+6ch".
inline std::string render_bilinear(const RatMatrix& coeff) {
  const std::size_t v = coeff.rows();
  auto pname = [&](std::size_t l) { return v == 4 ? std::string(1, char('a' + l)) : "p" + std::to_string(l); };
  auto qname = [&](std::size_t j) { return v == 4 ? std::string(1, char('e' + j)) : "q" + std::to_string(j); };
  std::ostringstream os;
  bool first = true;
  for (std::size_t l = 0; l < v; ++l)
    for (std::size_t j = 0; j < v; ++j) {
      const Rat& a = coeff(l, j);
      if (a.is_zero()) continue;
      os << (a.sign() < 0 ? "-" : (first ? "" : "+"));
      const Rat mag = a.sign() < 0 ? -a : a;
      if (mag != Rat(1)) os << mag;
      os << pname(l) << qname(j);
      first = false;
    }
  return first ? "0" : os.str();
}

struct ScanOptions {
  std::size_t samples = 1000;
  std::uint64_t seed = 0;
  long box = 10;
  std::vector<std::pair<Point, Point>> forced;  // evaluated first, count toward samples
};

struct LineWitness {
  Point P, Q;
  Rat det;
};

struct ScanReport {
  std::size_t samples = 0;
  std::size_t trivial = 0;
  std::size_t jumping = 0;
  std::size_t degenerate = 0;  // rejected draws with P ∧ Q = 0
  std::vector<LineWitness> witnesses;

  double fraction_trivial() const { return samples ? double(trivial) / double(samples) : 0.0; }
};

inline constexpr std::size_t kMaxLineWitnesses = 10;

/// Applies the splitting test to seeded random lines. Sample s draws from the
/// stream (seed, s), so each line is reproducible on its own.
inline ScanReport scan_lines(const FlatForm& f, const ScanOptions& opt) {
  ScanReport rep;
  auto record = [&](const Point& p, const Point& q) {
    auto v = splitting_type(f, p, q);
    ++rep.samples;
    if (v.verdict == Splitting::Trivial) {
      ++rep.trivial;
    } else {
      ++rep.jumping;
      if (rep.witnesses.size() < kMaxLineWitnesses) rep.witnesses.push_back({p, q, v.determinant});
    }
  };
  for (const auto& [p, q] : opt.forced) {
    if (rep.samples >= opt.samples) break;
    if (!spans_line(p, q)) {
      ++rep.degenerate;
      continue;
    }
    record(p, q);
  }
  for (std::uint64_t s = 0; rep.samples < opt.samples; ++s) {
    Rng rng(opt.seed, s);
    auto p = rng.point(f.dim_v(), opt.box);
    auto q = rng.point(f.dim_v(), opt.box);
    if (!spans_line(p, q)) {
      ++rep.degenerate;
      continue;
    }
    record(p, q);
  }
  return rep;
}

struct KroneckerReport {
  NondegStatus k1 = NondegStatus::Unknown;
  NondegStatus k2 = NondegStatus::Unknown;
  std::optional<DegeneracyWitness> k1_witness;  // v and a nonzero h with γ̂(v ⊗ h) = 0
  std::size_t samples = 0;
  std::size_t rank_gamma = 0;
  std::size_t expected_2c_plus_r = 0;
  std::size_t printed_2n_plus_r = 0;

  bool k1_ok() const { return k1 == NondegStatus::CertifiedFullRank || k1 == NondegStatus::SampledNoCounterexample; }
  bool k3_ok() const { return rank_gamma == expected_2c_plus_r; }
  bool k3_printed_ok() const { return rank_gamma == printed_2n_plus_r; }
};

/// (K1) injectivity of γ̂(v ⊗ -) for v ≠ 0, (K2) as its transpose dual, and
/// (K3) the rank of γ̂ against both 2c+r and the literal 2n+r.
inline KroneckerReport kronecker_conditions(const FlatForm& f, std::size_t r, std::size_t budget, std::uint64_t seed,
                                            long box = 10) {
  KroneckerReport rep;
  rep.rank_gamma = rank(f.M);
  rep.expected_2c_plus_r = 2 * f.c + r;
  rep.printed_2n_plus_r = 2 * f.n + r;

  if (rep.rank_gamma == f.order()) {
    rep.k1 = NondegStatus::CertifiedFullRank;
  } else {
    auto probe = [&](const Point& v) -> bool {
      auto ker = kernel_basis(slice_by_v(f, v));
      if (ker.empty()) return false;
      rep.k1_witness = DegeneracyWitness{primitive_integer(ker.front()), primitive_integer(v)};
      return true;
    };
    bool found = false;
    for (std::size_t j = 0; j <= f.n && !found; ++j) found = probe(detail::basis_vector(f.dim_v(), j));
    for (std::size_t s = 0; s < budget && !found; ++s) {
      Rng rng(seed, s);
      found = probe(rng.nonzero_point(f.dim_v(), box));
    }
    if (found) {
      rep.k1 = NondegStatus::CounterexampleFound;
    } else if (budget > 0) {
      rep.k1 = NondegStatus::SampledNoCounterexample;
      rep.samples = budget;
    }
  }
  rep.k2 = rep.k1;
  return rep;
}

}  // namespace oinst
