#pragma once

#include <oinst/error.hpp>
#include <oinst/kronecker.hpp>
#include <oinst/linalg.hpp>
#include <oinst/random.hpp>
#include <oinst/tensor.hpp>

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace oinst {

struct ModuliInfo {
  std::size_t c = 0, n = 0;
  long long ambient_dim = 0;  // dim Λ²H_c^∨ ⊗ Λ²V^∨
  long long group_dim = 0;    // dim GL(H_c)
  long long dim = 0;

  bool possibly_empty() const { return dim < 0; }
};

/// Dimension of the moduli space of maximal-rank orthogonal instantons with
/// no global sections: C(c,2) C(n+1,2) - c².
inline ModuliInfo moduli_dim(std::size_t c, std::size_t n) {
  if (c < 3 || n < 3)
    throw Error(ErrorKind::HypothesisViolation, "moduli dimension requires c >= 3 and n >= 3 (got c = " + std::to_string(c) +
                                                    ", n = " + std::to_string(n) + ")");
  ModuliInfo m;
  m.c = c;
  m.n = n;
  const auto cc = static_cast<long long>(c), vv = static_cast<long long>(n + 1);
  m.ambient_dim = (cc * (cc - 1) / 2) * (vv * (vv - 1) / 2);
  m.group_dim = cc * cc;
  m.dim = m.ambient_dim - m.group_dim;
  return m;
}

/// Unimodular integer matrix: a seeded product of elementary row operations
/// with multipliers in [-3, 3], so the inverse is exact and integral.
inline RatMatrix random_unimodular(std::size_t c, Rng& rng, std::size_t steps = 0) {
  RatMatrix h = RatMatrix::identity(c);
  if (c < 2) return h;
  if (steps == 0) steps = 3 * c;
  for (std::size_t s = 0; s < steps; ++s) {
    const auto i = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(c) - 1));
    auto j = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(c) - 2));
    if (j >= i) ++j;
    const Rat a = rng.uniform(-3, 3);
    if (a.is_zero()) continue;
    for (std::size_t t = 0; t < c; ++t) h(i, t) += a * h(j, t);
  }
  return h;
}

struct OrbitProbeReport {
  std::size_t trials = 0;
  std::size_t panel_lines = 0;
  std::vector<std::string> violations;

  bool ok() const { return violations.empty(); }
};

/// Checks the invariants every GL(H_c)-orbit must share: rank, wedge
/// membership, the splitting verdict on a fixed line panel, congruence
/// equivariance of γ, and the isotropy identities for ±Id.
inline OrbitProbeReport orbit_probe(const FlatForm& f, std::size_t trials, std::uint64_t seed, std::size_t panel = 20) {
  OrbitProbeReport rep;
  rep.trials = trials;
  const RatMatrix id = RatMatrix::identity(f.c);
  if (act(id, f).M != f.M) rep.violations.push_back("act(Id, F) != F");
  if (act(-id, f).M != f.M) rep.violations.push_back("act(-Id, F) != F");

  std::vector<std::pair<Point, Point>> lines;
  for (std::uint64_t s = 0; lines.size() < panel; ++s) {
    Rng rng(seed ^ 0x5eedULL, s);
    auto p = rng.point(f.dim_v(), 10);
    auto q = rng.point(f.dim_v(), 10);
    if (spans_line(p, q)) lines.emplace_back(std::move(p), std::move(q));
  }
  rep.panel_lines = lines.size();

  const std::size_t base_rank = rank(f.M);
  const bool base_wedge = wedge_membership(f);
  std::vector<Splitting> base_verdicts;
  std::vector<RatMatrix> base_gammas;
  for (const auto& [p, q] : lines) {
    auto v = splitting_type(f, p, q);
    base_verdicts.push_back(v.verdict);
    base_gammas.push_back(std::move(v.gamma));
  }

  for (std::size_t t = 0; t < trials; ++t) {
    Rng rng(seed, t);
    const RatMatrix h = random_unimodular(f.c, rng);
    const FlatForm g = act(h, f);
    const std::string tag = "trial " + std::to_string(t) + ": ";
    if (rank(g.M) != base_rank) rep.violations.push_back(tag + "rank changed");
    if (wedge_membership(g) != base_wedge) rep.violations.push_back(tag + "wedge membership changed");
    const RatMatrix ht = h.transpose();
    for (std::size_t l = 0; l < lines.size(); ++l) {
      auto v = splitting_type(g, lines[l].first, lines[l].second);
      if (v.verdict != base_verdicts[l]) rep.violations.push_back(tag + "verdict changed on panel line " + std::to_string(l));
      if (v.gamma != h * base_gammas[l] * ht) rep.violations.push_back(tag + "gamma not equivariant on panel line " + std::to_string(l));
    }
  }
  return rep;
}

}  // namespace oinst
