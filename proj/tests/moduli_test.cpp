#include "support.hpp"

#include <gtest/gtest.h>

using namespace oinst;
using namespace oinst::testing;

namespace {

// Dimension of the span of all E_ik ⊗ E_jl flattenings, i.e. of Λ²H ⊗ Λ²V.
std::size_t wedge_space_dim(std::size_t c, std::size_t n) {
  const std::size_t dv = n + 1, order = c * dv;
  std::vector<RatVector> vecs;
  for (std::size_t i = 0; i < c; ++i)
    for (std::size_t k = i + 1; k < c; ++k)
      for (std::size_t j = 0; j < dv; ++j)
        for (std::size_t l = j + 1; l < dv; ++l) {
          RatMatrix B(c, c), C(dv, dv);
          B(i, k) = 1;
          B(k, i) = -1;
          C(j, l) = 1;
          C(l, j) = -1;
          const auto f = flatten({c, n, {{B, C}}});
          vecs.emplace_back(f.M.data().begin(), f.M.data().end());
        }
  RatMatrix m(vecs.size(), order * order);
  for (std::size_t r = 0; r < vecs.size(); ++r)
    for (std::size_t s = 0; s < order * order; ++s) m(r, s) = vecs[r][s];
  return rank(m);
}

// Rank of the infinitesimal action X ↦ Σ (X B_t + B_t Xᵀ) ⊗ C_t at f.
std::size_t orbit_tangent_rank(const TensorSpec& spec) {
  const std::size_t c = spec.c, order = c * (spec.n + 1);
  RatMatrix m(c * c, order * order);
  for (std::size_t a = 0; a < c; ++a)
    for (std::size_t b = 0; b < c; ++b) {
      RatMatrix X(c, c);
      X(a, b) = 1;
      TensorSpec d{c, spec.n, {}};
      for (const auto& t : spec.terms) d.terms.push_back({X * t.B + t.B * X.transpose(), t.C});
      const auto f = flatten(d);
      for (std::size_t s = 0; s < order * order; ++s) m(a * c + b, s) = f.M.data()[s];
    }
  return rank(m);
}

}  // namespace

TEST(ModuliDim, Values) {
  EXPECT_EQ(moduli_dim(6, 3).dim, 54);
  EXPECT_EQ(moduli_dim(5, 3).dim, 35);
  EXPECT_EQ(moduli_dim(3, 3).dim, 9);
  EXPECT_EQ(moduli_dim(4, 4).dim, 44);
  EXPECT_EQ(moduli_dim(6, 3).ambient_dim, 90);
  EXPECT_EQ(moduli_dim(6, 3).group_dim, 36);
  EXPECT_FALSE(moduli_dim(3, 3).possibly_empty());
}

TEST(ModuliDim, HypothesisViolation) {
  for (auto [c, n] : {std::pair<std::size_t, std::size_t>{2, 3}, {6, 2}, {1, 1}}) {
    try {
      moduli_dim(c, n);
      FAIL();
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::HypothesisViolation);
      EXPECT_NE(std::string(e.what()).find("c >= 3"), std::string::npos);
    }
  }
}

TEST(ModuliDim, AmbientMatchesSpanOfPureTensors) {
  for (std::size_t c = 3; c <= 5; ++c)
    for (std::size_t n = 3; n <= 4; ++n) EXPECT_EQ(static_cast<long long>(wedge_space_dim(c, n)), moduli_dim(c, n).ambient_dim);
}

TEST(ModuliDim, GroupActsWithFiniteStabilizer) {
  // At a generic point the tangent map from gl(H) is injective, so the
  // orbit has dimension c² and the quotient has the stated dimension.
  for (std::size_t c = 3; c <= 5; ++c) {
    Rng rng(111, c);
    const auto spec = random_spec(c, 3, 6, rng, 3);  // 6 = dim Λ²V, so the image is generic
    EXPECT_EQ(static_cast<long long>(orbit_tangent_rank(spec)), moduli_dim(c, 3).group_dim) << c;
  }
}

TEST(ModuliDim, ClosedFormOverGrid) {
  for (std::size_t c = 3; c <= 16; ++c)
    for (std::size_t n = 3; n <= 16; ++n) {
      const auto m = moduli_dim(c, n);
      const long long want = static_cast<long long>(binomial(c, 2) * binomial(n + 1, 2)) - static_cast<long long>(c * c);
      EXPECT_EQ(m.dim, want);
      EXPECT_EQ(m.dim, m.ambient_dim - m.group_dim);
    }
}

TEST(RandomUnimodular, DeterminantOne) {
  for (std::uint64_t s = 0; s < 200; ++s) {
    Rng rng(121, s);
    const RatMatrix h = random_unimodular(2 + s % 5, rng);
    EXPECT_EQ(det(h), Rat(1));
  }
}

TEST(OrbitProbe, C6P3) {
  const auto rep = orbit_probe(example_form("c6p3"), 25, 0);
  EXPECT_TRUE(rep.ok()) << (rep.violations.empty() ? "" : rep.violations.front());
  EXPECT_EQ(rep.trials, 25u);
  EXPECT_EQ(rep.panel_lines, 20u);
}

TEST(OrbitProbe, ZeroAndNonWedgeForms) {
  EXPECT_TRUE(orbit_probe(FlatForm::zero(3, 3), 10, 1).ok());
  const RatMatrix S = rat({{1, 2}, {2, 3}});
  EXPECT_TRUE(orbit_probe(FlatForm::raw(2, 1, kron(S, S)), 10, 2).ok());
}
