#include <doctest.h>

#include <cartankit/graded.hpp>
#include <cartankit/sampling.hpp>

#include "oracles.hpp"

using namespace cartan;

namespace {

Cochain2 random_cochain2(const AlgebraPtr& alg, Sampler& rng) {
  Cochain2 k(alg);
  for (std::size_t p = 0; p < k.pair_count(); ++p) {
    const auto [i, j] = k.pair_at(p);
    k.set(i, j, AlgElement(alg, rng.rational_vector(alg->dim(), 3, 3)));
  }
  return k;
}

std::vector<AlgebraPtr> algebras() {
  return {build_projective_algebra(2), build_projective_algebra(3), build_conformal_algebra(2, 1)};
}

}  // namespace

TEST_CASE("pair indexing is a bijection") {
  const auto alg = build_projective_algebra(4);
  Cochain2 k(alg);
  CHECK(k.pair_count() == 6);
  for (std::size_t p = 0; p < k.pair_count(); ++p) {
    const auto [i, j] = k.pair_at(p);
    CHECK(i < j);
    CHECK(k.pair_index(i, j) == p);
  }
}

TEST_CASE("cochain values are antisymmetric") {
  const auto alg = build_projective_algebra(2);
  Cochain2 k(alg);
  const AlgElement v = AlgElement::basis(alg, 3);
  k.set(1, 0, v);
  CHECK(k.value(0, 1) == -v);
  CHECK(k.value(1, 0) == v);
  CHECK(k.value(0, 0).is_zero());
  CHECK_THROWS(k.set(1, 1, v));
}

TEST_CASE("differential matches commutators on every basis cochain") {
  for (const auto& alg : algebras()) {
    const std::size_t k = alg->dim_of(-1);
    for (std::size_t r = 0; r < alg->dim(); ++r)
      for (std::size_t c = 0; c < k; ++c) {
        Mat values(alg->dim(), k);
        values(r, c) = Rat(1);
        const Cochain1 phi(alg, values);
        const Cochain2 d = differential(phi);
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j)
            if (i != j) CHECK(d.value(i, j).matrix() == oracle::brute_differential_value(phi, i, j));
      }
  }
}

TEST_CASE("codifferential matches the decomposable expansion on every basis element") {
  for (const auto& alg : algebras()) {
    Cochain2 probe(alg);
    for (std::size_t p = 0; p < probe.pair_count(); ++p) {
      const auto [i, j] = probe.pair_at(p);
      for (std::size_t b = 0; b < alg->dim(); ++b) {
        Cochain2 kappa(alg);
        kappa.set(i, j, AlgElement::basis(alg, b));
        const Cochain1 dstar = codifferential(kappa);
        const auto expected = oracle::brute_codifferential(kappa);
        for (std::size_t c = 0; c < alg->dim_of(-1); ++c) CHECK(dstar.on_basis(c).matrix() == expected[c]);
      }
    }
  }
}

TEST_CASE("codifferential of zero is zero and zero is normal and torsion free") {
  for (const auto& alg : algebras()) {
    const Cochain2 zero(alg);
    CHECK(codifferential(zero).values().is_zero());
    CHECK(is_normal(zero));
    CHECK(is_torsion_free(zero));
  }
}

TEST_CASE("codifferential is linear and matches the oracle on random cochains") {
  Sampler rng(21);
  for (const auto& alg : algebras()) {
    const Cochain2 a = random_cochain2(alg, rng), b = random_cochain2(alg, rng);
    CHECK(codifferential(a + b) == codifferential(a) + codifferential(b));
    const auto expected = oracle::brute_codifferential(a);
    const Cochain1 dstar = codifferential(a);
    for (std::size_t c = 0; c < alg->dim_of(-1); ++c) CHECK(dstar.on_basis(c).matrix() == expected[c]);
  }
}

TEST_CASE("torsion detection") {
  const auto alg = build_projective_algebra(2);
  Cochain2 k(alg);
  k.set(0, 1, AlgElement::basis(alg, alg->grade_range(1).first));
  CHECK(is_torsion_free(k));
  k.set(0, 1, AlgElement::basis(alg, 0));
  CHECK_FALSE(is_torsion_free(k));
}

TEST_CASE("curvature decomposition reassembles exactly") {
  Sampler rng(99);
  for (const auto& alg : algebras()) {
    for (int trial = 0; trial < 20; ++trial) {
      const Cochain2 k = random_cochain2(alg, rng);
      const CurvDecomp parts = decompose_curvature(k);
      CHECK(reassemble(parts) == k);
      CHECK(is_torsion_free(parts.weyl));
      CHECK(is_torsion_free(parts.cotton_york));
      for (std::size_t p = 0; p < k.pair_count(); ++p) {
        const auto [i, j] = k.pair_at(p);
        CHECK(parts.torsion.value(i, j).lies_in(-1));
        CHECK(parts.weyl.value(i, j).lies_in(0));
        CHECK(parts.cotton_york.value(i, j).lies_in(1));
      }
    }
  }
}

TEST_CASE("cochain1 validates its target grade") {
  const auto alg = build_projective_algebra(2);
  Mat values(alg->dim(), 2);
  values(0, 0) = Rat(1);
  CHECK_THROWS_AS(Cochain1(alg, values, 1), DimensionMismatch);
  CHECK_NOTHROW(Cochain1(alg, values, -1));
}
