#include <doctest.h>

#include <cartankit/nonhomog.hpp>

#include "oracles.hpp"

using namespace cartan;

namespace {

ModelPoint line_point(const PuncturedModel& pm, const Rat& xm, const Rat& xm1) {
  std::vector<Rat> v(static_cast<std::size_t>(pm.m()) + 1);
  v[v.size() - 2] = xm;
  v[v.size() - 1] = xm1;
  return pm.model().point(std::move(v));
}

}  // namespace

TEST_CASE("punctured model basics") {
  CHECK_THROWS(PuncturedModel(1));
  const PuncturedModel pm(3);
  CHECK(pm.removed_first().coords() == std::vector<Rat>{Rat(0), Rat(0), Rat(1), Rat(0)});
  CHECK(pm.removed_second().coords() == std::vector<Rat>{Rat(0), Rat(0), Rat(0), Rat(1)});
  CHECK(pm.is_removed(pm.removed_first()));
  CHECK(pm.on_line(line_point(pm, Rat(1), Rat(2))));
  CHECK_FALSE(pm.on_line(pm.model().origin()));
}

TEST_CASE("allowed classification") {
  const PuncturedModel pm(3);
  const FlatModel& model = pm.model();
  CHECK(is_allowed(model.identity(), pm) == AllowedMode::Preserve);
  Mat swap = Mat::identity(4);
  swap(2, 2) = Rat(0);
  swap(3, 3) = Rat(0);
  swap(2, 3) = Rat(1);
  swap(3, 2) = Rat(1);
  CHECK(is_allowed(model.element(swap), pm) == AllowedMode::Swap);
  Mat generic = Mat::identity(4);
  generic(0, 2) = Rat(1);
  CHECK(is_allowed(model.element(generic), pm) == AllowedMode::No);
  CHECK_THROWS(make_allowed(model.element(generic), pm));
}

TEST_CASE("allowed automorphisms compose by parity") {
  Sampler rng(6);
  const PuncturedModel pm(4);
  for (int t = 0; t < 30; ++t) {
    const AllowedMode ma = t % 2 ? AllowedMode::Swap : AllowedMode::Preserve;
    const AllowedMode mb = t % 3 ? AllowedMode::Swap : AllowedMode::Preserve;
    const auto a = random_allowed_automorphism(pm, rng, ma);
    const auto b = random_allowed_automorphism(pm, rng, mb);
    CHECK(a.mode == ma);
    const AllowedMode expected = (ma == mb) ? AllowedMode::Preserve : AllowedMode::Swap;
    CHECK(is_allowed(a.element * b.element, pm) == expected);
    CHECK(is_allowed(a.element.inverse(), pm) == ma);
  }
}

TEST_CASE("line confinement") {
  const PuncturedModel pm(3);
  const ModelPoint w = line_point(pm, Rat(1), Rat(1));
  CHECK(line_confinement_check(make_allowed(pm.model().identity(), pm), w, pm));
  Sampler rng(19);
  for (int m = 2; m <= 4; ++m) {
    const PuncturedModel p(m);
    for (int t = 0; t < 100; ++t) {
      const auto g = random_allowed_automorphism(p, rng, t % 2 ? AllowedMode::Swap : AllowedMode::Preserve);
      const ModelPoint x = line_point(p, rng.nonzero_rational(), rng.nonzero_rational());
      CHECK(line_confinement_check(g, x, p));
    }
  }
  const auto swap = random_allowed_automorphism(pm, rng, AllowedMode::Swap);
  const ModelPoint img = act(swap.element, line_point(pm, Rat(1), Rat(2)));
  CHECK(pm.on_line(img));
  CHECK_THROWS(line_confinement_check(swap, pm.model().origin(), pm));
  CHECK_THROWS(line_confinement_check(swap, pm.removed_first(), pm));
}

TEST_CASE("off-line symmetries") {
  const PuncturedModel pm(3);
  const FlatModel& model = pm.model();
  const Symmetry at_origin = off_line_symmetry(model.origin(), pm, std::vector<Rat>{Rat(5), Rat(0), Rat(0)});
  Mat expected = -Mat::identity(4);
  expected(0, 0) = Rat(1);
  expected(0, 1) = Rat(5);
  CHECK(at_origin.element == model.element(expected));

  const ModelPoint x = model.point({Rat(1), Rat(1), Rat(0), Rat(0)});
  const Symmetry s = off_line_symmetry(x, pm);
  CHECK(s.center == x);
  CHECK(verify_symmetry(model, s).ok());
  CHECK(is_allowed(s.element, pm) == AllowedMode::Preserve);

  CHECK_THROWS(off_line_symmetry(pm.removed_first(), pm));
  CHECK_THROWS(off_line_symmetry(line_point(pm, Rat(1), Rat(2)), pm));
  CHECK_THROWS(off_line_symmetry(model.origin(), pm, std::vector<Rat>{Rat(0), Rat(1), Rat(0)}));

  Sampler rng(2);
  for (int m = 2; m <= 5; ++m) {
    const PuncturedModel p(m);
    for (int t = 0; t < 10; ++t) {
      auto v = rng.rational_vector(static_cast<std::size_t>(m) + 1);
      v[0] = rng.nonzero_rational();
      const ModelPoint y = p.model().point(v);
      auto w = rng.rational_vector(static_cast<std::size_t>(m));
      w[m - 2] = Rat(0);
      w[m - 1] = Rat(0);
      const Symmetry sy = off_line_symmetry(y, p, w);
      CHECK(verify_symmetry(p.model(), sy).ok());
      CHECK(is_allowed(sy.element, p) == AllowedMode::Preserve);
    }
  }
}

TEST_CASE("line symmetry worked example") {
  const PuncturedModel pm(3);
  const LineSymmetry ls = line_symmetry(line_point(pm, Rat(1), Rat(2)), pm);
  CHECK(ls.v == Rat(1));
  CHECK(ls.columns.a == Rat(0));
  CHECK(ls.columns.c == Rat(2));
  CHECK(ls.columns.b == Rat(1, 2));
  CHECK(ls.columns.d == Rat(0));
  CHECK(ls.columns == line_columns_closed_form(Rat(1), Rat(2), Rat(1)));
  CHECK(ls.mode == AllowedMode::Swap);
  CHECK(verify_symmetry(pm.model(), ls.symmetry).ok());
  CHECK(act(ls.symmetry.element, pm.removed_first()) == pm.removed_second());
  CHECK(ls.raw_product * ls.conjugator == ls.conjugator * origin_symmetry_with_row(pm, {Rat(0), Rat(1), Rat(0)}).matrix());
}

TEST_CASE("line symmetry closed form for random points") {
  Sampler rng(88);
  for (int m = 2; m <= 5; ++m) {
    const PuncturedModel pm(m);
    const auto k = static_cast<std::size_t>(m);
    for (int t = 0; t < 20; ++t) {
      const Rat xm = rng.nonzero_rational(), xm1 = rng.nonzero_rational();
      std::vector<Rat> rep(k + 1);
      rep[k - 1] = xm;
      rep[k] = xm1;
      const LineSymmetry ls = line_symmetry(rep, pm);
      CHECK(xm * ls.v == Rat(1));
      CHECK(ls.columns == line_columns_closed_form(xm, xm1, ls.v));
      CHECK(ls.symmetry.element == line_symmetry(line_point(pm, xm, xm1), pm).symmetry.element);
      for (std::size_t r = 0; r + 1 < k; ++r) {
        CHECK(ls.raw_product(r, k - 1).is_zero());
        CHECK(ls.raw_product(r, k).is_zero());
      }
      CHECK(ls.mode == AllowedMode::Swap);
      CHECK(verify_symmetry(pm.model(), ls.symmetry).ok());
      CHECK(act(ls.symmetry.element, pm.removed_second()) == pm.removed_first());
    }
  }
}

TEST_CASE("closed form as a polynomial identity in v") {
  // Substituting the raw product for generic v, not only v = 1/x_m.
  const PuncturedModel pm(3);
  const ModelPoint w = line_point(pm, Rat(3), Rat(-5, 2));
  const Mat g = line_conjugator(w, pm);
  const Rat xm = w.coords()[2], xm1 = w.coords()[3];
  for (const Rat& v : {Rat(0), Rat(1), Rat(-2, 7), Rat(5, 3)}) {
    const Mat raw = g * origin_symmetry_with_row(pm, {Rat(0), v, Rat(0)}).matrix() * mat_inverse(g);
    // origin_symmetry_with_row returns a normalized class; its first entry is
    // 1, which is also the raw matrix, so no rescaling is needed.
    CHECK(LineColumns{raw(2, 2), raw(2, 3), raw(3, 2), raw(3, 3)} == line_columns_closed_form(xm, xm1, v));
  }
}

TEST_CASE("W elimination certifies no preserving symmetry on the line") {
  Sampler rng(14);
  for (int m = 2; m <= 5; ++m) {
    const PuncturedModel pm(m);
    for (int t = 0; t < 10; ++t) {
      const ModelPoint w = line_point(pm, rng.nonzero_rational(), rng.nonzero_rational());
      const WElimination cert = eliminate_symmetry_family(line_conjugator(w, pm), pm);
      CHECK_FALSE(cert.preserve_solvable);
      CHECK(cert.swap_solvable);
      REQUIRE(cert.swap_witness);
      const Symmetry s{pm.model().element(line_conjugator(w, pm) *
                                          origin_symmetry_with_row(pm, *cert.swap_witness).matrix() *
                                          mat_inverse(line_conjugator(w, pm))),
                       w};
      CHECK(is_allowed(s.element, pm) == AllowedMode::Swap);
      CHECK(verify_symmetry(pm.model(), s).ok());
    }
  }
}

TEST_CASE("W elimination at an off-line point allows preserving symmetries") {
  const PuncturedModel pm(3);
  const WElimination cert = eliminate_symmetry_family(Mat::identity(4), pm);
  CHECK(cert.preserve_solvable);
  CHECK_FALSE(cert.swap_solvable);
}

TEST_CASE("homogeneity probe") {
  Sampler rng(33);
  const PuncturedModel pm(3);
  std::vector<AllowedAutomorphism> autos;
  for (int t = 0; t < 20; ++t)
    autos.push_back(random_allowed_automorphism(pm, rng, t % 2 ? AllowedMode::Swap : AllowedMode::Preserve));
  std::vector<ModelPoint> line, off;
  for (int t = 0; t < 5; ++t) {
    line.push_back(line_point(pm, rng.nonzero_rational(), rng.nonzero_rational()));
    off.push_back(pm.model().point({Rat(1), rng.rational(), rng.rational(), rng.rational()}));
  }
  const ProbeReport r = homogeneity_probe(pm, autos, line, off);
  CHECK(r.line_pairs == 100);
  CHECK(r.line_escapes == 0);
  CHECK(r.off_line_images_on_line == 0);
  CHECK(r.distinct_off_line_images > 1);
  CHECK(r.strata_separated());
  CHECK_FALSE(r.vacuous());
  CHECK(homogeneity_probe(pm, autos, {}, {}).vacuous());
}
