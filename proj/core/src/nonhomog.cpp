#include "cartankit/nonhomog.hpp"

#include <set>
#include <stdexcept>

#include "cartankit/parallel.hpp"

namespace cartan {

namespace {

ModelPoint basis_point(const FlatModel& model, std::size_t i) {
  std::vector<Rat> v(model.tag().matrix_size());
  v[i] = Rat(1);
  return model.point(std::move(v));
}

bool column_is(const Mat& a, std::size_t col, std::size_t row) {
  for (std::size_t r = 0; r < a.rows(); ++r)
    if (a(r, col).is_zero() != (r != row)) return false;
  return true;
}

}  // namespace

PuncturedModel::PuncturedModel(int m) : m_(m), model_(FlatModel::projective(m >= 2 ? m : 2)) {
  if (m < 2) throw std::invalid_argument("punctured model needs m >= 2");
  const auto k = static_cast<std::size_t>(m);
  removed_ = {basis_point(model_, k - 1), basis_point(model_, k)};
}

bool PuncturedModel::is_removed(const ModelPoint& x) const { return x == removed_[0] || x == removed_[1]; }

bool PuncturedModel::on_line(const ModelPoint& x) const {
  for (std::size_t i = 0; i + 1 < static_cast<std::size_t>(m_); ++i)
    if (!x.coords()[i].is_zero()) return false;
  return true;
}

bool PuncturedModel::is_generic_line_point(const ModelPoint& x) const {
  const auto k = static_cast<std::size_t>(m_);
  return on_line(x) && !x.coords()[k - 1].is_zero() && !x.coords()[k].is_zero();
}

const char* to_string(AllowedMode mode) {
  switch (mode) {
    case AllowedMode::Preserve: return "preserve";
    case AllowedMode::Swap: return "swap";
    case AllowedMode::No: break;
  }
  return "no";
}

AllowedMode is_allowed(const GroupElement& g, const PuncturedModel& pm) {
  const Mat& a = g.matrix();
  const auto k = static_cast<std::size_t>(pm.m());
  if (column_is(a, k - 1, k - 1) && column_is(a, k, k)) return AllowedMode::Preserve;
  if (column_is(a, k - 1, k) && column_is(a, k, k - 1)) return AllowedMode::Swap;
  return AllowedMode::No;
}

AllowedAutomorphism make_allowed(const GroupElement& g, const PuncturedModel& pm) {
  const AllowedMode mode = is_allowed(g, pm);
  if (mode == AllowedMode::No) throw std::invalid_argument("element does not preserve the removed points");
  return {g, mode};
}

AllowedAutomorphism random_allowed_automorphism(const PuncturedModel& pm, Sampler& rng, AllowedMode mode) {
  if (mode == AllowedMode::No) throw std::invalid_argument("random_allowed_automorphism: mode must be allowed");
  const auto k = static_cast<std::size_t>(pm.m());
  for (;;) {
    Mat a(k + 1, k + 1);
    for (std::size_t r = 0; r <= k; ++r)
      for (std::size_t c = 0; c + 1 < k; ++c) a(r, c) = rng.rational(3, 3);
    const bool swap = mode == AllowedMode::Swap;
    a(swap ? k : k - 1, k - 1) = rng.nonzero_rational(3, 3);
    a(swap ? k - 1 : k, k) = rng.nonzero_rational(3, 3);
    if (determinant(a).is_zero()) continue;
    return make_allowed(pm.model().element(std::move(a)), pm);
  }
}

bool line_confinement_check(const AllowedAutomorphism& g, const ModelPoint& w, const PuncturedModel& pm) {
  if (!pm.is_generic_line_point(w))
    throw std::invalid_argument("line_confinement_check: point is not on the line with both coordinates nonzero");
  return pm.on_line(act(g.element, w));
}

GroupElement origin_symmetry_with_row(const PuncturedModel& pm, const std::vector<Rat>& w_row) {
  const auto k = static_cast<std::size_t>(pm.m());
  if (w_row.size() != k) throw std::invalid_argument("W row must have m entries");
  Mat s = -Mat::identity(k + 1);
  s(0, 0) = Rat(1);
  for (std::size_t j = 0; j < k; ++j) s(0, j + 1) = w_row[j];
  return pm.model().element(std::move(s));
}

Symmetry off_line_symmetry(const ModelPoint& x, const PuncturedModel& pm, const std::optional<std::vector<Rat>>& w_row) {
  if (pm.is_removed(x) || pm.on_line(x))
    throw std::invalid_argument("off_line_symmetry: point lies on the line of removed points");
  const auto k = static_cast<std::size_t>(pm.m());
  std::vector<Rat> row = w_row ? *w_row : std::vector<Rat>(k);
  if (row.size() != k || !row[k - 2].is_zero() || !row[k - 1].is_zero())
    throw std::invalid_argument("off_line_symmetry: W must have m entries with the last two zero");

  const auto& v = x.coords();
  std::size_t r = 0;
  while (v[r].is_zero()) ++r;
  Mat g(k + 1, k + 1);
  for (std::size_t i = 0; i <= k; ++i) g(i, 0) = v[i];
  std::size_t col = 1;
  for (std::size_t j = 0; j + 1 < k; ++j)
    if (j != r) g(j, col++) = Rat(1);
  g(k - 1, k - 1) = Rat(1);
  g(k, k) = Rat(1);
  const GroupElement h = pm.model().element(std::move(g));
  return transport({origin_symmetry_with_row(pm, row), pm.model().origin()}, h);
}

LineColumns line_columns_closed_form(const Rat& xm, const Rat& xm1, const Rat& v) {
  const Rat t = xm * v;
  return {t - Rat(1), xm / xm1 * (Rat(2) - t), xm1 * v, Rat(1) - t};
}

Mat line_conjugator(const ModelPoint& w, const PuncturedModel& pm) { return line_conjugator(w.coords(), pm); }

Mat line_conjugator(const std::vector<Rat>& representative, const PuncturedModel& pm) {
  const auto k = static_cast<std::size_t>(pm.m());
  if (representative.size() != k + 1 || !pm.is_generic_line_point(pm.model().point(representative)))
    throw std::invalid_argument("line point must have both line coordinates nonzero");
  Mat g(k + 1, k + 1);
  for (std::size_t i = 0; i <= k; ++i) g(i, 0) = representative[i];
  for (std::size_t j = 1; j < k; ++j) g(j, j) = Rat(1);
  g(0, k) = Rat(1);
  return g;
}

LineSymmetry line_symmetry(const ModelPoint& w, const PuncturedModel& pm, const std::optional<std::vector<Rat>>& w_row) {
  return line_symmetry(w.coords(), pm, w_row);
}

LineSymmetry line_symmetry(const std::vector<Rat>& representative, const PuncturedModel& pm,
                           const std::optional<std::vector<Rat>>& w_row) {
  const Mat g = line_conjugator(representative, pm);
  const ModelPoint w = pm.model().point(representative);
  const auto k = static_cast<std::size_t>(pm.m());
  const Rat v = representative[k - 1].inverse();
  std::vector<Rat> row = w_row ? *w_row : std::vector<Rat>(k);
  if (row.size() != k) throw std::invalid_argument("line_symmetry: W must have m entries");
  row[k - 2] = v;  // column k-1 of s(W)

  const GroupElement s = origin_symmetry_with_row(pm, row);
  const Mat raw = g * s.matrix() * mat_inverse(g);
  LineSymmetry out{
      {pm.model().element(raw), w}, g, raw, v, {raw(k - 1, k - 1), raw(k - 1, k), raw(k, k - 1), raw(k, k)}};
  out.mode = is_allowed(out.symmetry.element, pm);
  return out;
}

WElimination eliminate_symmetry_family(const Mat& conjugator, const PuncturedModel& pm) {
  const auto k = static_cast<std::size_t>(pm.m());
  const Mat ginv = mat_inverse(conjugator);
  const Mat base = conjugator * origin_symmetry_with_row(pm, std::vector<Rat>(k)).matrix() * ginv;
  std::vector<Mat> dirs;
  for (std::size_t j = 1; j <= k; ++j) dirs.push_back(conjugator * Mat::unit(k + 1, k + 1, 0, j) * ginv);

  // Entries (r, c) for c in {k-1, k} and r outside the allowed row vanish.
  auto solve = [&](std::size_t row_for_km1, std::size_t row_for_k) {
    std::vector<std::pair<std::size_t, std::size_t>> zeros;
    for (std::size_t r = 0; r <= k; ++r) {
      if (r != row_for_km1) zeros.emplace_back(r, k - 1);
      if (r != row_for_k) zeros.emplace_back(r, k);
    }
    Mat a(zeros.size(), k);
    Mat b(zeros.size(), 1);
    for (std::size_t e = 0; e < zeros.size(); ++e) {
      const auto [r, c] = zeros[e];
      for (std::size_t j = 0; j < k; ++j) a(e, j) = dirs[j](r, c);
      b(e, 0) = -base(r, c);
    }
    return std::pair{solve_linear(a, b), rank(a)};
  };

  WElimination out;
  auto [pres, prank] = solve(k - 1, k);
  auto [swap, srank] = solve(k, k - 1);
  out.preserve_rank = prank;
  out.swap_rank = srank;
  out.preserve_solvable = pres.has_value();
  if (swap) {
    std::vector<Rat> wv = swap->particular.column_vector(0);
    Mat e = base;
    for (std::size_t j = 0; j < k; ++j) e += wv[j] * dirs[j];
    // The pattern entries are nonzero along the whole solution family in
    // the generic case; check the particular solution.
    if (!e(k, k - 1).is_zero() && !e(k - 1, k).is_zero() && !determinant(e).is_zero()) {
      out.swap_solvable = true;
      out.swap_witness = std::move(wv);
    }
  }
  return out;
}

ProbeReport homogeneity_probe(const PuncturedModel& pm, const std::vector<AllowedAutomorphism>& automorphisms,
                              const std::vector<ModelPoint>& line_points,
                              const std::vector<ModelPoint>& off_line_points) {
  struct Partial {
    std::size_t line_escapes = 0;
    std::size_t on_line = 0;
    std::vector<ModelPoint> images;
  };
  auto parts = parallel_map(automorphisms.size(), [&](std::size_t i) {
    Partial p;
    const GroupElement& g = automorphisms[i].element;
    for (const auto& w : line_points)
      if (!pm.on_line(act(g, w))) ++p.line_escapes;
    for (const auto& x : off_line_points) {
      ModelPoint y = act(g, x);
      if (pm.on_line(y))
        ++p.on_line;
      else
        p.images.push_back(std::move(y));
    }
    return p;
  });
  ProbeReport report;
  report.automorphisms = automorphisms.size();
  report.line_pairs = automorphisms.size() * line_points.size();
  report.off_line_pairs = automorphisms.size() * off_line_points.size();
  std::set<ModelPoint> distinct;
  for (auto& p : parts) {
    report.line_escapes += p.line_escapes;
    report.off_line_images_on_line += p.on_line;
    for (auto& y : p.images) distinct.insert(std::move(y));
  }
  report.distinct_off_line_images = distinct.size();
  return report;
}

}  // namespace cartan
