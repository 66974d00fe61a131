#include "cli/run.hpp"

#include <CLI11.hpp>

#include <cartankit/nonhomog.hpp>
#include <cartankit/parallel.hpp>
#include <cartankit/sample_sets.hpp>

#include <algorithm>
#include <iostream>

namespace cartan::cli {

namespace {

constexpr std::size_t kMaxWitnesses = 5;

json describe_system(const SymmetrySystem& sys) {
  json d = {{"model", encode(sys.model().tag())}};
  if (const auto* rule = sys.conjugation_rule()) {
    d["rule"] = "conjugation";
    d["base"] = encode(rule->base);
    d["frame"] = encode(rule->frame);
  } else {
    d["rule"] = "table";
    d["entries"] = sys.table_rule()->entries.size();
  }
  return d;
}

std::vector<Symmetry> declared_symmetries(const SymmetrySystem& sys) {
  if (const auto* rule = sys.conjugation_rule()) return {rule->base};
  return sys.table_rule()->entries;
}

RunResult flat_symmetries(const RunConfig& cfg) {
  const FlatModel model(cfg.model == "projective" ? ModelTag::projective(cfg.m) : ModelTag::conformal(cfg.p, cfg.q));
  const auto fam = enumerate_origin_symmetries(model);
  const bool unique = fam.g0_class.has_value() && fam.solution_space_dim == 1;
  json doc = {{"model", encode(model.tag())},
              {"z_dim", fam.z_dim},
              {"solution_space_dim", fam.solution_space_dim},
              {"unique", unique},
              {"family", "g0 exp(Z), Z in g_1"}};
  if (!fam.g0_class) {
    doc["g0_class"] = nullptr;
    return {1, doc};
  }
  doc["g0_class"] = encode(*fam.g0_class);

  Sampler rng(cfg.seed);
  std::vector<std::vector<Rat>> zs;
  for (std::size_t i = 0; i < cfg.samples; ++i) zs.push_back(rng.rational_vector(model.dimension()));
  const auto reports = parallel_map(zs.size(), [&](std::size_t i) {
    return verify_symmetry(model, {*fam.g0_class * model.exp_plus(zs[i]), model.origin()}).ok();
  });
  json failures = json::array();
  for (std::size_t i = 0; i < reports.size(); ++i)
    if (!reports[i] && failures.size() < kMaxWitnesses) failures.push_back({{"Z", encode(zs[i])}});
  const auto bad = static_cast<std::size_t>(std::count(reports.begin(), reports.end(), false));
  doc["verification"] = {{"sampled_Z", zs.size()}, {"failures", bad}, {"witnesses", failures}};
  return {unique && bad == 0 ? 0 : 1, doc};
}

RunResult check_system(const RunConfig& cfg) {
  const SymmetrySystem sys = decode_system(load_json_file(cfg.system_path));
  const FlatModel& model = sys.model();
  bool ok = true;

  json declared = json::array();
  for (const auto& s : declared_symmetries(sys)) {
    const auto r = verify_symmetry(model, s);
    ok &= r.ok();
    declared.push_back({{"center", encode(s.center)},
                        {"fixes_center", r.fixes_center},
                        {"differential_is_minus_identity", r.differential_is_minus_identity},
                        {"involutive", r.involutive}});
  }

  const Sampler root(cfg.seed);
  Sampler pair_rng = root.split(1);
  const LoosSampleSet set = sample_loos_pairs(sys, pair_rng, cfg.samples);
  const AxiomReport report = check_loos_axioms(sys, set.pairs);
  ok &= report.ok();
  json witnesses = json::array();
  for (const auto& f : report.failures) {
    if (witnesses.size() >= kMaxWitnesses) break;
    json w = {{"sample_index", f.sample_index},
              {"x", encode(f.x)},
              {"y", encode(f.y)},
              {"fixes_center", f.fixes_center},
              {"involutive_on_y", f.involutive_on_y},
              {"composition", f.composition}};
    if (f.lhs) w["lhs"] = encode(*f.lhs);
    if (f.rhs) w["rhs"] = encode(*f.rhs);
    witnesses.push_back(std::move(w));
  }

  json doubling = {{"applicable", sys.conjugation_rule() != nullptr}};
  if (sys.conjugation_rule()) {
    Sampler point_rng = root.split(2);
    std::vector<ModelPoint> points;
    const std::size_t count = std::min<std::size_t>(cfg.samples, 10);
    for (std::size_t i = 0; i < count; ++i)
      points.push_back(sys.point_at_frame_coordinates(point_rng.rational_vector(model.dimension())));
    const Mat two = Rat(2) * Mat::identity(model.dimension());
    const auto jacs = parallel_map(points.size(), [&](std::size_t i) { return tangent_doubling_check(sys, points[i]); });
    std::size_t bad = 0;
    json dwit = json::array();
    for (std::size_t i = 0; i < jacs.size(); ++i) {
      if (jacs[i] == two) continue;
      ++bad;
      if (dwit.size() < kMaxWitnesses) dwit.push_back({{"x0", encode(points[i])}, {"jacobian", encode(jacs[i])}});
    }
    ok &= bad == 0;
    doubling["points"] = points.size();
    doubling["failures"] = bad;
    doubling["witnesses"] = dwit;
  }

  json doc = {{"system", describe_system(sys)},
              {"declared_symmetries", declared},
              {"loos",
               {{"pairs_checked", report.pairs_checked},
                {"skipped", set.rejected},
                {"fixes_center_failures", report.fixes_center_failures},
                {"involution_failures", report.involution_failures},
                {"composition_failures", report.composition_failures},
                {"witnesses", witnesses}}},
              {"tangent_doubling", doubling},
              {"verified", ok}};
  return {ok ? 0 : 1, doc};
}

json encode_violations(const CheckReport& r) {
  json out = json::array();
  for (const auto& v : r.violations) {
    if (out.size() >= kMaxWitnesses) break;
    out.push_back({{"sample_index", v.sample_index}, {"x", encode(v.x)}, {"u0", encode(v.u0)}, {"residual", encode(v.residual)}});
  }
  return out;
}

RunResult invariant_weyl(const RunConfig& cfg) {
  const SymmetrySystem sys = decode_system(load_json_file(cfg.system_path));
  Sampler rng = Sampler(cfg.seed).split(3);
  const WeylSampleSet set = sample_weyl_pairs(sys, rng, cfg.samples);
  std::vector<Frame> frames;
  for (const auto& s : set.samples) frames.push_back(s.u0);
  const InvariantGaugeResult result = invariant_gauge(sys, frames, set.samples);
  const CheckReport dist = distributivity_identity_check(sys, set.samples);

  json ups = json::array();
  for (std::size_t i = 0; i < std::min<std::size_t>(frames.size(), 10); ++i)
    ups.push_back({{"frame", encode(frames[i])}, {"upsilon", encode(result.upsilon(frames[i]))}});

  const bool invariant = result.verdict == GaugeVerdict::Invariant;
  json doc = {{"system", describe_system(sys)},
              {"verdict", invariant ? "Invariant" : "FiberwiseOnly"},
              {"vacuous", result.vacuous()},
              {"pairs_checked", result.report.checked},
              {"skipped", set.rejected},
              {"upsilon_samples", ups},
              {"witnesses", encode_violations(result.report)},
              {"distributivity",
               {{"checked", dist.checked}, {"violations", dist.violations.size()}, {"witnesses", encode_violations(dist)}}}};
  return {invariant && dist.ok() ? 0 : 1, doc};
}

RunResult example_nonhomog(const RunConfig& cfg) {
  if (cfg.m < 2) throw InputError("example-nonhomog needs m >= 2");
  const PuncturedModel pm(cfg.m);
  const auto k = static_cast<std::size_t>(cfg.m);
  const Sampler root(cfg.seed);

  // Line points from explicit representatives (x_m, x_{m+1}).
  Sampler line_rng = root.split(1);
  std::vector<std::vector<Rat>> reps;
  for (std::size_t i = 0; i < cfg.samples; ++i) {
    std::vector<Rat> rep(k + 1);
    rep[k - 1] = line_rng.nonzero_rational();
    rep[k] = line_rng.nonzero_rational();
    reps.push_back(std::move(rep));
  }
  struct LineCheck {
    std::vector<Rat> residuals;  // 4 closed-form entries, then x_m v - 1
    bool pattern_ok, swaps, verified, preserve_excluded, swap_found;
  };
  const auto checks = parallel_map(reps.size(), [&](std::size_t i) {
    const LineSymmetry ls = line_symmetry(reps[i], pm);
    const Rat xm = reps[i][k - 1], xm1 = reps[i][k];
    const LineColumns cf = line_columns_closed_form(xm, xm1, ls.v);
    LineCheck c;
    c.residuals = {ls.columns.a - cf.a, ls.columns.b - cf.b, ls.columns.c - cf.c, ls.columns.d - cf.d,
                   xm * ls.v - Rat(1)};
    c.pattern_ok = ls.mode == AllowedMode::Swap;
    c.swaps = act(ls.symmetry.element, pm.removed_first()) == pm.removed_second();
    c.verified = verify_symmetry(pm.model(), ls.symmetry).ok();
    const WElimination cert = eliminate_symmetry_family(ls.conjugator, pm);
    c.preserve_excluded = !cert.preserve_solvable;
    c.swap_found = cert.swap_solvable;
    return c;
  });
  std::size_t nonzero = 0, bad_pattern = 0, no_swap = 0, unverified = 0, preserve_found = 0, swap_missing = 0;
  json residuals = json::array();
  for (const auto& c : checks) {
    residuals.push_back(encode(c.residuals));
    nonzero += static_cast<std::size_t>(std::count_if(c.residuals.begin(), c.residuals.end(), [](const Rat& r) { return !r.is_zero(); }));
    bad_pattern += !c.pattern_ok;
    no_swap += !c.swaps;
    unverified += !c.verified;
    preserve_found += !c.preserve_excluded;
    swap_missing += !c.swap_found;
  }

  // Line confinement over random allowed automorphisms.
  Sampler auto_rng = root.split(2);
  const std::size_t n_auto = 10 * cfg.samples;
  std::vector<AllowedAutomorphism> autos;
  std::vector<ModelPoint> targets;
  for (std::size_t i = 0; i < n_auto; ++i) {
    autos.push_back(random_allowed_automorphism(pm, auto_rng, i % 2 ? AllowedMode::Swap : AllowedMode::Preserve));
    std::vector<Rat> w(k + 1);
    w[k - 1] = auto_rng.nonzero_rational();
    w[k] = auto_rng.nonzero_rational();
    targets.push_back(pm.model().point(std::move(w)));
  }
  const auto confined = parallel_map(n_auto, [&](std::size_t i) { return line_confinement_check(autos[i], targets[i], pm); });
  const auto escapes = static_cast<std::size_t>(std::count(confined.begin(), confined.end(), false));

  // Homogeneity probe on a smaller grid.
  Sampler probe_rng = root.split(3);
  const std::size_t grid = std::min<std::size_t>(cfg.samples, 20);
  std::vector<AllowedAutomorphism> probe_autos(autos.begin(), autos.begin() + static_cast<std::ptrdiff_t>(std::min(grid, autos.size())));
  std::vector<ModelPoint> line_points, off_points;
  for (std::size_t i = 0; i < grid; ++i) {
    line_points.push_back(targets[i]);
    auto v = probe_rng.rational_vector(k + 1);
    v[0] = probe_rng.nonzero_rational();
    off_points.push_back(pm.model().point(std::move(v)));
  }
  const ProbeReport probe = homogeneity_probe(pm, probe_autos, line_points, off_points);

  json witnesses = json::array();
  if (!reps.empty()) {
    const LineSymmetry ls = line_symmetry(reps.front(), pm);
    witnesses.push_back({{"kind", "line"},
                         {"representative", encode(reps.front())},
                         {"v", encode(ls.v)},
                         {"mode", to_string(ls.mode)},
                         {"symmetry", encode(ls.symmetry)},
                         {"raw_product", encode(ls.raw_product)}});
  }
  if (!off_points.empty()) {
    const Symmetry s = off_line_symmetry(off_points.front(), pm);
    witnesses.push_back({{"kind", "off_line"}, {"mode", to_string(is_allowed(s.element, pm))}, {"symmetry", encode(s)}});
  }

  const bool ok = nonzero == 0 && bad_pattern == 0 && no_swap == 0 && unverified == 0 && preserve_found == 0 &&
                  swap_missing == 0 && escapes == 0 && probe.strata_separated();
  json doc = {{"m", cfg.m},
              {"seed", cfg.seed},
              {"column_residuals", {{"samples", reps.size()}, {"nonzero", nonzero}, {"values", residuals}}},
              {"line_symmetries",
               {{"not_swap_pattern", bad_pattern}, {"not_swapping_removed_points", no_swap}, {"failed_verification", unverified}}},
              {"w_elimination", {{"preserve_solvable", preserve_found}, {"swap_unsolvable", swap_missing}}},
              {"line_confinement", {{"automorphisms", n_auto}, {"escapes", escapes}}},
              {"homogeneity_probe",
               {{"automorphisms", probe.automorphisms},
                {"line_pairs", probe.line_pairs},
                {"line_escapes", probe.line_escapes},
                {"off_line_pairs", probe.off_line_pairs},
                {"off_line_images_on_line", probe.off_line_images_on_line},
                {"distinct_off_line_images", probe.distinct_off_line_images},
                {"vacuous", probe.vacuous()}}},
              {"witness_symmetries", witnesses},
              {"verified", ok}};
  return {ok ? 0 : 1, doc};
}

RunResult normality_check(const RunConfig& cfg) {
  const Cochain2 kappa = decode_cochain2(load_json_file(cfg.cochain_path));
  const CurvDecomp parts = decompose_curvature(kappa);
  const bool reassembles = reassemble(parts) == kappa;
  json doc = {{"model", encode(kappa.algebra().model())},
              {"normal", is_normal(kappa)},
              {"torsion_free", is_torsion_free(kappa)},
              {"codifferential", encode(codifferential(kappa))},
              {"decomposition",
               {{"torsion", encode(parts.torsion)["values"]},
                {"weyl", encode(parts.weyl)["values"]},
                {"cotton_york", encode(parts.cotton_york)["values"]},
                {"reassembles", reassembles}}}};
  return {reassembles ? 0 : 1, doc};
}

RunResult failure(const std::string& kind, const std::string& message) {
  return {2, {{"error", kind}, {"message", message}}};
}

}  // namespace

RunResult run(const RunConfig& cfg) {
  try {
    if (cfg.subcommand == "flat-symmetries") return flat_symmetries(cfg);
    if (cfg.subcommand == "check-system") return check_system(cfg);
    if (cfg.subcommand == "invariant-weyl") return invariant_weyl(cfg);
    if (cfg.subcommand == "example-nonhomog") return example_nonhomog(cfg);
    if (cfg.subcommand == "normality-check") return normality_check(cfg);
    return failure("usage", "unknown subcommand \"" + cfg.subcommand + "\"");
  } catch (const InputError& e) {
    return failure("input", e.what());
  } catch (const SampleExhaustion& e) {
    return failure("sampling", e.what());
  } catch (const json::exception& e) {
    return failure("input", e.what());
  } catch (const std::invalid_argument& e) {
    return failure("input", e.what());
  }
}

std::variant<RunConfig, int> parse_command_line(int argc, const char* const* argv) {
  RunConfig cfg;
  CLI::App app{"Exact verification pipelines for |1|-graded flat models", "cartankit"};
  app.require_subcommand(1);
  app.add_option("-o,--output", cfg.output, "Write the JSON report here instead of stdout");

  auto common = [&](CLI::App* sub) {
    sub->add_option("--samples", cfg.samples, "Number of random samples")->capture_default_str();
    sub->add_option("--seed", cfg.seed, "Seed of the deterministic sampler")->capture_default_str();
  };

  auto* flat = app.add_subcommand("flat-symmetries", "Enumerate symmetries at the origin");
  flat->add_option("--model", cfg.model)->check(CLI::IsMember({"projective", "conformal"}))->capture_default_str();
  flat->add_option("--m", cfg.m, "Dimension of projective space")->check(CLI::Range(1, 64));
  flat->add_option("--p", cfg.p, "Positive signature (conformal)")->check(CLI::Range(0, 64));
  flat->add_option("--q", cfg.q, "Negative signature (conformal)")->check(CLI::Range(0, 64));
  common(flat);
  flat->get_option("--samples")->default_val(20);

  auto* check = app.add_subcommand("check-system", "Loos axioms and tangent doubling for a system descriptor");
  check->add_option("--system", cfg.system_path, "System descriptor (JSON)")->required()->check(CLI::ExistingFile);
  common(check);

  auto* weyl = app.add_subcommand("invariant-weyl", "Invariant Weyl structure verdict for a system descriptor");
  weyl->add_option("--system", cfg.system_path, "System descriptor (JSON)")->required()->check(CLI::ExistingFile);
  common(weyl);

  auto* nonhomog = app.add_subcommand("example-nonhomog", "Projective space minus two points");
  nonhomog->add_option("--m", cfg.m, "Dimension")->required()->check(CLI::Range(2, 64));
  common(nonhomog);

  auto* normal = app.add_subcommand("normality-check", "Codifferential and curvature decomposition of a cochain");
  normal->add_option("--cochain", cfg.cochain_path, "Cochain (JSON)")->required()->check(CLI::ExistingFile);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  cfg.subcommand = app.get_subcommands().front()->get_name();
  return cfg;
}

std::string render(const json& document) { return document.dump(2) + "\n"; }

}  // namespace cartan::cli
