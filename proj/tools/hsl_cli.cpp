// hsl — command line front end.
//   hsl spectrum|synth|darboux|mu|verify --config FILE [--out PATH] [--grid N]
//       [--projection MODE] [--fd-step H] [--tol T]
// exit: 0 ok, 1 verification failure, 2 config error, 3 IO error

#include <cmath>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "hsl/config.hpp"
#include "hsl/error.hpp"
#include "hsl/export.hpp"
#include "hsl/verify.hpp"

using namespace hsl;

namespace {

struct Options {
  std::string config;
  std::string out;
  std::optional<int> grid;
  std::optional<std::string> projection;
  std::optional<double> fd_step;
  std::optional<double> tol;
};

void emit(const Options& o, const std::string& text) {
  if (o.out.empty() || o.out == "-") {
    std::cout << text;
    std::cout.flush();
  } else {
    write_text(o.out, text);
  }
}

std::string cx(Cx z) { return fmt_real(z.real()) + " " + fmt_real(z.imag()); }

// ---- spectrum ----------------------------------------------------------------

// B-values on the circle β0/2(1 + e^{it}) where another circle of E meets it
std::vector<double> crossing_angles(const Spectrum& sp) {
  const Cx half = 0.5 * sp.beta0();
  const double R = std::abs(half);
  std::vector<double> out;
  for (Cx d : enum_translated_disk(sp.dual(), half, half, 2.0 * R)) {
    const Cx v = d - half;
    const double dist = std::abs(v);
    if (dist < 1e-12) continue;
    const double h = std::sqrt(std::max(0.0, R * R - 0.25 * dist * dist));
    for (double s : {-1.0, 1.0}) {
      const Cx B = half + 0.5 * v + s * Cx(0.0, h) * v / dist;
      double t = std::arg((B - half) / half);
      if (t < 0.0) t += 2.0 * M_PI;
      out.push_back(t);
    }
  }
  return out;
}

int cmd_spectrum(const Options& o, const RunConfig& cfg) {
  const Spectrum sp(cfg.lattice, cfg.beta0);
  std::vector<double> ts;
  for (int k = 0; k < cfg.sweep_steps; ++k) ts.push_back(2.0 * M_PI * k / cfg.sweep_steps);
  for (double t : crossing_angles(sp)) ts.push_back(t);
  std::sort(ts.begin(), ts.end());
  std::vector<double> uniq;
  for (double t : ts)
    if (uniq.empty() || t - uniq.back() > 1e-12) uniq.push_back(t);

  std::vector<SpectrumRow> rows;
  auto add = [&](const MultiplierKey& k) { rows.push_back({k.A, k.B, dim_H0(k), k.freqs, k.lambdas}); };
  for (double t : uniq) add(sp.admissible(Cx(0.0, 0.0), circle_B(sp.beta0(), t)));
  for (const auto& dp : sp.double_points(cfg.max_norm)) add(sp.admissible(dp.A, dp.B));
  emit(o, spectrum_csv(rows));
  return 0;
}

// ---- meshes ------------------------------------------------------------------

int export_mesh(const Options& o, const RunConfig& cfg, const SurfaceFn& fn, const Lattice& lattice) {
  const int n = o.grid.value_or(cfg.export_grid);
  const Projection mode = parse_projection(o.projection.value_or(cfg.projection));
  const MeshSample mesh = sample(fn, lattice, n, n);
  const Mesh3 m3 = project(mesh, mode);
  long flagged = 0;
  for (auto f : m3.flags) flagged += f != kFlagNone;
  std::fprintf(stderr, "mesh %dx%d, flagged vertices: %ld\n", n, n, flagged);
  emit(o, obj_string(m3));
  return 0;
}

int cmd_synth(const Options& o, const RunConfig& cfg) {
  const HslTorus t = cfg.torus();
  return export_mesh(o, cfg, [&](Cx z) { return t.position(z); }, t.lattice());
}

DarbouxSurface configured_transform(const RunConfig& cfg, const HslTorus& t) {
  const Spectrum sp(t.lattice(), t.beta0());
  if (cfg.darboux_mode == "poly") {
    if (cfg.weights.empty()) throw Error(ErrorCode::ConfigError, "poly mode needs weight lines");
    return darboux_poly(t, cfg.B, cfg.weights);
  }
  if (cfg.t) {
    // A = 0, B on the circle through β0/2, frequency β0/2
    const MultiplierKey key = sp.admissible(Cx(0.0, 0.0), circle_B(t.beta0(), *cfg.t));
    const Cx want = 0.5 * t.beta0() - circle_B(t.beta0(), *cfg.t);  // δ − B
    for (std::size_t i = 0; i < key.freqs.size(); ++i) {
      if (std::abs(key.freqs[i] - key.B - want) < 1e-9) return darboux_mono(t, key, i);
    }
    throw Error(ErrorCode::ConfigError, "frequency beta0/2 not found for t");
  }
  const MultiplierKey key = sp.admissible(cfg.A, cfg.B);
  if (key.freqs.empty()) throw Error(ErrorCode::ConfigError, "multiplier (A, B) is not in the spectrum");
  if (cfg.freq >= key.freqs.size()) throw Error(ErrorCode::ConfigError, "freq index out of range");
  return darboux_mono(t, key, cfg.freq);
}

int cmd_darboux(const Options& o, const RunConfig& cfg) {
  const HslTorus t = cfg.torus();
  const DarbouxSurface d = configured_transform(cfg, t);
  std::fprintf(stderr, "kind = %s\n", to_string(d.kind()));
  if (d.kind() == DarbouxKind::PointAtInfinity) {
    std::printf("kind = point_at_infinity\n");
    return 0;
  }
  const LagrangianReport lag = is_lagrangian(d, 32);
  std::fprintf(stderr, "lagrangian = %s (max violation %.3e)\n", lag.lagrangian ? "yes" : "no", lag.max_violation);
  if (d.kind() == DarbouxKind::Polychromatic) {
    std::fprintf(stderr, "min|r|/max|r| = %.3e%s\n", d.min_abs_r() / d.max_abs_r(), d.singular() ? " (singular)" : "");
  } else {
    const AngleShift a = lagrangian_angle_shift(d);
    std::fprintf(stderr, "beta_h = %.17g (stddev %.3e)\n", a.beta_h, a.stddev);
  }
  return export_mesh(o, cfg, [&](Cx z) { return d.position(z); }, t.lattice());
}

int cmd_mu(const Options& o, const RunConfig& cfg) {
  const HslTorus t = cfg.torus();
  const Spectrum sp(t.lattice(), t.beta0());
  const Cx mu = cfg.mus.empty() ? Cx(-1.0, 0.0) : cfg.mus.front();
  const MuSections ms = mu_sections(t, mu);
  std::fprintf(stderr, "mu = %s, lambda = %s, A_mu = %s, C_mu = %s, degenerate monodromy = %s\n", cx(mu).c_str(),
               cx(ms.point.lambda).c_str(), cx(ms.point.A_mu).c_str(), cx(ms.point.C_mu).c_str(),
               sp.degenerate_monodromy(mu) ? "yes" : "no");
  const HoloSection& s = ms.alpha_plus;
  return export_mesh(o, cfg, [&](Cx z) { return t.position(z) + prolongation_T(s, t, z); }, t.lattice());
}

// ---- verify ------------------------------------------------------------------

struct Tally {
  int failed = 0;
  void line(const FdReport& r) {
    std::printf("%s\n", format_report(r).c_str());
    failed += !r.passed;
  }
  void flag(bool ok, const std::string& what) {
    std::printf("%s %s\n", ok ? "PASS" : "FAIL", what.c_str());
    failed += !ok;
  }
};

void verify_transform(Tally& tally, const DarbouxSurface& d, const FdOptions& opt, const std::string& label) {
  std::printf("-- %s (%s)\n", label.c_str(), to_string(d.kind()));
  if (d.kind() == DarbouxKind::PointAtInfinity) return;
  const HslPreservation h = check_hsl_preservation(d, opt);
  tally.line(h.conformal);
  tally.line(h.normal);
  if (h.angle) {
    tally.line(*h.angle);
    char buf[160];
    std::snprintf(buf, sizeof buf, "Lagrangian: Im(conj(tau0) tau1) = 0 | max violation %.3e",
                  h.lagrangian.max_violation);
    tally.flag(h.lagrangian.lagrangian, buf);
    const AngleShift a = lagrangian_angle_shift(d, 32);
    std::snprintf(buf, sizeof buf, "beta^ = beta + beta_h with beta_h constant | stddev %.3e", a.stddev);
    tally.flag(a.stddev < 1e-8, buf);
  } else {
    std::printf("INFO Lagrangian test: max violation %.3e (%s)\n", h.lagrangian.max_violation,
                h.lagrangian.lagrangian ? "Lagrangian" : "not Lagrangian");
  }
}

int cmd_verify(const Options& o, const RunConfig& cfg) {
  const HslTorus t = cfg.torus();
  const Spectrum sp(t.lattice(), t.beta0());
  FdOptions opt;
  opt.grid_n = o.grid.value_or(cfg.verify_grid);
  opt.h = o.fd_step.value_or(cfg.fd_step);
  opt.tol = o.tol.value_or(cfg.tol);
  Tally tally;

  std::printf("-- torus\n");
  tally.line(check_conformal_lagrangian(t, opt));
  tally.line(check_periodicity(t, opt));

  std::printf("-- holomorphic sections\n");
  const Cx half = 0.5 * t.beta0();
  const MultiplierKey trivial = sp.admissible(Cx(0.0, 0.0), Cx(0.0, 0.0));
  for (std::size_t i = 0; i < trivial.freqs.size(); ++i) {
    if (std::abs(trivial.freqs[i] - half) > 1e-9) continue;
    std::vector<Cx> c(trivial.freqs.size());
    c[i] = 1.0;
    tally.line(check_holomorphic(build_section(trivial, t.beta0(), c), t, opt));
  }
  const MultiplierKey generic = sp.admissible(Cx(0.0, 0.0), circle_B(t.beta0(), 0.7));
  const HoloSection gsec = build_section(generic, t.beta0(), std::vector<Cx>(generic.freqs.size(), 1.0));
  tally.line(check_holomorphic(gsec, t, opt));
  tally.line(check_multiplier(gsec, t.lattice(), opt));
  const auto dps = sp.double_points(cfg.max_norm);
  std::optional<MultiplierKey> dkey;
  if (!dps.empty()) {
    dkey = sp.admissible(dps.front().A, dps.front().B);
    tally.flag(dim_H0(*dkey) == 2, "double point: dim H0 = 2");
    const HoloSection ds = build_section(*dkey, t.beta0(), {Cx(1.0, 0.0), Cx(0.0, 0.5)});
    tally.line(check_holomorphic(ds, t, opt));
    tally.line(check_multiplier(ds, t.lattice(), opt));
  }

  std::vector<Cx> mus = cfg.mus;
  if (mus.empty()) mus = {Cx(0.5, 0.0), std::polar(2.0, M_PI / 3.0), Cx(-1.0, 0.0)};
  for (Cx mu : mus) {
    std::printf("-- mu = %s (degenerate monodromy: %s)\n", cx(mu).c_str(), sp.degenerate_monodromy(mu) ? "yes" : "no");
    const MuSections ms = mu_sections(t, mu);
    for (const HoloSection* s : {&ms.alpha_plus, &ms.alpha_minus}) {
      tally.line(check_holomorphic(*s, t, opt));
      tally.line(check_dmu_parallel(*s, t, mu, opt));
    }
  }

  const MultiplierKey mono_key = generic;
  for (std::size_t i = 0; i < mono_key.freqs.size(); ++i) {
    const DarbouxSurface d = darboux_mono(t, mono_key, i);
    verify_transform(tally, d, opt, "monochromatic DT, A = 0");
    if (d.kind() == DarbouxKind::Monochromatic) {
      std::vector<Cx> c(mono_key.freqs.size());
      c[i] = 1.0;
      tally.line(check_prolongation(build_section(mono_key, t.beta0(), c), d, opt));
    }
  }
  if (dkey) {
    const DarbouxSurface d = darboux_mono(t, *dkey, 0);
    verify_transform(tally, d, opt, "monochromatic DT, A != 0");
    tally.line(check_prolongation(build_section(*dkey, t.beta0(), {Cx(1.0, 0.0), Cx(0.0, 0.0)}), d, opt));
  }
  if (cfg.darboux_set) {
    verify_transform(tally, configured_transform(cfg, t), opt, "configured DT");
  }
  std::printf("%s: %d failed\n", tally.failed ? "FAILED" : "OK", tally.failed);
  return tally.failed ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hamiltonian stationary Lagrangian tori: synthesis, spectra, Darboux transforms"};
  app.require_subcommand(1);
  Options o;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", o.config, "config file")->required();
    sub->add_option("--out", o.out, "output path (default stdout)");
    sub->add_option("--grid", o.grid, "grid size")->check(CLI::Range(2, 100000));
    sub->add_option("--projection", o.projection, "ortho1..ortho4 | stereo");
    sub->add_option("--fd-step", o.fd_step, "finite difference step")->check(CLI::PositiveNumber);
    sub->add_option("--tol", o.tol, "relative tolerance")->check(CLI::PositiveNumber);
  };
  using Cmd = int (*)(const Options&, const RunConfig&);
  std::vector<std::pair<CLI::App*, Cmd>> cmds = {
      {app.add_subcommand("spectrum", "B-sweep over the circle plus double points, CSV"), cmd_spectrum},
      {app.add_subcommand("synth", "export the torus as OBJ"), cmd_synth},
      {app.add_subcommand("darboux", "monochromatic / polychromatic Darboux transform"), cmd_darboux},
      {app.add_subcommand("mu", "mu-Darboux transform"), cmd_mu},
      {app.add_subcommand("verify", "run every identity check"), cmd_verify},
  };
  for (auto& [sub, fn] : cmds) add_common(sub);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    const RunConfig cfg = load_config(o.config);
    for (auto& [sub, fn] : cmds)
      if (sub->parsed()) return fn(o, cfg);
  } catch (const Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    switch (e.code()) {
      case ErrorCode::ConfigError: return 2;
      case ErrorCode::IoError: return 3;
      default: return 1;
    }
  }
  return 0;
}
