#include "qes2d/cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "qes2d/error.hpp"
#include "qes2d/io.hpp"
#include "qes2d/landau.hpp"
#include "qes2d/qes.hpp"
#include "qes2d/sweep.hpp"
#include "qes2d/system.hpp"
#include "qes2d/verify.hpp"

namespace qes2d {

namespace {

constexpr int kMaxRange = 64;

struct RunConfig {
  std::string case_sel;
  std::string n;
  std::string s;
  int j = 1;
  std::optional<double> e1, e2, m1, m2, B;
  int grid_points = 200;
  std::optional<double> r_max;
  std::string format = "csv";
  std::string out;
  std::optional<double> tol;
  std::optional<std::string> only;
};

IntRange parse_range(const std::string& text, const char* flag) {
  auto to_int = [&](const std::string& part) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(part, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != part.size()) {
      throw Error(Errc::InvalidInput, std::string("cannot parse ") + flag + " value '" + text + "'");
    }
    return v;
  };
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const int v = to_int(text);
    return {v, v};
  }
  IntRange r{to_int(text.substr(0, dots)), to_int(text.substr(dots + 2))};
  if (r.hi < r.lo) throw Error(Errc::InvalidInput, std::string("empty range for ") + flag);
  return r;
}

std::optional<DerivedParams> params_from(const RunConfig& cfg) {
  const int given = cfg.e1.has_value() + cfg.e2.has_value() + cfg.m1.has_value() + cfg.m2.has_value() +
                    cfg.B.has_value();
  if (given == 0) return std::nullopt;
  if (given != 5) throw Error(Errc::InvalidInput, "--e1 --e2 --m1 --m2 --B must be given together");
  return derive(ChargePair{*cfg.e1, *cfg.e2, *cfg.m1, *cfg.m2, *cfg.B});
}

/// Case from --case, reconciled with the parameters when they are given.
CaseTag resolve_case(const RunConfig& cfg, const std::optional<DerivedParams>& dp) {
  std::optional<CaseTag> sel;
  if (cfg.case_sel == "ec0") sel = CaseTag::EqualLarmor;
  else if (cfg.case_sel == "q0") sel = CaseTag::Neutral;
  else if (!cfg.case_sel.empty()) throw Error(Errc::InvalidInput, "--case must be ec0 or q0");
  if (!dp) return sel.value_or(CaseTag::EqualLarmor);
  if (dp->case_tag == CaseTag::Generic) {
    throw Error(Errc::InvalidInput, "charges describe a generic pair; no quasi-exact sector");
  }
  if (sel && *sel != dp->case_tag) throw Error(Errc::InvalidInput, "--case contradicts the given charges");
  return dp->case_tag;
}

std::string case_label(CaseTag c) { return c == CaseTag::Neutral ? "q0" : "ec0"; }

std::string cell(const Json& v) {
  if (v.is_null()) return {};
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  if (v.is_number_float()) return format_double(v.get<double>());
  if (v.is_number()) return v.dump();
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

Json num(double v) { return round15(v); }
Json num(const std::optional<double>& v) { return v ? Json(round15(*v)) : Json(nullptr); }

void emit(const RunConfig& cfg, const std::vector<std::string>& header, const std::vector<Json>& rows,
          const Json& meta, std::ostream& out) {
  std::ostringstream buf;
  if (cfg.format == "json") {
    Json doc{{"meta", meta}, {"rows", rows}};
    buf << doc.dump(2) << '\n';
  } else {
    std::vector<std::vector<std::string>> cells;
    cells.reserve(rows.size());
    for (const auto& r : rows) {
      std::vector<std::string> line;
      for (const auto& h : header) line.push_back(cell(r.at(h)));
      cells.push_back(std::move(line));
    }
    write_csv(buf, header, cells);
  }
  if (cfg.out.empty()) {
    out << buf.str();
    return;
  }
  std::ofstream f(cfg.out, std::ios::binary);
  if (!f) throw Error(Errc::InvalidInput, "cannot open " + cfg.out);
  f << buf.str();
}

Json range_json(const IntRange& r) { return Json::array({r.lo, r.hi}); }

int cmd_spectrum(const RunConfig& cfg, std::ostream& out) {
  const auto dp = params_from(cfg);
  SweepSpec spec;
  spec.case_tag = resolve_case(cfg, dp);
  spec.n = parse_range(cfg.n.empty() ? "0..3" : cfg.n, "--n");
  spec.s = parse_range(cfg.s.empty() ? "0" : cfg.s, "--s");
  if (spec.n.lo < 0 || spec.n.hi > kMaxRange) throw Error(Errc::InvalidInput, "--n must lie in 0..64");
  if (spec.s.lo < -kMaxRange || spec.s.hi > kMaxRange) throw Error(Errc::InvalidInput, "--s must lie in -64..64");
  spec.params = dp;
  if (dp) spec.solver.freq = Frequencies::from(*dp);

  const auto table = spectrum_table(spec);
  std::vector<std::string> header{"n",     "s",      "j",       "lambda",      "kappa", "b",
                                  "energy", "nodes", "physical", "closed_form", "delta"};
  if (dp) header.emplace_back("B");
  std::vector<Json> rows;
  for (const auto& r : table) {
    Json row{{"n", r.point.n},
             {"s", r.point.s},
             {"j", r.point.j},
             {"lambda", num(r.point.lambda)},
             {"kappa", num(r.point.kappa)},
             {"b", num(r.point.b)},
             {"energy", num(r.point.energy)},
             {"nodes", r.nodes},
             {"physical", r.point.physical()},
             {"closed_form", num(r.closed_form)},
             {"delta", num(r.delta)}};
    if (dp) row["B"] = num(r.B);
    rows.push_back(std::move(row));
  }
  Json meta{{"command", "spectrum"}, {"case", case_label(spec.case_tag)}, {"n", range_json(spec.n)},
            {"s", range_json(spec.s)}};
  if (dp) meta["params"] = to_json(*dp);
  emit(cfg, header, rows, meta, out);
  return 0;
}

int cmd_wavefunction(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto dp = params_from(cfg);
  const CaseTag c = resolve_case(cfg, dp);
  if (cfg.n.empty()) throw Error(Errc::InvalidInput, "wavefunction needs --n");
  const IntRange nr = parse_range(cfg.n, "--n");
  const IntRange sr = parse_range(cfg.s.empty() ? "0" : cfg.s, "--s");
  if (nr.size() != 1 || sr.size() != 1) throw Error(Errc::InvalidInput, "wavefunction takes a single n and s");
  const int n = nr.lo;
  const int s = sr.lo;
  if (n < 0 || n > kMaxRange || std::abs(s) > kMaxRange) throw Error(Errc::InvalidInput, "n or s out of range");
  if (cfg.grid_points < 2) throw Error(Errc::InvalidInput, "--grid-points must be at least 2");

  SolverOptions opt;
  if (dp) opt.freq = Frequencies::from(*dp);
  const EigenPair* chosen = nullptr;
  const auto pairs = solve_eigenpairs(n, s, c, opt);
  for (const auto& ep : pairs) {
    if (ep.point.physical() && ep.point.j == cfg.j) chosen = &ep;
  }
  if (!chosen) {
    err << "error: no physical branch j=" << cfg.j << " for n=" << n << ", s=" << s << '\n';
    return 2;
  }
  const double r_max = cfg.r_max.value_or(2.0 * std::sqrt(2.0 * n + 2.0 * std::abs(s) + 2.0) + 10.0);
  if (!(r_max > 0.0)) throw Error(Errc::InvalidInput, "--r-max must be positive");
  std::vector<double> grid(static_cast<std::size_t>(cfg.grid_points));
  for (int i = 0; i < cfg.grid_points; ++i) grid[i] = r_max * (i + 1) / cfg.grid_points;
  const auto sample = assemble_wavefunction(*chosen, grid, dp ? &*dp : nullptr);

  std::vector<std::string> header{"n", "s", "j", "lambda", "case", "rho", "zeta"};
  if (dp) header.emplace_back("r");
  std::vector<Json> rows;
  for (std::size_t i = 0; i < sample.rho.size(); ++i) {
    Json row{{"n", n},
             {"s", s},
             {"j", chosen->point.j},
             {"lambda", num(chosen->point.lambda)},
             {"case", case_label(c)},
             {"rho", num(sample.rho[i])},
             {"zeta", num(sample.zeta[i])}};
    if (dp) row["r"] = num(sample.rho[i] * sample.length_scale);
    rows.push_back(std::move(row));
  }
  Json meta{{"command", "wavefunction"},
            {"case", case_label(c)},
            {"point", to_json(chosen->point)},
            {"p", to_json(chosen->p)},
            {"nodes", chosen->nodes},
            {"gauge_exponent", sample.gauge_exponent},
            {"length_scale", num(sample.length_scale)}};
  emit(cfg, header, rows, meta, out);
  return 0;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  VerifyConfig vc;
  vc.only = cfg.only;
  if (!cfg.n.empty()) {
    const auto r = parse_range(cfg.n, "--n");
    if (r.size() != 1) throw Error(Errc::InvalidInput, "verify takes a single --n");
    vc.n = r.lo;
  }
  if (!cfg.s.empty()) {
    const auto r = parse_range(cfg.s, "--s");
    if (r.size() != 1) throw Error(Errc::InvalidInput, "verify takes a single --s");
    vc.s = r.lo;
  }
  if (cfg.tol) vc.oracle_tol = *cfg.tol;
  const auto report = run_verification(vc);
  if (cfg.format == "json") {
    std::vector<Json> rows;
    for (const auto& c : report.checks) {
      rows.push_back(Json{{"group", c.group},
                          {"name", c.name},
                          {"measured", num(c.measured)},
                          {"tolerance", c.informational ? Json(nullptr) : num(c.tolerance)},
                          {"pass", c.pass},
                          {"informational", c.informational},
                          {"detail", c.detail}});
    }
    Json meta{{"command", "verify"}, {"failures", report.failures()}};
    emit(cfg, {}, rows, meta, out);
  } else if (cfg.out.empty()) {
    out << report.render();
  } else {
    std::ofstream f(cfg.out, std::ios::binary);
    if (!f) throw Error(Errc::InvalidInput, "cannot open " + cfg.out);
    f << report.render();
  }
  return report.all_passed() ? 0 : 1;
}

int cmd_landau(const RunConfig& cfg, std::ostream& out) {
  const auto dp = params_from(cfg);
  if (cfg.case_sel == "q0") throw Error(Errc::InvalidInput, "the centre-of-mass Landau sector needs an equal-Larmor pair");
  const CaseTag c = resolve_case(cfg, dp);
  if (c != CaseTag::EqualLarmor) {
    throw Error(Errc::InvalidInput, "the centre-of-mass Landau sector needs an equal-Larmor pair");
  }
  const DerivedParams p = dp ? *dp : derive(ChargePair{1.0, 1.0, 1.0, 1.0, 1.0});
  const IntRange Nr = parse_range(cfg.n.empty() ? "0..3" : cfg.n, "--n");
  const IntRange Sr = parse_range(cfg.s.empty() ? "-3..3" : cfg.s, "--s");
  if (Nr.lo < 0 || Nr.hi > kMaxRange || Sr.lo < -kMaxRange || Sr.hi > kMaxRange) {
    throw Error(Errc::InvalidInput, "N must lie in 0..64 and |S| <= 64");
  }
  std::vector<std::string> header{"N", "S", "E_R", "K2", "casimir_residual"};
  std::vector<Json> rows;
  for (int N = Nr.lo; N <= Nr.hi; ++N) {
    for (int S = Sr.lo; S <= Sr.hi; ++S) {
      const CMState st{N, S};
      rows.push_back(Json{{"N", N},
                          {"S", S},
                          {"E_R", num(cm_energy(st, p.omega_c))},
                          {"K2", num(pseudomomentum_sq(st, p.q, p.pair.B))},
                          {"casimir_residual", num(casimir_identity_check(st, p))}});
    }
  }
  Json meta{{"command", "landau"}, {"N", range_json(Nr)}, {"S", range_json(Sr)}, {"params", to_json(p)}};
  emit(cfg, header, rows, meta, out);
  return 0;
}

void add_common(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--case", cfg.case_sel, "ec0 (equal Larmor) or q0 (neutral)");
  sub->add_option("--n", cfg.n, "n as an integer or a range a..b");
  sub->add_option("--s", cfg.s, "s as an integer or a range a..b");
  sub->add_option("--e1", cfg.e1, "charge of particle 1");
  sub->add_option("--e2", cfg.e2, "charge of particle 2");
  sub->add_option("--m1", cfg.m1, "mass of particle 1");
  sub->add_option("--m2", cfg.m2, "mass of particle 2");
  sub->add_option("--B", cfg.B, "field strength");
  sub->add_option("--format", cfg.format, "csv (default) or json")->check(CLI::IsMember({"csv", "json"}));
  sub->add_option("--out", cfg.out, "output path (default stdout)");
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Quasi-exact spectra of two planar charges in a magnetic field", "qes2d"};
  app.require_subcommand(1, 1);
  RunConfig cfg;

  auto* spectrum = app.add_subcommand("spectrum", "quantized couplings and fields");
  add_common(spectrum, cfg);

  auto* wave = app.add_subcommand("wavefunction", "sample the radial factor zeta(rho)");
  add_common(wave, cfg);
  wave->add_option("--j", cfg.j, "physical branch index, 1 = largest lambda");
  wave->add_option("--grid-points", cfg.grid_points, "number of samples");
  wave->add_option("--r-max", cfg.r_max, "outermost sample");

  auto* verify = app.add_subcommand("verify", "run the verification suites");
  add_common(verify, cfg);
  verify->add_option("--tol", cfg.tol, "finite-difference coupling tolerance");
  verify->add_option("--only", cfg.only, "restrict to one group");

  auto* landau = app.add_subcommand("landau", "centre-of-mass Landau levels");
  add_common(landau, cfg);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*spectrum) return cmd_spectrum(cfg, out);
    if (*wave) return cmd_wavefunction(cfg, out, err);
    if (*verify) return cmd_verify(cfg, out);
    if (*landau) return cmd_landau(cfg, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    switch (e.code()) {
      case Errc::IllConditioned:
      case Errc::NonNormalizable:
      case Errc::NoConvergence:
        return 3;
      default:
        return 2;
    }
  }
  return 2;
}

}  // namespace qes2d
