#include "worm3/commands.hpp"

#include <cmath>
#include <filesystem>
#include <numbers>

#include <json.hpp>

#include "worm3/cauchy.hpp"
#include "worm3/certify.hpp"
#include "worm3/errors.hpp"
#include "worm3/kernel.hpp"
#include "worm3/norm_integral.hpp"
#include "worm3/output.hpp"
#include "worm3/selection.hpp"

namespace worm3 {

namespace {

using json = nlohmann::ordered_json;

std::string join(const std::string& dir, const std::string& name) {
  return (std::filesystem::path(dir) / name).string();
}

std::string emit(CommandResult& r, const std::string& dir, const std::string& name,
                 const std::string& body) {
  std::filesystem::create_directories(dir);
  const std::string path = join(dir, name);
  write_file(path, body);
  r.files.push_back(path);
  return path;
}

json cplx_json(cplx z) { return json::array({z.real(), z.imag()}); }

json argmax_json(const ArgMax& m) {
  return {{"value", m.value}, {"t2", m.t2}, {"t3", m.t3}, {"grid_value", m.grid_value}};
}

json selection_json(const SelectionResult& s) {
  const auto& p = s.params;
  return {{"mu", p.mu},
          {"A_plus", p.A_plus},
          {"A_minus", p.A_minus},
          {"B_plus", p.B_plus},
          {"B_minus", p.B_minus},
          {"M_plus", argmax_json(s.M_plus)},
          {"M_minus", argmax_json(s.M_minus)},
          {"N_plus", argmax_json(s.N_plus)},
          {"N_minus", argmax_json(s.N_minus)},
          {"c_plus", s.c_plus},
          {"c_minus", s.c_minus}};
}

json sample_json(const SampleRecord& s) {
  return {{"z1", cplx_json(s.p.z1)}, {"z2", cplx_json(s.p.z2)},  {"z3", cplx_json(s.p.z3)},
          {"t2", s.t2},              {"t3", s.t3},               {"lambda_min", s.lambda_min},
          {"lambda_max", s.lambda_max}, {"levi_norm", s.levi_norm}, {"margin", s.margin}};
}

SelectionResult select_from(double mu, double b_factor, double a_over_b, int grid, double delta,
                            Exec exec) {
  SelectionOptions opt;
  opt.grid = grid;
  opt.delta = delta;
  return select_constants(MainProfileParams::from_factors(mu, b_factor, a_over_b), opt, exec);
}

}  // namespace

CommandResult run_certify(const RunConfig& cfg, const std::string& out_dir, Exec exec) {
  const CertifySection& c = cfg.certify;
  CommandResult r;
  json rep;
  EtaPtr eta;
  std::shared_ptr<const SeparableProfile> separable;
  if (c.profile == "main") {
    const auto sel = select_from(c.mu, c.b_factor, c.a_over_b, static_cast<int>(c.select_grid),
                                 SelectionOptions{}.delta, exec);
    eta = make_main_profile(sel.params);
    rep["constants"] = selection_json(sel);
  } else if (c.profile == "zero") {
    eta = make_zero_profile();
  } else if (c.profile == "convex_sum") {
    eta = make_convex_sum_profile(c.mu, c.mu_prime);
  } else if (c.profile == "separable") {
    eta = make_separable_profile(c.mu, c.mu_prime);
    separable = std::dynamic_pointer_cast<const SeparableProfile>(eta);
  } else if (c.profile == "char_square") {
    eta = make_char_square_profile(c.mu);
  } else {
    throw Error(ErrorKind::ConfigError, "unknown profile '" + c.profile + "'");
  }

  CertifyOptions opt;
  opt.samples = static_cast<std::size_t>(c.samples);
  opt.seed = cfg.seed;
  opt.tol = c.tol;
  opt.grid = static_cast<int>(c.grid);
  opt.dilation = c.dilation;
  const auto report = certify(*eta, DomainParams::make(c.mu, c.mu_prime), opt, exec);
  bool verdict = report.verdict;

  rep["profile"] = report.profile;
  rep["samples"] = report.samples.size();
  rep["worst_margin"] = report.worst_margin;
  rep["grid"] = {{"points", report.grid.points},
                 {"failures", report.grid.failures},
                 {"failures_above_band", report.grid.failures_above_band},
                 {"radius", report.grid.radius},
                 {"min_rel_ineq1", report.grid.min_rel_ineq1},
                 {"min_rel_ineq3", report.grid.min_rel_ineq3}};
  json wit = json::array();
  for (const auto& w : report.witnesses) wit.push_back(sample_json(w));

  if (separable) {
    json sweep = json::array();
    for (const auto& sp : separable_eps_sweep(*separable, static_cast<int>(c.sweep_steps))) {
      // The form underflows to exactly zero as eps -> 0.
      const double rel = sp.norm > 0 ? sp.lambda_min / sp.norm : 0.0;
      sweep.push_back({{"eps", sp.eps}, {"lambda_min", sp.lambda_min}, {"norm", sp.norm},
                       {"relative", rel}});
      if (rel < -c.tol) {
        verdict = false;
        if (wit.size() < opt.max_witnesses) {
          SampleRecord s;
          s.p = sp.p;
          s.t2 = sp.p.t2();
          s.t3 = sp.p.t3();
          s.lambda_min = sp.lambda_min;
          s.lambda_max = sp.lambda_max;
          s.levi_norm = sp.norm;
          s.margin = rel;
          wit.push_back(sample_json(s));
        }
      }
    }
    rep["eps_sweep"] = sweep;
  }
  rep["witnesses"] = wit;
  rep["verdict"] = verdict ? "pass" : "fail";

  CsvTable csv({"t2", "t3", "ineq1", "ineq3", "lambda_min", "lambda_max", "verdict", "levi_norm",
                "margin"});
  for (const auto& s : report.samples)
    csv.row().add(s.t2).add(s.t3).add(s.ineq1).add(s.ineq3).add(s.lambda_min).add(s.lambda_max)
        .add(std::string(s.pass ? "pass" : "fail")).add(s.levi_norm).add(s.margin);
  emit(r, out_dir, "certify_report.json", rep.dump(2) + "\n");
  emit(r, out_dir, "certify_samples.csv", csv.str());
  r.exit_code = verdict ? kExitOk : kExitCertifyFail;
  r.message = std::string("certify ") + report.profile + ": " + (verdict ? "pass" : "fail");
  return r;
}

CommandResult run_select(const RunConfig& cfg, const std::string& out_dir, Exec exec) {
  const SelectSection& s = cfg.select;
  CommandResult r;
  const auto sel = select_from(s.mu, s.b_factor, s.a_over_b, static_cast<int>(s.grid), s.delta, exec);
  emit(r, out_dir, "selection.json", selection_json(sel).dump(2) + "\n");
  r.message = "select: c+ = " + format_double(sel.c_plus) + ", c- = " + format_double(sel.c_minus);
  return r;
}

CommandResult run_kernel(const RunConfig& cfg, const std::string& out_dir, Exec exec) {
  const KernelSection& k = cfg.kernel;
  CommandResult r;
  KernelOptions opt;
  opt.rel_tol = k.rel_tol;
  opt.tail_tol = k.tail_tol;
  const bool asymptotics = k.mu > std::numbers::pi / 2;

  std::vector<cplx> ds;
  for (double im : k.im)
    for (double re : k.re) ds.emplace_back(re, im);
  std::vector<KernelEval> ev(ds.size());
  const long long n = static_cast<long long>(ds.size());
  bool nonconv = false;
#pragma omp parallel for schedule(dynamic) if (exec == Exec::parallel)
  for (long long i = 0; i < n; ++i) {
    try {
      ev[i] = kernel_of_d(k.mu, ds[i], opt);
      if (asymptotics && std::abs(ds[i].real()) >= 4) {
        ev[i].asymp = kernel_asymptotic_d(k.mu, ds[i]);
        ev[i].asymp_residual = std::abs(ev[i].value - *ev[i].asymp);
      }
    } catch (const Error&) {
#pragma omp atomic write
      nonconv = true;
    }
  }
  if (nonconv) throw Error(ErrorKind::NonConvergent, "kernel quadrature did not converge");

  CsvTable csv({"re_d", "im_d", "K_re", "K_im", "asymp_re", "asymp_im", "abs_err"});
  for (std::size_t i = 0; i < ds.size(); ++i) {
    csv.row().add(ds[i].real()).add(ds[i].imag()).add(ev[i].value.real()).add(ev[i].value.imag());
    if (ev[i].asymp)
      csv.add(ev[i].asymp->real()).add(ev[i].asymp->imag()).add(ev[i].asymp_residual);
    else
      csv.add(std::string()).add(std::string()).add(std::string());
  }

  json summary;
  summary["mu"] = k.mu;
  summary["nu"] = std::numbers::pi / (2 * k.mu);
  // K is even in d: compare each scanned value with its mirror when present.
  double sym = 0;
  for (std::size_t i = 0; i < ds.size(); ++i)
    for (std::size_t j = 0; j < ds.size(); ++j)
      if (ds[j] == -ds[i])
        sym = std::max(sym, std::abs(ev[i].value - ev[j].value) /
                                std::max(std::abs(ev[i].value), 1e-300));
  summary["symmetry_max_rel"] = sym;
  if (asymptotics) {
    const auto c = AsympConstants::make(k.mu);
    summary["nu_prime"] = c.nu_prime;
    std::vector<double> dd, err;
    for (std::size_t i = 0; i < ds.size(); ++i)
      if (ds[i].imag() == 0 && ds[i].real() >= 4 && ev[i].asymp && ev[i].asymp_residual > 0) {
        dd.push_back(ds[i].real());
        err.push_back(ev[i].asymp_residual);
      }
    if (dd.size() >= 2) {
      const auto fit = fit_decay(dd, err, subleading_pole_power(c.nu));
      summary["decay_fit"] = {{"points", dd.size()},
                              {"naive_rate", fit.naive_rate},
                              {"corrected_rate", fit.corrected_rate},
                              {"prefactor_power", fit.power}};
    }
    // At mu = pi the leading coefficient C d + C' vanishes at d = 6; use a generic d.
    const cplx d0(5.0, 0.5);
    const cplx rc = residue_contour(k.mu, d0), rf = residue_formula(k.mu, d0);
    summary["residue_check"] = {{"d", cplx_json(d0)},
                                {"contour", cplx_json(rc)},
                                {"formula", cplx_json(rf)},
                                {"rel_diff", std::abs(rc - rf) / std::abs(rf)}};
  }
  emit(r, out_dir, "kernel_scan.csv", csv.str());
  emit(r, out_dir, "kernel_summary.json", summary.dump(2) + "\n");
  r.message = "kernel: " + std::to_string(ds.size()) + " points";
  return r;
}

CommandResult run_norms(const RunConfig& cfg, const std::string& out_dir, Exec exec) {
  const NormsSection& s = cfg.norms;
  CommandResult r;
  CsvTable csv({"a", "b", "j", "k", "mu", "value", "mc_estimate", "mc_stderr"});
  std::uint64_t row = 0;
  for (double a : s.a)
    for (double b : s.b)
      for (auto j : s.j)
        for (auto k : s.k) {
          const NormIntegralSpec spec{a, b, static_cast<int>(j), static_cast<int>(k), s.mu};
          const auto v = norm_integral(spec);
          csv.row().add(a).add(b).add(static_cast<long long>(j)).add(static_cast<long long>(k))
              .add(s.mu);
          if (v) csv.add(*v); else csv.add(std::string("DIVERGENT"));
          if (v && s.mc_samples > 0) {
            const auto mc = norm_monte_carlo(spec, static_cast<std::uint64_t>(s.mc_samples),
                                             splitmix64(cfg.seed) ^ row, 64, exec);
            csv.add(mc.estimate).add(mc.stderr_);
          } else {
            csv.add(std::string()).add(std::string());
          }
          ++row;
        }
  emit(r, out_dir, "norms.csv", csv.str());
  r.message = "norms: " + std::to_string(row) + " rows";
  return r;
}

CommandResult run_nebenhulle(const RunConfig& cfg, const std::string& out_dir, Exec exec) {
  CommandResult r;
  const auto rep = nebenhulle_report(cfg.nebenhulle.mu, static_cast<int>(cfg.nebenhulle.nodes), exec);
  json j;
  j["mu"] = rep.mu;
  j["a"] = rep.a;
  j["nodes"] = rep.nodes;
  json rows = json::array();
  for (const auto& row : rep.rows)
    rows.push_back({{"function", row.function},
                    {"point", row.point},
                    {"in_worm", row.in_worm},
                    {"expected", row.extendable ? "extends" : "does_not_extend"},
                    {"extended", cplx_json(row.extended)},
                    {"direct", cplx_json(row.direct)},
                    {"rel_mismatch", row.rel_mismatch},
                    {"pass", row.pass}});
  j["rows"] = rows;
  j["verdict"] = rep.verdict ? "pass" : "fail";
  emit(r, out_dir, "nebenhulle.json", j.dump(2) + "\n");
  r.message = std::string("nebenhulle: ") + (rep.verdict ? "pass" : "fail");
  r.exit_code = rep.verdict ? kExitOk : kExitFailure;
  return r;
}

CommandResult run_command(const std::string& name, const RunConfig& cfg, const std::string& out_dir,
                          Exec exec) {
  try {
    if (name == "certify") return run_certify(cfg, out_dir, exec);
    if (name == "select") return run_select(cfg, out_dir, exec);
    if (name == "kernel") return run_kernel(cfg, out_dir, exec);
    if (name == "norms") return run_norms(cfg, out_dir, exec);
    if (name == "nebenhulle") return run_nebenhulle(cfg, out_dir, exec);
    return {kExitConfigError, {}, "unknown command '" + name + "'"};
  } catch (const Error& e) {
    CommandResult r;
    r.message = std::string(to_string(e.kind())) + ": " + e.what();
    switch (e.kind()) {
      case ErrorKind::ConfigError: r.exit_code = kExitConfigError; break;
      case ErrorKind::NonConvergent:
      case ErrorKind::GridTooCoarse: r.exit_code = kExitNonConvergent; break;
      default: r.exit_code = kExitFailure;
    }
    return r;
  }
}

}  // namespace worm3
