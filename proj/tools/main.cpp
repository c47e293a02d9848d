// Command-line front end: every library operation behind one binary with
// JSON/CSV output, deterministic seeds and machine-readable exit codes
// (0 success/pass, 1 check failure, 2 usage or input error).

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "toralf/families.hpp"
#include "toralf/json_io.hpp"
#include "toralf/kahler.hpp"
#include "toralf/metric.hpp"
#include "toralf/potential.hpp"
#include "toralf/profile.hpp"
#include "toralf/regularity.hpp"
#include "toralf/rng.hpp"

namespace {

using namespace toralf;

constexpr int kExitPass = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(errc::usage_error, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void emit(const std::string& text, const std::string& output_path) {
  if (output_path.empty() || output_path == "-") {
    std::fwrite(text.data(), 1, text.size(), stdout);
    if (!text.empty() && text.back() != '\n') std::fputc('\n', stdout);
    return;
  }
  std::ofstream out(output_path, std::ios::binary);
  if (!out) fail(errc::usage_error, "cannot write " + output_path);
  out << text;
}

std::string csv_num(double x) { return format_double(x); }

// --profile FILE or --preset NAME with its parameters.
struct ProfileArgs {
  std::string profile_path;
  std::string preset;
  double m = 1.0, a = 0.5, n = 1.0, p = 0.5, A = 0.5, b = 1.0;

  void attach(CLI::App* cmd) {
    cmd->add_option("--profile", profile_path, "profile JSON file");
    cmd->add_option("--preset", preset,
                    "one of schwarzschild, kerr, taub-nut, taub-bolt, chen-teo, "
                    "eguchi-hanson, eh-family");
    cmd->add_option("--m", m, "mass (schwarzschild, kerr)");
    cmd->add_option("--a", a, "rotation (kerr)");
    cmd->add_option("--n", n, "NUT parameter (taub-nut, taub-bolt)");
    cmd->add_option("--p", p, "instanton parameter (chen-teo)");
    cmd->add_option("--A", A, "family parameter (eh-family)");
    cmd->add_option("--b", b, "bolt position (eguchi-hanson)");
  }

  PseudoProfile load_any() const {
    if (!profile_path.empty()) return profile_from_json(slurp(profile_path));
    if (preset == "schwarzschild") return presets::schwarzschild(m);
    if (preset == "kerr") return presets::kerr(m, a);
    if (preset == "taub-nut") return presets::taub_nut(n);
    if (preset == "taub-bolt") return presets::taub_bolt(n);
    if (preset == "chen-teo") return presets::chen_teo_instanton(p);
    if (preset == "eguchi-hanson") return presets::eguchi_hanson(b);
    if (preset == "eh-family") return presets::eh_family(A);
    if (!preset.empty()) fail(errc::unknown_preset, preset);
    fail(errc::usage_error, "need --profile or a --preset");
  }

  Profile load() const { return as_profile(load_any()); }
};

std::string params_text(const std::string& arg) {
  // Inline JSON or a file path.
  if (!arg.empty() && arg.front() == '{') return arg;
  return slurp(arg);
}

// Sample box for randomized checks, sized to the rod structure.
struct SampleBox {
  double rho_lo, rho_hi, z_lo, z_hi;
  explicit SampleBox(const Profile& p) {
    const double z0 = p.turns().front().z, z1 = p.turns().back().z;
    const double span = std::max(1.0, z1 - z0);
    rho_lo = 0.3 * span;
    rho_hi = 2.5 * span;
    z_lo = z0 - 1.5 * span;
    z_hi = z1 + 1.5 * span;
  }
};

int cmd_profile_validate(const std::string& path) {
  const PseudoProfile p = profile_from_json(slurp(path));
  if (p.constant() > 0.0)
    std::puts("valid profile");
  else
    std::puts("valid pseudo-profile (A = 0, outside the ALF ansatz)");
  return kExitPass;
}

int cmd_profile_plot(const ProfileArgs& args, double zmin, double zmax, int n,
                     const std::string& output) {
  if (n < 2) fail(errc::usage_error, "need at least 2 grid points");
  const PseudoProfile p = args.load_any();
  std::string out = "z,f\n";
  for (int i = 0; i < n; ++i) {
    const double z = zmin + (zmax - zmin) * i / (n - 1);
    out += csv_num(z) + "," + csv_num(p.value(z)) + "\n";
  }
  emit(out, output);
  return kExitPass;
}

int cmd_potential_sample(const ProfileArgs& args, double rho, double z,
                         const std::string& output) {
  const Profile p = args.load();
  if (rho == 0.0) {
    emit(to_json(eval_axis_potential(p, z)), output);
  } else {
    emit(to_json(eval_potential(p, rho, z)), output);
  }
  return kExitPass;
}

int cmd_potential_grid(const ProfileArgs& args, double rho0, double rho1, int nrho, double z0,
                       double z1, int nz, const std::string& output) {
  if (nrho < 2 || nz < 2) fail(errc::usage_error, "need at least a 2x2 grid");
  if (!(rho0 > 0.0)) fail(errc::usage_error, "grid requires rho0 > 0");
  const Profile p = args.load();
  std::string out = "rho,z,U,U_rho,U_z,U_rhorho,U_rhoz,U_zz,H\n";
  for (int i = 0; i < nrho; ++i) {
    const double rho = rho0 + (rho1 - rho0) * i / (nrho - 1);
    for (int j = 0; j < nz; ++j) {
      const double z = z0 + (z1 - z0) * j / (nz - 1);
      const PotentialSample s = eval_potential(p, rho, z);
      out += csv_num(rho) + "," + csv_num(z) + "," + csv_num(s.U) + "," + csv_num(s.U_rho) +
             "," + csv_num(s.U_z) + "," + csv_num(s.U_rhorho) + "," + csv_num(s.U_rhoz) + "," +
             csv_num(s.U_zz) + "," + csv_num(s.H) + "\n";
    }
  }
  emit(out, output);
  return kExitPass;
}

int cmd_metric_sample(const ProfileArgs& args, double rho, double z, const std::string& output) {
  const Profile p = args.load();
  if (rho == 0.0)
    emit(to_json(eval_axis_fields(p, z)), output);
  else
    emit(to_json(eval_fields(p, rho, z)), output);
  return kExitPass;
}

int cmd_metric_axis(const ProfileArgs& args, const std::string& output) {
  emit(to_json(axis_data(args.load())), output);
  return kExitPass;
}

int cmd_metric_check_ricci(const ProfileArgs& args, int samples, double tol, double step,
                           std::uint64_t seed, const std::string& output) {
  if (samples < 1 || !(tol > 0.0)) fail(errc::usage_error, "need samples >= 1, tol > 0");
  const Profile p = args.load();
  const SampleBox box(p);
  Rng rng(seed);
  double worst = 0.0;
  int failures = 0;
  std::string rows = "rho,z,residual,pass\n";
  for (int i = 0; i < samples; ++i) {
    const double rho = rng.uniform(box.rho_lo, box.rho_hi);
    const double z = rng.uniform(box.z_lo, box.z_hi);
    const double h = step > 0.0 ? step : 1e-4 * std::max(1.0, rho);
    const double res = ricci_residual(p, rho, z, h);
    const bool ok = res < tol;
    if (!ok) ++failures;
    worst = std::max(worst, res);
    rows += csv_num(rho) + "," + csv_num(z) + "," + csv_num(res) + "," + (ok ? "1" : "0") + "\n";
  }
  rows += "# worst residual " + csv_num(worst) + " over " + std::to_string(samples) +
          " samples, tol " + csv_num(tol) + "\n";
  emit(rows, output);
  return failures == 0 ? kExitPass : kExitCheckFailed;
}

int cmd_kahler_polytope(const ProfileArgs& args, bool fig2, const std::vector<double>& alphas,
                        const std::string& output) {
  if (fig2) {
    if (args.preset != "chen-teo")
      fail(errc::usage_error, "--fig2-basis applies to --preset chen-teo only");
    emit(to_json(chen_teo_fig2_polytope(args.p)), output);
  } else {
    emit(to_json(moment_polytope(args.load(), alphas)), output);
  }
  return kExitPass;
}

int cmd_kahler_moments_grid(const ProfileArgs& args, double rho0, double rho1, int nrho,
                            double z0, double z1, int nz, const std::string& output) {
  if (nrho < 2 || nz < 2) fail(errc::usage_error, "need at least a 2x2 grid");
  if (!(rho0 > 0.0)) fail(errc::usage_error, "grid requires rho0 > 0");
  const Profile p = args.load();
  std::string out = "rho,z,x1,mu,volume_density\n";
  for (int i = 0; i < nrho; ++i) {
    const double rho = rho0 + (rho1 - rho0) * i / (nrho - 1);
    for (int j = 0; j < nz; ++j) {
      const double z = z0 + (z1 - z0) * j / (nz - 1);
      const MomentPair m = moments(p, rho, z);
      out += csv_num(rho) + "," + csv_num(z) + "," + csv_num(m.x1) + "," + csv_num(m.mu) + "," +
             csv_num(volume_density(p, rho, z)) + "\n";
    }
  }
  emit(out, output);
  return kExitPass;
}

int cmd_kahler_scalar_check(const ProfileArgs& args, int samples, double tol, double step,
                            std::uint64_t seed, const std::string& output) {
  if (samples < 1 || !(tol > 0.0)) fail(errc::usage_error, "need samples >= 1, tol > 0");
  const Profile p = args.load();
  const SampleBox box(p);
  Rng rng(seed);
  int failures = 0;
  std::string rows = "rho,z,scal,expected,rel_err,pass\n";
  for (int i = 0; i < samples; ++i) {
    const double rho = rng.uniform(box.rho_lo, box.rho_hi);
    const double z = rng.uniform(box.z_lo, box.z_hi);
    const double h = step > 0.0 ? step : 1e-4 * std::max(1.0, rho);
    const auto [scal, expected] = scalar_curvature_check(p, rho, z, h);
    const double rel = std::abs(scal - expected) / std::abs(expected);
    const bool ok = rel < tol;
    if (!ok) ++failures;
    rows += csv_num(rho) + "," + csv_num(z) + "," + csv_num(scal) + "," + csv_num(expected) +
            "," + csv_num(rel) + "," + (ok ? "1" : "0") + "\n";
  }
  emit(rows, output);
  return failures == 0 ? kExitPass : kExitCheckFailed;
}

int cmd_classify(const std::string& params_arg, const std::vector<std::string>& exact,
                 const std::string& output) {
  RegularityReport rep;
  if (!exact.empty()) {
    if (exact.size() != 4)
      fail(errc::usage_error, "--exact takes 4 rationals: p q d1 d3 (each as n/d)");
    auto parse_rat = [](const std::string& s) -> Rational {
      Rational r;
      const auto slash = s.find('/');
      try {
        if (slash == std::string::npos) {
          r.num = std::stoll(s);
          r.den = 1;
        } else {
          r.num = std::stoll(s.substr(0, slash));
          r.den = std::stoll(s.substr(slash + 1));
        }
      } catch (const std::exception&) {
        fail(errc::usage_error, "bad rational: " + s);
      }
      return r;
    };
    ExactParams e{parse_rat(exact[0]), parse_rat(exact[1]), parse_rat(exact[2]),
                  parse_rat(exact[3])};
    rep = solve_regularity(e);
  } else {
    if (params_arg.empty()) fail(errc::usage_error, "need --params or --exact");
    rep = solve_regularity(params_from_json(params_text(params_arg)));
  }
  emit(to_json(rep), output);
  return rep.regular ? kExitPass : kExitCheckFailed;
}

struct ScanAxis {
  double lo = 0.0, hi = 0.0;
  int n = 1;
};

int cmd_scan(const ScanAxis& P, const ScanAxis& Q, const ScanAxis& Aa, const ScanAxis& Bb,
             int jobs, const std::string& output) {
  if (P.n < 1 || Q.n < 1 || Aa.n < 1 || Bb.n < 1) fail(errc::usage_error, "need n >= 1 per axis");
  const auto at = [](const ScanAxis& ax, int i) {
    return ax.n == 1 ? ax.lo : ax.lo + (ax.hi - ax.lo) * i / (ax.n - 1);
  };
  const long long total = 1LL * P.n * Q.n * Aa.n * Bb.n;
  std::vector<std::string> rows(static_cast<std::size_t>(total));

  auto worker = [&](long long begin, long long end) {
    for (long long idx = begin; idx < end; ++idx) {
      long long rest = idx;
      const int ib = static_cast<int>(rest % Bb.n); rest /= Bb.n;
      const int ia = static_cast<int>(rest % Aa.n); rest /= Aa.n;
      const int iq = static_cast<int>(rest % Q.n); rest /= Q.n;
      const int ip = static_cast<int>(rest);
      const double p = at(P, ip), q = at(Q, iq), a = at(Aa, ia), b = at(Bb, ib);
      std::string row = csv_num(p) + "," + csv_num(q) + "," + csv_num(a) + "," + csv_num(b);
      try {
        const ChenTeoParams params = ChenTeoParams::from_ab(p, q, a, b);
        const RegularityReport rep = solve_regularity(params);
        row += "," + csv_num(rep.nut_charge) + "," + std::string(rep.regular ? "1" : "0");
        row += "," + (rep.n ? std::to_string(*rep.n) : std::string());
        row += "," + (rep.l1 ? std::to_string(*rep.l1) : std::string());
        row += "," + (rep.l2 ? std::to_string(*rep.l2) : std::string());
        for (int k = 0; k < 4; ++k)
          row += "," + (rep.regular ? csv_num(rep.alphas[static_cast<std::size_t>(k)])
                                    : std::string());
        row += "," + std::string(check_smooth(params, 1e-10) ? "1" : "0");
      } catch (const error&) {
        row += ",,0,,,,,,,,0";  // outside the family
      }
      rows[static_cast<std::size_t>(idx)] = std::move(row);
    }
  };

  if (jobs < 1) jobs = 1;
  const int nthreads = static_cast<int>(std::min<long long>(jobs, total));
  std::vector<std::thread> pool;
  const long long chunk = (total + nthreads - 1) / nthreads;
  for (int t = 0; t < nthreads; ++t) {
    const long long b0 = t * chunk, b1 = std::min(total, b0 + chunk);
    if (b0 >= b1) break;
    pool.emplace_back(worker, b0, b1);
  }
  for (auto& th : pool) th.join();

  std::string out =
      "p,q,a,b,nut_charge,regular,n,l1,l2,alpha0,alpha1,alpha2,alpha3,smooth\n";
  for (const std::string& r : rows) out += r + "\n";
  emit(out, output);
  return kExitPass;
}

int cmd_family(const std::string& name, double p, double q, double tau, long long l2, double A,
               const std::string& limit, const std::string& output) {
  std::string out;
  if (name == "pc33") {
    if (limit.empty()) {
      const FamilyMember m = family_pc33(p, l2);
      out = "{\"params\":" + to_json(m.params) + ",\"profile\":" + to_json(m.profile) +
            ",\"report\":" + to_json(m.report) + "}";
    } else {
      const int endpoint = (limit == "alpha1") ? 1 : (limit == "alpha2") ? 2 : 0;
      if (!endpoint) fail(errc::usage_error, "pc33 --limit is alpha1 or alpha2");
      out = "{\"profile\":" + to_json(family_pc33_limit(l2, endpoint)) + "}";
    }
  } else if (name == "af-equal-angles") {
    if (limit.empty()) {
      const FamilyMember m = family_af_equal_angles(p, q);
      out = "{\"params\":" + to_json(m.params) + ",\"profile\":" + to_json(m.profile) +
            ",\"report\":" + to_json(m.report) + "}";
    } else {
      EqualAngleEndpoint e;
      if (limit == "taub-nut")
        e = EqualAngleEndpoint::taub_nut_quotient;
      else if (limit == "eguchi-hanson")
        e = EqualAngleEndpoint::eguchi_hanson;
      else
        fail(errc::usage_error, "af-equal-angles --limit is taub-nut or eguchi-hanson");
      out = "{\"profile\":" + to_json(family_af_equal_angles_limit(e)) + "}";
    }
  } else if (name == "af-q-tau") {
    out = "{\"profile\":" + to_json(family_af_q_tau(q, tau)) + "}";
  } else if (name == "eh") {
    const EhFamilyPoint pt = family_eh(A);
    out = "{\"profile\":" + to_json(pt.profile) + ",\"l\":" + std::to_string(pt.l) +
          ",\"alpha1\":" + format_double(pt.alpha1) +
          ",\"cone_angle\":" + format_double(pt.cone_angle) +
          ",\"smooth\":" + (pt.smooth ? "true" : "false") + "}";
  } else {
    fail(errc::usage_error, "unknown family " + name);
  }
  emit(out, output);
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"toric ALF instanton metrics from rod profiles"};
  app.require_subcommand(1);
  app.fallthrough();  // --output may trail the subcommand
  std::string output;
  app.add_option("--output,-o", output, "output file (default stdout)");

  // profile
  auto* profile = app.add_subcommand("profile", "rod profile tools");
  profile->require_subcommand(1);
  auto* validate = profile->add_subcommand("validate", "validate a profile JSON file");
  std::string validate_path;
  validate->add_option("file", validate_path, "profile JSON file")->required();
  auto* plot = profile->add_subcommand("plot", "CSV of z, f(z) on a grid");
  ProfileArgs plot_args;
  plot_args.attach(plot);
  double zmin = -3.0, zmax = 3.0;
  int plot_n = 201;
  plot->add_option("--zmin", zmin);
  plot->add_option("--zmax", zmax);
  plot->add_option("--grid", plot_n, "number of grid points");

  // potential
  auto* potential = app.add_subcommand("potential", "generating function U and conjugate H");
  potential->require_subcommand(1);
  auto* psample = potential->add_subcommand("sample", "PotentialSample JSON at one point");
  ProfileArgs psample_args;
  psample_args.attach(psample);
  double rho = 1.0, z = 0.0;
  psample->add_option("--rho", rho)->required();
  psample->add_option("--z", z)->required();
  auto* pgrid = potential->add_subcommand("grid", "CSV over a (rho, z) grid");
  ProfileArgs pgrid_args;
  pgrid_args.attach(pgrid);
  double rho0 = 0.1, rho1 = 3.0, gz0 = -3.0, gz1 = 3.0;
  int nrho = 30, nz = 30;
  pgrid->add_option("--rho0", rho0);
  pgrid->add_option("--rho1", rho1);
  pgrid->add_option("--nrho", nrho);
  pgrid->add_option("--z0", gz0);
  pgrid->add_option("--z1", gz1);
  pgrid->add_option("--nz", nz);

  // metric
  auto* metric = app.add_subcommand("metric", "Harmark metric fields and checks");
  metric->require_subcommand(1);
  auto* msample = metric->add_subcommand("sample", "FieldSample JSON at one point");
  ProfileArgs msample_args;
  msample_args.attach(msample);
  double mrho = 1.0, mz = 0.0;
  msample->add_option("--rho", mrho)->required();
  msample->add_option("--z", mz)->required();
  auto* maxis = metric->add_subcommand("axis", "AxisData JSON (F-constants, AF defect)");
  ProfileArgs maxis_args;
  maxis_args.attach(maxis);
  auto* mricci = metric->add_subcommand("check-ricci", "FD Ricci residual at random points");
  ProfileArgs mricci_args;
  mricci_args.attach(mricci);
  int samples = 50;
  double tol = 1e-5, mstep = 0.0;
  std::uint64_t seed = 1;
  mricci->add_option("--samples", samples);
  mricci->add_option("--tol", tol);
  mricci->add_option("--step", mstep, "FD step (default 1e-4 max(1, rho))");
  mricci->add_option("--seed", seed);

  // kahler
  auto* kahler = app.add_subcommand("kahler", "conformal Kahler data");
  kahler->require_subcommand(1);
  auto* kpoly = kahler->add_subcommand("polytope", "moment polytope JSON");
  ProfileArgs kpoly_args;
  kpoly_args.attach(kpoly);
  bool fig2 = false;
  kpoly->add_flag("--fig2-basis", fig2, "adapted integer basis (chen-teo preset only)");
  std::vector<double> kalphas;
  kpoly->add_option("--alphas", kalphas, "cone angles; attaches the edge Killing fields");
  auto* kgrid = kahler->add_subcommand("moments-grid", "CSV of moments over a grid");
  ProfileArgs kgrid_args;
  kgrid_args.attach(kgrid);
  double krho0 = 0.1, krho1 = 3.0, kz0 = -3.0, kz1 = 3.0;
  int knrho = 30, knz = 30;
  kgrid->add_option("--rho0", krho0);
  kgrid->add_option("--rho1", krho1);
  kgrid->add_option("--nrho", knrho);
  kgrid->add_option("--z0", kz0);
  kgrid->add_option("--z1", kz1);
  kgrid->add_option("--nz", knz);
  auto* kscal = kahler->add_subcommand("scalar-check", "FD scalar curvature identity check");
  ProfileArgs kscal_args;
  kscal_args.attach(kscal);
  int ksamples = 20;
  double ktol = 1e-4, kstep = 0.0;
  std::uint64_t kseed = 1;
  kscal->add_option("--samples", ksamples);
  kscal->add_option("--tol", ktol);
  kscal->add_option("--step", kstep, "FD step (default 1e-4 max(1, rho))");
  kscal->add_option("--seed", kseed);

  // classify
  auto* classify = app.add_subcommand("classify", "regularity report for family parameters");
  std::string params_arg;
  std::vector<std::string> exact;
  classify->add_option("--params", params_arg, "params JSON (inline or file)");
  classify->add_option("--exact", exact, "p q d1 d3 as exact rationals n/d")->expected(4);
  std::vector<double> classify_scan;
  classify->add_option("--scan", classify_scan,
                       "p0 p1 np q0 q1 nq a0 a1 na b0 b1 nb: CSV over the grid")
      ->expected(12);

  // scan
  auto* scan = app.add_subcommand("scan", "CSV of reports over a (p, q, a, b) grid");
  ScanAxis P{0.1, 0.9, 5}, Q{0.1, 0.9, 5}, Aa{1.5, 1.5, 1}, Bb{1.5, 1.5, 1};
  int jobs = static_cast<int>(std::thread::hardware_concurrency());
  std::vector<double> pax, qax, aax, bax;  // each axis: lo hi n
  scan->add_option("--p", pax, "p axis: lo hi n")->expected(3);
  scan->add_option("--q", qax, "q axis: lo hi n")->expected(3);
  scan->add_option("--a", aax, "a axis: lo hi n")->expected(3);
  scan->add_option("--b", bax, "b axis: lo hi n")->expected(3);
  scan->add_option("--jobs", jobs, "worker threads");

  // family
  auto* family = app.add_subcommand("family", "distinguished sub-families and limits");
  std::string family_name, family_limit;
  double fp = 0.75, fq = 0.25, ftau = 0.0, fA = 0.5;
  long long fl2 = 1;
  family->add_option("name", family_name, "pc33 | af-equal-angles | af-q-tau | eh")->required();
  family->add_option("--p", fp);
  family->add_option("--q", fq);
  family->add_option("--tau", ftau);
  family->add_option("--l2", fl2);
  family->add_option("--A", fA);
  family->add_option("--limit", family_limit, "endpoint profile instead of a member");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    std::cerr << "UsageError: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (validate->parsed()) return cmd_profile_validate(validate_path);
    if (plot->parsed()) return cmd_profile_plot(plot_args, zmin, zmax, plot_n, output);
    if (psample->parsed()) return cmd_potential_sample(psample_args, rho, z, output);
    if (pgrid->parsed())
      return cmd_potential_grid(pgrid_args, rho0, rho1, nrho, gz0, gz1, nz, output);
    if (msample->parsed()) return cmd_metric_sample(msample_args, mrho, mz, output);
    if (maxis->parsed()) return cmd_metric_axis(maxis_args, output);
    if (mricci->parsed())
      return cmd_metric_check_ricci(mricci_args, samples, tol, mstep, seed, output);
    if (kpoly->parsed()) return cmd_kahler_polytope(kpoly_args, fig2, kalphas, output);
    if (kgrid->parsed())
      return cmd_kahler_moments_grid(kgrid_args, krho0, krho1, knrho, kz0, kz1, knz, output);
    if (kscal->parsed())
      return cmd_kahler_scalar_check(kscal_args, ksamples, ktol, kstep, kseed, output);
    if (classify->parsed()) {
      if (!classify_scan.empty()) {
        const auto& v = classify_scan;
        return cmd_scan({v[0], v[1], static_cast<int>(v[2])},
                        {v[3], v[4], static_cast<int>(v[5])},
                        {v[6], v[7], static_cast<int>(v[8])},
                        {v[9], v[10], static_cast<int>(v[11])},
                        static_cast<int>(std::thread::hardware_concurrency()), output);
      }
      return cmd_classify(params_arg, exact, output);
    }
    if (scan->parsed()) {
      auto axis = [](const std::vector<double>& v, ScanAxis dflt) {
        if (v.empty()) return dflt;
        return ScanAxis{v[0], v[1], static_cast<int>(v[2])};
      };
      return cmd_scan(axis(pax, P), axis(qax, Q), axis(aax, Aa), axis(bax, Bb), jobs, output);
    }
    if (family->parsed())
      return cmd_family(family_name, fp, fq, ftau, fl2, fA, family_limit, output);
    std::cerr << "UsageError: no subcommand\n";
    return kExitUsage;
  } catch (const error& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
