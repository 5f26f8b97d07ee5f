// Acceptance suite: one pass/fail line per criterion, exit code = number of
// failed criteria. Run with --cli PATH to include the CLI determinism check.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "diskzeroes/criteria.hpp"
#include "diskzeroes/io.hpp"
#include "diskzeroes/products.hpp"
#include "diskzeroes/quadrature.hpp"
#include "diskzeroes/rng.hpp"

using namespace dz;
namespace fs = std::filesystem;
constexpr double kPi = std::numbers::pi;

namespace {

struct Gate {
  int failures = 0;
  void check(int num, const std::string& name, bool ok,
             const std::string& detail) {
    std::printf("[%s] criterion %2d: %s (%s)\n", ok ? "PASS" : "FAIL", num,
                name.c_str(), detail.c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

std::vector<UnionDomain> dyadic_disks(int j_max) {
  std::vector<UnionDomain> fam;
  for (int j = 1; j <= j_max; ++j)
    fam.push_back(UnionDomain{{Disk{0.0, 1.0 - std::ldexp(1.0, -j)}}});
  return fam;
}

double radial_margin_oracle(const ZeroSequence& seq, double r) {
  double m = 0.0;
  for (const auto& e : seq.entries) {
    double lam = std::abs(e.point);
    if (lam < r) m += e.multiplicity * std::log(r / lam);
  }
  return m;
}

double fd_laplacian(const std::function<double(cplx)>& f, cplx z, double h) {
  return (f(z + cplx(h, 0)) + f(z - cplx(h, 0)) + f(z + cplx(0, h)) +
          f(z - cplx(0, h)) - 4.0 * f(z)) /
         (h * h);
}

std::string run_cli(const std::string& cli, const std::string& args,
                    const fs::path& out) {
  std::string cmd = cli + " " + args + " > /dev/null 2>&1";
  int rc = std::system(cmd.c_str());
  if (rc != 0 && rc != 256) return "";  // exit 0 or 1 are both fine here
  std::ifstream in(out, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
  std::string cli_path;
  for (int i = 1; i + 1 < argc; ++i)
    if (std::string(argv[i]) == "--cli") cli_path = argv[i + 1];

  Gate gate;
  const QuadConfig quad_fine{1e-6, 200000};

  // 1. closed-form vs Monte Carlo Green on twenty random disk/point pairs
  {
    auto t0 = std::chrono::steady_clock::now();
    SplitRng rng(2024, 0);
    bool ok = true;
    double worst = 0.0;
    int done = 0;
    while (done < 20) {
      cplx c = 0.35 * std::polar(1.0, 2 * kPi * rng.uniform());
      double r = 0.2 + 0.5 * rng.uniform();
      if (std::abs(c) >= r - 0.05) continue;  // pole 0 must be inside
      Disk disk{c, r};
      cplx zeta =
          c + (r * (0.1 + 0.85 * rng.uniform())) *
                  std::polar(1.0, 2 * kPi * rng.uniform());
      if (std::abs(zeta) < 0.02) continue;
      UnionDomain dom{{disk}};
      MonteCarloConfig cfg{derive_seed(77, done), 100000, 1e-6, 100000};
      Estimate h = wos_integrate(
          dom, zeta, [](cplx w) { return std::log(std::abs(w)); }, cfg);
      double wos = h.value - std::log(std::abs(zeta));
      double exact = green_disk(disk, zeta, 0.0);
      double err = std::abs(wos - exact);
      double allow = std::max(3.0 * h.std_error, 1e-2);
      worst = std::max(worst, err / allow);
      ok = ok && err <= allow;
      ++done;
    }
    double secs = seconds_since(t0);
    ok = ok && secs < 60.0;
    char buf[160];
    std::snprintf(buf, sizeof(buf),
                  "20 pairs at 1e5 walks, worst err/allowance %.3f, %.1f s",
                  worst, secs);
    gate.check(1, "closed-form vs walk-on-spheres green", ok, buf);
  }

  // 2. kappa-hat identity on centered disks against the series oracle
  {
    bool ok = true;
    std::string detail;
    for (double r : {0.3, 0.5, 0.9}) {
      auto t0 = std::chrono::steady_clock::now();
      auto est = kappa_hat(UnionDomain{{Disk{0.0, r}}},
                           MonteCarloConfig{1, 1000, 1e-6, 10000}, quad_fine);
      double secs = seconds_since(t0);
      double oracle = 0.0, term = 1.0;  // sum r^m / m
      for (int m = 1; m <= 6000; ++m) {
        term *= r;
        oracle += term / m;
      }
      bool this_ok =
          std::abs(est.value - oracle) <= 1e-3 && est.std_error == 0.0 &&
          secs < 5.0;
      ok = ok && this_ok;
      char buf[80];
      std::snprintf(buf, sizeof(buf), "r=%.1f err %.2e %.2fs; ", r,
                    std::abs(est.value - oracle), secs);
      detail += buf;
    }
    gate.check(2, "kappa-hat equals -log(1-r) on pure disks", ok, detail);
  }

  // 3. Poisson-Jensen residuals, each case under a second
  {
    QuadConfig q{1e-10, 200000};
    std::vector<PJCase> cases{
        PJLogAbs{cplx(0.3, 0.0)},
        PJLogBlaschke{ZeroSequence{{{cplx(0.3, 0.0), 1}}}},
        PJLogAbs{cplx(0.7, 0.0)}};
    bool ok = true;
    std::string detail = "residuals";
    for (const auto& c : cases) {
      auto t0 = std::chrono::steady_clock::now();
      double res = poisson_jensen_residual(c, 0.5, q);
      double secs = seconds_since(t0);
      ok = ok && res < 1e-6 && secs < 1.0;
      char buf[40];
      std::snprintf(buf, sizeof(buf), " %.1e (%.2fs)", res, secs);
      detail += buf;
    }
    gate.check(3, "poisson-jensen residuals vanish", ok, detail);
  }

  // 4. Blaschke dichotomy at p = 0, frozen direct-summation oracle values
  {
    MonteCarloConfig cfg{1, 1000, 1e-6, 10000};
    auto family = dyadic_disks(10);
    auto pass = criterion_radial(dyadic_sequence(20), PowerLogWeight{0.0},
                                 family, cfg, quad_fine);
    // direct-summation oracle over the same family, frozen expected value
    const double oracle_max = 1.231314976844065;
    double recomputed = -HUGE_VAL;
    for (const auto& d : family)
      recomputed = std::max(
          recomputed, radial_margin_oracle(dyadic_sequence(20),
                                           d.disks[0].radius));
    bool pass_ok = pass.verdict == Verdict::Pass &&
                   std::abs(pass.max_margin - oracle_max) <= 1e-9 &&
                   std::abs(recomputed - oracle_max) <= 1e-12;

    auto fail = criterion_radial(harmonic_sequence(2000), PowerLogWeight{0.0},
                                 family, cfg, quad_fine);
    auto at09 = criterion_radial(harmonic_sequence(2000), PowerLogWeight{0.0},
                                 {UnionDomain{{Disk{0.0, 0.9}}}}, cfg,
                                 quad_fine);
    double m_top = fail.records[9].margin;   // r = 1 - 2^-10
    double m_09 = at09.records[0].margin;    // r = 0.9
    const double oracle_top = 5.931960245872828;
    const double oracle_09 = 1.354340452073609;
    bool fail_ok = fail.verdict == Verdict::Fail &&
                   std::abs(m_top - oracle_top) <= 1e-9 &&
                   std::abs(m_09 - oracle_09) <= 1e-9 &&
                   (m_top - m_09) >= 3.0;
    char buf[200];
    std::snprintf(buf, sizeof(buf),
                  "PASS max margin %.6f (oracle), FAIL margins %.3f vs %.3f, "
                  "gap %.3f >= 3",
                  pass.max_margin, m_top, m_09, m_top - m_09);
    gate.check(4, "blaschke dichotomy at p=0", pass_ok && fail_ok, buf);
  }

  // 5. the failing sequence passes at p = 2
  {
    MonteCarloConfig cfg{1, 1000, 1e-6, 10000};
    auto rep = criterion_radial(harmonic_sequence(2000), PowerLogWeight{2.0},
                                dyadic_disks(10), cfg, quad_fine);
    char buf[120];
    std::snprintf(buf, sizeof(buf), "verdict %s, last margin %.3f",
                  verdict_name(rep.verdict).c_str(), rep.records[9].margin);
    gate.check(5, "p-shift turns FAIL into PASS", rep.verdict == Verdict::Pass,
               buf);
  }

  // 6. kernel coincidence suite at 1e3 random points, 1e-12
  {
    auto t0 = std::chrono::steady_clock::now();
    SplitRng rng(55, 0);
    double worst = 0.0;
    int n = 0;
    while (n < 1000) {
      double tt = 0.02 + 0.95 * rng.uniform();
      cplx zeta = tt * std::polar(1.0, 2 * kPi * rng.uniform());
      cplx z = 0.97 * std::sqrt(rng.uniform()) *
               std::polar(1.0, 2 * kPi * rng.uniform());
      if (std::abs(z - zeta) < 1e-5) continue;
      ++n;
      double blas = eval_kernel(BlaschkeKernel{}, zeta, z);
      double bar = eval_kernel(BlaschkeBarKernel{}, zeta, z);
      double tq = std::abs(zeta);
      double hb = std::log(tq * std::abs(zeta - z) *
                           std::abs(2.0 - tq * tq - std::conj(zeta) * z) /
                           std::norm(1.0 - std::conj(zeta) * z));
      double scale = std::max(1.0, std::abs(blas));
      worst = std::max(
          worst,
          std::abs(eval_kernel(BellerKernel{1.0}, zeta, z) - blas) / scale);
      worst = std::max(worst,
                       std::abs(eval_kernel(BellerKernel{2.0}, zeta, z) -
                                eval_kernel(HorowitzKernel{}, zeta, z)) /
                           scale);
      worst = std::max(
          worst, std::abs(eval_kernel(BomashKernel{1.0}, zeta, z) - bar) /
                     std::max(1.0, std::abs(bar)));
      worst = std::max(
          worst, std::abs(eval_kernel(DzhrbashianKernel{0}, zeta, z) - bar) /
                     std::max(1.0, std::abs(bar)));
      worst = std::max(
          worst, std::abs(eval_kernel(BomashKernel{2.0}, zeta, z) - hb) /
                     std::max(1.0, std::abs(hb)));
    }
    double secs = seconds_since(t0);
    char buf[100];
    std::snprintf(buf, sizeof(buf), "worst relative gap %.2e, %.2f s", worst,
                  secs);
    gate.check(6, "kernel coincidence identities", worst <= 1e-12 && secs < 1.0,
               buf);
  }

  // 7. harmonicity of h and the sub-mean-value inequality, per kernel
  {
    std::vector<Kernel> kernels{
        LogKernel{},           BlaschkeKernel{},
        BlaschkeBarKernel{},   DzhrbashianKernel{2},
        HorowitzKernel{},      BellerKernel{3.5},
        BomashKernel{2.0},     KorenblumKernel{},
        HadamardWeierstrassKernel{2},
        WeierstrassKernel{0.5, {1.0, 2.0, 4.0}, {1, 2, 3}}};
    SplitRng rng(66, 1);
    bool ok = true;
    double worst_lap = 0.0;
    for (const auto& k : kernels) {
      bool plane = !disk_kernel(k);
      for (int i = 0; i < 100; ++i) {
        double tt = plane ? 0.2 + 3.0 * rng.uniform()
                          : 0.1 + 0.8 * rng.uniform();
        cplx zeta = tt * std::polar(1.0, 2 * kPi * rng.uniform());
        cplx z = (plane ? 1.8 : 0.6) * std::sqrt(rng.uniform()) *
                 std::polar(1.0, 2 * kPi * rng.uniform());
        auto h = [&](cplx w) { return harmonic_component(k, zeta, w); };
        double scale = std::max(1.0, std::abs(h(z)));
        double lap = std::abs(fd_laplacian(h, z, 5e-4)) / scale;
        worst_lap = std::max(worst_lap, lap);
        ok = ok && lap <= 1e-4;
      }
      int done = 0;
      while (done < 100) {
        double tt = plane ? 0.2 + 3.0 * rng.uniform()
                          : 0.1 + 0.75 * rng.uniform();
        cplx zeta = tt * std::polar(1.0, 2 * kPi * rng.uniform());
        cplx z = (plane ? 1.8 : 0.9) * std::sqrt(rng.uniform()) *
                 std::polar(1.0, 2 * kPi * rng.uniform());
        if (std::abs(z - zeta) < 0.05) continue;
        ++done;
        double v = eval_kernel(k, zeta, z);
        double avg = 0.0;
        for (int j = 0; j < 256; ++j)
          avg += eval_kernel(
              k, zeta, z + 0.01 * std::polar(1.0, 2 * kPi * (j + 0.5) / 256));
        avg /= 256.0;
        ok = ok && v <= avg + 1e-7 * std::max(1.0, std::abs(avg));
      }
    }
    char buf[100];
    std::snprintf(buf, sizeof(buf),
                  "10 kernels x 100 points, worst |lap|/scale %.2e", worst_lap);
    gate.check(7, "harmonic components and sub-mean values", ok, buf);
  }

  // 8. region geometry: D2 inside Box6 and D1; Q below its explicit bound
  {
    SplitRng rng(88, 2);
    bool ok = true;
    long violations = 0;
    for (double x : {0.90, 0.95, 0.99}) {
      CarlesonBox box{x, 6.0};
      double t_lo = std::max(0.0, x - std::sqrt(1.0 - x * x));
      double th_hi = 0.5 * kPi * std::sqrt(1.0 - x * x);
      int accepted = 0;
      while (accepted < 10000) {
        double t = t_lo + (1.0 - t_lo) * rng.uniform();
        double th = th_hi * (2.0 * rng.uniform() - 1.0);
        cplx zeta = t * std::polar(1.0, th);
        if (!d2_region_test(zeta, x)) continue;
        ++accepted;
        if (!box_contains(box, zeta) ||
            !(pseudo_distance(zeta, x) < std::abs(zeta)) ||
            !(zeta.real() > 0.0))
          ++violations;
      }
    }
    ok = violations == 0;
    QuadConfig q{1e-3, 200000};
    Measure nu{RadialMeasure::power_log_riesz(1.0)};
    std::string detail = "0 region violations; ";
    for (double x : {0.92, 0.95, 0.98}) {
      double qv = q_function(BomashKernel{2.0}, nu, x, q);
      for (double eps : {0.25, 0.5}) {
        double bound = q_upper_bound(PowerLogWeight{1.0}, x, eps, q);
        if (!(qv <= bound)) ok = false;
        if (eps == 0.5) {
          char buf[64];
          std::snprintf(buf, sizeof(buf), "Q(%.2f)=%.2f<=%.0f ", x, qv, bound);
          detail += buf;
        }
      }
    }
    if (violations > 0)
      detail = std::to_string(violations) + " region violations; " + detail;
    gate.check(8, "D2 geometry and the Q-function bound", ok, detail);
  }

  // 9. radial box-mass closed form alpha p (1 + alpha) / pi
  {
    bool ok = true;
    double worst = 0.0;
    for (double p : {1.0, 2.0}) {
      auto nu = RadialMeasure::power_log_riesz(p);
      for (double r : {0.9, 0.95}) {
        double got = box_mass(nu, r, 7.0, QuadConfig{1e-9, 200000});
        double expect = 7.0 * p * 8.0 / kPi;
        worst = std::max(worst, std::abs(got - expect));
        ok = ok && std::abs(got - expect) <= 1e-6;
      }
    }
    char buf[80];
    std::snprintf(buf, sizeof(buf), "worst abs err %.2e vs 1e-6", worst);
    gate.check(9, "box-mass closed form at alpha=7", ok, buf);
  }

  // 10. Berezin consistency: Laplacian identity and verdict agreement
  {
    ZeroSequence probe{{{cplx(0.4, 0.1), 1}, {cplx(-0.3, 0.45), 2},
                        {cplx(0.0, -0.6), 1}, {cplx(0.2, 0.0), 1}}};
    SplitRng rng(99, 3);
    bool lap_ok = true;
    for (int i = 0; i < 100; ++i) {
      double t = 0.85 * std::sqrt(rng.uniform());
      cplx z = t * std::polar(1.0, 2 * kPi * rng.uniform());
      double lap = fd_laplacian(
          [&](cplx w) { return k_lambda(probe, w); }, z, 1e-4);
      double expect = 2.0 * kPi * berezin_density(probe, z);
      if (std::abs(lap - expect) > 0.01 * std::abs(expect)) lap_ok = false;
    }
    MonteCarloConfig cfg{1, 1000, 1e-6, 10000};
    QuadConfig q{1e-3, 200000};
    auto fam = dyadic_disks(10);
    auto bz_pass = criterion_berezin(dyadic_sequence(20), 0.0, fam, cfg, q);
    auto bz_fail = criterion_berezin(harmonic_sequence(2000), 0.0, fam, cfg, q);
    bool agree = bz_pass.verdict == Verdict::Pass &&
                 bz_fail.verdict == Verdict::Fail;
    char buf[120];
    std::snprintf(buf, sizeof(buf),
                  "laplacian id %s; berezin verdicts %s / %s",
                  lap_ok ? "ok" : "off",
                  verdict_name(bz_pass.verdict).c_str(),
                  verdict_name(bz_fail.verdict).c_str());
    gate.check(10, "berezin consistency", lap_ok && agree, buf);
  }

  // 11. CLI determinism: byte-identical reruns, independent of --threads
  {
    bool ok = false;
    std::string detail = "cli path not provided";
    if (!cli_path.empty()) {
      fs::path dir = fs::temp_directory_path() / "diskzeroes_acceptance";
      fs::create_directories(dir);
      fs::path cfg = dir / "criterion.json";
      io::write_file(cfg.string(), R"({
        "sequence": {"model": "dyadic", "k_max": 12},
        "weight": {"kind": "power_log", "p": 1.0},
        "family": {"seed": 5, "count": 4, "a": 0.3},
        "mc": {"seed": 9, "walks": 2000, "shell": 1e-6, "max_steps": 100000},
        "quad": {"tol": 1e-6, "max_cells": 200000}
      })");
      fs::path o1 = dir / "r1.json", o2 = dir / "r2.json", o3 = dir / "r3.json";
      fs::path o4 = dir / "r4.csv", o5 = dir / "r5.csv";
      std::string base = "criterion radial --config " + cfg.string();
      fs::path o6 = dir / "r6.json";
      std::string a = run_cli(cli_path, base + " --threads 1 --out " + o1.string(), o1);
      std::string b = run_cli(cli_path, base + " --threads 4 --out " + o2.string(), o2);
      std::string c = run_cli(cli_path, base + " --threads 1 --out " + o3.string(), o3);
      std::string d = run_cli(cli_path,
                              base + " --threads 2 --format csv --out " + o4.string(), o4);
      std::string e = run_cli(cli_path,
                              base + " --threads 8 --format csv --out " + o5.string(), o5);
      std::string f = run_cli("DISKZEROES_THREADS=6 " + cli_path,
                              base + " --out " + o6.string(), o6);
      ok = !a.empty() && a == b && a == c && a == f && !d.empty() && d == e;
      detail = ok ? "json and csv reports byte-identical across reruns, "
                    "--threads 1/2/4/8, and DISKZEROES_THREADS=6"
                  : "outputs differ across reruns or thread counts";
    }
    gate.check(11, "cli reproducibility", ok, detail);
  }

  std::printf("%d of 11 criteria passed\n", 11 - gate.failures);
  return gate.failures;
}
