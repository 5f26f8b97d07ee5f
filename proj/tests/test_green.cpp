#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "diskzeroes/green.hpp"
#include "diskzeroes/parallel.hpp"
#include "diskzeroes/rng.hpp"

using namespace dz;

namespace {
constexpr double kPi = std::numbers::pi;

// independent oracle: truncated series sum_{m>=1} r^m / m = -log(1-r)
double kappa_series(double r) {
  double sum = 0.0, term = 1.0;
  for (int m = 1; m <= 4000; ++m) {
    term *= r;
    sum += term / m;
  }
  return sum;
}

// coarse SOR relaxation oracle for the Dirichlet problem on a union domain
double relaxation_dirichlet(const UnionDomain& d, cplx at,
                            const std::function<double(cplx)>& f) {
  const int n = 384;
  const double h = 2.0 / n;
  auto node = [&](int i, int j) { return cplx(-1.0 + i * h, -1.0 + j * h); };
  auto project = [&](cplx z) {  // closest boundary point of the nearest disk
    double best = HUGE_VAL;
    cplx proj = z;
    for (const auto& disk : d.disks) {
      double dist = std::abs(std::abs(z - disk.center) - disk.radius);
      if (dist < best) {
        best = dist;
        cplx v = z - disk.center;
        double len = std::abs(v);
        proj = len == 0.0 ? disk.center + cplx(disk.radius, 0.0)
                          : disk.center + v * (disk.radius / len);
      }
    }
    return proj;
  };
  std::vector<double> u((n + 1) * (n + 1), 0.0);
  std::vector<char> free_node((n + 1) * (n + 1), 0);
  auto idx = [&](int i, int j) { return i * (n + 1) + j; };
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j) {
      cplx z = node(i, j);
      if (contains(d, z) && inscribed_radius(d, z) > h) {
        free_node[idx(i, j)] = 1;
      } else {
        u[idx(i, j)] = f(project(z));
      }
    }
  const double omega = 2.0 / (1.0 + kPi / n);
  for (int sweep = 0; sweep < 4 * n; ++sweep) {
    for (int i = 1; i < n; ++i)
      for (int j = 1; j < n; ++j) {
        if (!free_node[idx(i, j)]) continue;
        double avg = 0.25 * (u[idx(i - 1, j)] + u[idx(i + 1, j)] +
                             u[idx(i, j - 1)] + u[idx(i, j + 1)]);
        u[idx(i, j)] += omega * (avg - u[idx(i, j)]);
      }
  }
  int i = static_cast<int>((at.real() + 1.0) / h);
  int j = static_cast<int>((at.imag() + 1.0) / h);
  double fx = (at.real() + 1.0) / h - i, fy = (at.imag() + 1.0) / h - j;
  return (1 - fx) * (1 - fy) * u[idx(i, j)] + fx * (1 - fy) * u[idx(i + 1, j)] +
         (1 - fx) * fy * u[idx(i, j + 1)] + fx * fy * u[idx(i + 1, j + 1)];
}
}  // namespace

TEST_SUITE_BEGIN("green");

TEST_CASE("green function of a disk") {
  CHECK(green_disk(Disk{0.0, 0.5}, 0.25, 0.0) ==
        doctest::Approx(std::log(2.0)).epsilon(1e-14));
  CHECK(green_disk(Disk{0.0, 0.5}, 0.7, 0.0) == 0.0);
  CHECK(green_disk(Disk{0.1, 0.5}, 0.2, 0.0) ==
        doctest::Approx(std::log(2.6)).epsilon(1e-14));
  CHECK(green_disk(Disk{0.1, 0.5}, 0.2, 0.2) == HUGE_VAL);
  CHECK_THROWS_AS(green_disk(Disk{0.0, 0.5}, 0.2, 0.7), std::domain_error);
}

TEST_CASE("green function symmetry on the closed-form path") {
  SplitRng rng(3, 0);
  Disk d{cplx(0.1, -0.05), 0.55};
  for (int i = 0; i < 1000; ++i) {
    double t1 = 0.55 * std::sqrt(rng.uniform());
    double t2 = 0.55 * std::sqrt(rng.uniform());
    cplx a = d.center + t1 * std::polar(1.0, 2 * kPi * rng.uniform());
    cplx b = d.center + t2 * std::polar(1.0, 2 * kPi * rng.uniform());
    if (std::abs(a - b) < 1e-6) continue;
    CHECK(green_disk(d, a, b) ==
          doctest::Approx(green_disk(d, b, a)).epsilon(1e-12));
    CHECK(green_disk(d, a, b) >= 0.0);
  }
}

TEST_CASE("walk on spheres basics") {
  MonteCarloConfig cfg{12, 20000, 1e-6, 100000};
  UnionDomain d{{Disk{0.1, 0.5}}};

  auto one = wos_integrate(d, 0.0, [](cplx) { return 1.0; }, cfg);
  CHECK(one.value == 1.0);
  CHECK(one.std_error == 0.0);

  auto re = wos_integrate(UnionDomain{{Disk{0.0, 0.7}}}, 0.0,
                          [](cplx w) { return w.real(); }, cfg);
  CHECK(std::abs(re.value) <= 3.0 * re.std_error + 1e-3);

  // harmonic extension of log|w| at the pole of an off-center disk
  auto lg = wos_integrate(d, 0.0, [](cplx w) { return std::log(std::abs(w)); },
                          cfg);
  CHECK(std::abs(lg.value - std::log(0.48)) <=
        std::max(3.0 * lg.std_error, 5e-3));

  CHECK_THROWS_AS(wos_integrate(d, 0.9, [](cplx) { return 1.0; }, cfg),
                  std::domain_error);
}

TEST_CASE("green on unions: exact paths and monotonicity") {
  UnionDomain single{{Disk{0.0, 0.5}}};
  MonteCarloConfig cfg{5, 20000, 1e-6, 100000};
  auto g1 = green_union(single, 0.25, cfg);
  CHECK(g1.value == doctest::Approx(std::log(2.0)).epsilon(1e-14));
  CHECK(g1.std_error == 0.0);

  CHECK(green_union(single, 0.999, cfg).value == 0.0);
  CHECK_THROWS_AS(green_union(single, 0.0, cfg), std::domain_error);

  UnionDomain bigger{{Disk{0.0, 0.5}, Disk{0.4, 0.3}}};
  auto g2 = green_union(bigger, 0.25, cfg);
  CHECK(g2.value >= std::log(2.0) - 3.0 * g2.std_error);

  // twenty random (disk, point) pairs against the closed form
  SplitRng rng(8, 1);
  for (int i = 0; i < 20; ++i) {
    cplx c = 0.3 * std::polar(1.0, 2 * kPi * rng.uniform());
    double r = 0.25 + 0.4 * rng.uniform();
    if (std::abs(c) >= r - 0.05) continue;
    Disk disk{c, r};
    cplx zeta = c + (0.05 + 0.9 * (r - 0.05) * rng.uniform()) *
                        std::polar(1.0, 2 * kPi * rng.uniform());
    if (std::abs(zeta) < 0.02 || !(std::abs(zeta - c) < r)) continue;
    // force the Monte Carlo path with a duplicated disk
    UnionDomain dup{{disk, disk}};
    MonteCarloConfig sub{derive_seed(100, i), 20000, 1e-6, 100000};
    auto est = green_union(dup, zeta, sub);
    CHECK(std::abs(est.value - green_disk(disk, zeta, 0.0)) <=
          std::max(3.0 * est.std_error, 1e-2));
  }
}

TEST_CASE("wos against a relaxation oracle on a genuine union") {
  UnionDomain d{{Disk{0.0, 0.5}, Disk{cplx(0.35, 0.2), 0.35}}};
  auto f = [](cplx w) { return std::log(std::abs(w)); };
  MonteCarloConfig cfg{21, 40000, 1e-6, 100000};
  auto est = wos_integrate(d, cplx(0.2, 0.1), f, cfg);
  double relax = relaxation_dirichlet(d, cplx(0.2, 0.1), f);
  CHECK(std::abs(est.value - relax) <= 3.0 * est.std_error + 0.03);
}

TEST_CASE("green sum over a sequence") {
  UnionDomain d{{Disk{0.0, 0.5}}};
  MonteCarloConfig cfg{9, 5000, 1e-6, 100000};
  ZeroSequence one{{{cplx(0.25, 0.0), 1}}};
  CHECK(green_sum_over_sequence(d, one, cfg).value ==
        doctest::Approx(std::log(2.0)));

  ZeroSequence outside{{{cplx(0.7, 0.0), 2}, {cplx(0.0, 0.9), 1}}};
  CHECK(green_sum_over_sequence(d, outside, cfg).value == 0.0);

  ZeroSequence both{{{cplx(0.25, 0.0), 2}, {cplx(0.4, 0.0), 1}}};
  CHECK(green_sum_over_sequence(d, both, cfg).value ==
        doctest::Approx(2.0 * std::log(2.0) + std::log(1.25)).epsilon(1e-12));

  ZeroSequence zero{{{cplx(0.0, 0.0), 1}}};
  CHECK_THROWS_AS(green_sum_over_sequence(d, zero, cfg),
                  std::invalid_argument);
}

TEST_CASE("kappa hat") {
  MonteCarloConfig cfg{14, 20000, 1e-6, 100000};
  QuadConfig quad{1e-6, 200000};
  for (double r : {0.3, 0.5, 0.9}) {
    auto est = kappa_hat(UnionDomain{{Disk{0.0, r}}}, cfg, quad);
    CHECK(est.std_error == 0.0);
    CHECK(est.value == doctest::Approx(kappa_series(r)).epsilon(1e-5));
    CHECK(est.value == doctest::Approx(-std::log(1.0 - r)).epsilon(1e-5));
  }
  auto tiny = kappa_hat(UnionDomain{{Disk{0.0, 1e-3}}}, cfg, quad);
  CHECK(tiny.value == doctest::Approx(1e-3).epsilon(2e-3));

  // a union that covers exactly D(0, 0.5): the Monte Carlo path must agree
  UnionDomain covered{{Disk{0.0, 0.5}, Disk{0.1, 0.2}}};
  auto mc = kappa_hat(covered, cfg, quad);
  CHECK(std::abs(mc.value - std::log(2.0)) <=
        std::max(3.0 * mc.std_error, 0.03));

  // enlarging the domain cannot decrease kappa-hat materially
  UnionDomain larger{{Disk{0.0, 0.5}, Disk{0.35, 0.3}}};
  auto big = kappa_hat(larger, cfg, quad);
  CHECK(big.value >= std::log(2.0) - 3.0 * big.std_error);

  // off-center single disk stays deterministic and positive
  auto off = kappa_hat(UnionDomain{{Disk{0.2, 0.5}}}, cfg, quad);
  CHECK(off.std_error == 0.0);
  CHECK(off.value > 0.0);
}

TEST_CASE("weighted green integral") {
  MonteCarloConfig cfg{14, 10000, 1e-6, 100000};
  QuadConfig quad{1e-6, 200000};
  UnionDomain half{{Disk{0.0, 0.5}}};
  UnionDomain nine{{Disk{0.0, 0.9}}};

  CHECK(weighted_green_integral(half, PowerLogWeight{1.0}, cfg, quad).value ==
        doctest::Approx(std::log(2.0)).epsilon(1e-5));
  CHECK(weighted_green_integral(half, PowerLogWeight{0.0}, cfg, quad).value ==
        0.0);
  CHECK(weighted_green_integral(nine, PowerLogWeight{2.0}, cfg, quad).value ==
        doctest::Approx(2.0 * std::log(10.0)).epsilon(1e-5));

  // tabulated weight on a centered disk: sum of atom masses times log(r/t)
  TabulatedWeight tab;
  for (double t : {0.05, 0.1, 0.2, 0.3})
    tab.knots.push_back({t, std::log(1.0 / (1.0 - t))});
  auto nu = riesz_measure_of(RadialWeight{tab});
  double byhand = 0.0;
  for (const auto& [t, m] : nu.atoms())
    if (t < 0.5) byhand += m * std::log(0.5 / t);
  auto est = weighted_green_integral(half, tab, cfg, quad);
  CHECK(est.value == doctest::Approx(byhand).epsilon(1e-8));
}

TEST_CASE("balayage of discrete measures") {
  UnionDomain d{{Disk{0.0, 0.6}}};
  MonteCarloConfig cfg{99, 4096, 1e-6, 100000};
  DiscreteMeasure mu;
  mu.points = {cplx(0.0, 0.0), cplx(0.9, 0.0)};
  mu.masses = {2.0, 0.5};
  auto swept = balayage_discrete(mu, d, cfg);

  CHECK(swept.total_mass() == doctest::Approx(2.5).epsilon(1e-12));
  // the outside mass is returned unchanged
  bool found_outside = false;
  for (size_t i = 0; i < swept.points.size(); ++i)
    if (swept.points[i] == cplx(0.9, 0.0) && swept.masses[i] == 0.5)
      found_outside = true;
  CHECK(found_outside);

  // swept mass sits on the circle |w| = 0.6 with uniform angles (chi-square)
  std::vector<int> bins(16, 0);
  int n = 0;
  for (size_t i = 0; i < swept.points.size(); ++i) {
    if (swept.masses[i] != 0.5) {
      CHECK(std::abs(std::abs(swept.points[i]) - 0.6) <= 2e-6);
      int b = static_cast<int>((std::arg(swept.points[i]) + kPi) / (2 * kPi) * 16);
      bins[std::min(b, 15)]++;
      ++n;
    }
  }
  CHECK(n == 4096);
  double chi2 = 0.0;
  double expect = n / 16.0;
  for (int b : bins) chi2 += (b - expect) * (b - expect) / expect;
  CHECK(chi2 < 37.7);  // df = 15, far tail
}

TEST_CASE("walk step cap overflows are counted and capped") {
  UnionDomain d{{Disk{0.0, 0.5}}};
  // a one-step cap forces every walk to overflow: rejected above 0.1%
  MonteCarloConfig broken{3, 2000, 1e-9, 1};
  CHECK_THROWS_AS(
      wos_integrate(d, 0.25, [](cplx) { return 1.0; }, broken),
      std::runtime_error);
}

TEST_CASE("berezin integral on a union domain is cached deterministically") {
  ZeroSequence seq{{{cplx(0.3, 0.0), 1}, {cplx(-0.1, 0.2), 1}}};
  UnionDomain disk{{Disk{0.0, 0.5}}};
  UnionDomain grown{{Disk{0.0, 0.5}, Disk{0.35, 0.3}}};
  MonteCarloConfig cfg{11, 256, 1e-4, 100000};
  QuadConfig quad{5e-3, 200000};

  auto base = green_integral(disk, Measure{BerezinMeasure{seq}}, cfg, quad);
  CHECK(base.std_error == 0.0);  // single-disk path is deterministic
  auto a = green_integral(grown, Measure{BerezinMeasure{seq}}, cfg, quad);
  auto b = green_integral(grown, Measure{BerezinMeasure{seq}}, cfg, quad);
  CHECK(a.value == b.value);  // node-keyed streams, bitwise stable
  // growing the domain only increases the green factor
  CHECK(a.value >= base.value - 0.05);
}

TEST_CASE("determinism independent of thread count") {
  UnionDomain d{{Disk{0.0, 0.5}, Disk{0.4, 0.3}}};
  MonteCarloConfig cfg{31, 8192, 1e-6, 100000};
  auto f = [](cplx w) { return std::log(std::abs(w)); };

  par::set_thread_count(1);
  auto a = wos_integrate(d, 0.25, f, cfg);
  auto ka = kappa_hat(d, cfg);
  par::set_thread_count(4);
  auto b = wos_integrate(d, 0.25, f, cfg);
  auto kb = kappa_hat(d, cfg);
  par::set_thread_count(1);

  CHECK(a.value == b.value);  // bitwise
  CHECK(a.std_error == b.std_error);
  CHECK(ka.value == kb.value);
  CHECK(ka.std_error == kb.std_error);

  auto c = wos_integrate(d, 0.25, f, cfg);
  CHECK(a.value == c.value);  // rerun with the same seed
}

TEST_SUITE_END();
