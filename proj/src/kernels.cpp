#include "diskzeroes/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "diskzeroes/quadrature.hpp"

namespace dz {

namespace {
constexpr double kPi = std::numbers::pi;

double pos(double x) { return x > 0.0 ? x : 0.0; }

// (1 - w)^s, exact repeated product for integer s
cplx one_minus_pow(cplx w, double s) {
  double si = std::round(s);
  if (si == s && si >= 0.0 && si <= 64.0) {
    cplx base = 1.0 - w;
    cplx acc = 1.0;
    for (int i = 0; i < static_cast<int>(si); ++i) acc *= base;
    return acc;
  }
  return std::exp(s * std::log(1.0 - w));  // principal branch; Re(1-w) > 0 here
}

// psi_s(B) = (1 - (1-B)^s)/B, the zero-free cofactor of the Beller/Bomash
// kernels; series near B = 0 where the quotient would cancel
cplx beller_cofactor(cplx b, double s) {
  if (std::abs(b) < 1e-2) {
    cplx term = s;  // C(s,1)
    cplx sum = term;
    cplx bp = 1.0;
    for (int k = 2; k <= 9; ++k) {
      term *= -(s - (k - 1)) / static_cast<double>(k);
      bp *= b;
      sum += term * bp;
    }
    return sum;
  }
  return (1.0 - one_minus_pow(b, s)) / b;
}

double log_abs(cplx w) { return std::log(std::abs(w)); }

int weierstrass_genus(const WeierstrassKernel& k, double r) {
  // r >= r0 assumed; schedule is left-closed/right-open, clamped at the end
  for (size_t n = 0; n < k.radii.size(); ++n)
    if (r < k.radii[n]) return k.genera[n];
  return k.genera.empty() ? 0 : k.genera.back();
}

double hw_sum(cplx w, int genus) {  // sum_{k=1}^q Re(w^k)/k
  double sum = 0.0;
  cplx p = 1.0;
  for (int k = 1; k <= genus; ++k) {
    p *= w;
    sum += p.real() / k;
  }
  return sum;
}
}  // namespace

cplx blaschke_factor(cplx zeta, cplx z) {
  if (zeta == cplx(0.0, 0.0)) return -z;
  return (std::abs(zeta) / zeta) * (zeta - z) / (1.0 - std::conj(zeta) * z);
}

cplx blaschke_bar_factor(cplx zeta, cplx z) {
  return std::conj(zeta) * (zeta - z) / (1.0 - std::conj(zeta) * z);
}

double pseudo_distance(cplx zeta, cplx z) {
  return std::abs((zeta - z) / (1.0 - std::conj(zeta) * z));
}

void validate_kernel(const Kernel& k) {
  if (const auto* d = std::get_if<DzhrbashianKernel>(&k)) {
    if (d->genus < 0) throw std::invalid_argument("Dzhrbashian genus must be >= 0");
  } else if (const auto* b = std::get_if<BellerKernel>(&k)) {
    if (!(b->s > 0.0 && b->s <= 6.0))
      throw std::invalid_argument("Beller kernel needs 0 < s <= 6");
  } else if (const auto* bo = std::get_if<BomashKernel>(&k)) {
    if (!(bo->s >= 1.0)) throw std::invalid_argument("Bomash kernel needs s >= 1");
  } else if (const auto* hw = std::get_if<HadamardWeierstrassKernel>(&k)) {
    if (hw->genus < 0)
      throw std::invalid_argument("Hadamard-Weierstrass genus must be >= 0");
  } else if (const auto* w = std::get_if<WeierstrassKernel>(&k)) {
    if (!(w->r0 > 0.0)) throw std::invalid_argument("Weierstrass kernel needs r0 > 0");
    if (w->radii.size() != w->genera.size())
      throw std::invalid_argument("Weierstrass kernel needs one genus per radius");
    double prev = w->r0;
    for (size_t i = 0; i < w->radii.size(); ++i) {
      if (!(w->radii[i] > prev))
        throw std::invalid_argument("Weierstrass radii must increase from r0");
      if (w->genera[i] < 0)
        throw std::invalid_argument("Weierstrass genera must be >= 0");
      prev = w->radii[i];
    }
  }
}

bool disk_kernel(const Kernel& k) {
  return !std::holds_alternative<LogKernel>(k) &&
         !std::holds_alternative<HadamardWeierstrassKernel>(k) &&
         !std::holds_alternative<WeierstrassKernel>(k);
}

bool in_support(const Kernel& k, cplx zeta) {
  bool nonzero = zeta != cplx(0.0, 0.0);
  if (std::holds_alternative<LogKernel>(k) ||
      std::holds_alternative<WeierstrassKernel>(k))
    return true;
  if (std::holds_alternative<HadamardWeierstrassKernel>(k)) return nonzero;
  if (std::abs(zeta) >= 1.0) return false;
  if (std::holds_alternative<BlaschkeBarKernel>(k) ||
      std::holds_alternative<DzhrbashianKernel>(k) ||
      std::holds_alternative<BomashKernel>(k) ||
      std::holds_alternative<KorenblumKernel>(k))
    return nonzero;
  return true;
}

namespace {
void check_args(const Kernel& k, cplx zeta, cplx z) {
  validate_kernel(k);
  if (!in_support(k, zeta))
    throw std::domain_error("kernel argument zeta outside the support set");
  if (disk_kernel(k) && !(std::abs(z) < 1.0))
    throw std::domain_error("disk kernel needs |z| < 1");
}
}  // namespace

double eval_kernel(const Kernel& k, cplx zeta, cplx z) {
  check_args(k, zeta, z);
  return std::visit(
      [&](const auto& kk) -> double {
        using T = std::decay_t<decltype(kk)>;
        if constexpr (std::is_same_v<T, LogKernel>) {
          return log_abs(zeta - z);
        } else if constexpr (std::is_same_v<T, BlaschkeKernel>) {
          if (zeta == cplx(0.0, 0.0)) return std::log(std::abs(z));
          return log_abs(zeta - z) - log_abs(1.0 - std::conj(zeta) * z);
        } else if constexpr (std::is_same_v<T, BlaschkeBarKernel>) {
          return std::log(std::abs(zeta)) + log_abs(zeta - z) -
                 log_abs(1.0 - std::conj(zeta) * z);
        } else if constexpr (std::is_same_v<T, DzhrbashianKernel>) {
          cplx w = (1.0 - std::norm(zeta)) / (1.0 - std::conj(zeta) * z);
          return std::log(std::abs(zeta)) + log_abs(zeta - z) -
                 log_abs(1.0 - std::conj(zeta) * z) + hw_sum(w, kk.genus);
        } else if constexpr (std::is_same_v<T, HorowitzKernel>) {
          return log_abs(1.0 - one_minus_pow(blaschke_factor(zeta, z), 2.0));
        } else if constexpr (std::is_same_v<T, BellerKernel>) {
          return log_abs(1.0 - one_minus_pow(blaschke_factor(zeta, z), kk.s));
        } else if constexpr (std::is_same_v<T, BomashKernel>) {
          return log_abs(1.0 -
                         one_minus_pow(blaschke_bar_factor(zeta, z), kk.s));
        } else if constexpr (std::is_same_v<T, KorenblumKernel>) {
          cplx u = zeta / std::abs(zeta);
          // the Herglotz factor has a boundary pole at z -> u; integrators
          // exclude cells around it
          return log_abs(zeta - z) - log_abs(1.0 - std::conj(zeta) * z) +
                 std::log(1.0 / std::abs(zeta)) * ((u + z) / (u - z)).real();
        } else if constexpr (std::is_same_v<T, HadamardWeierstrassKernel>) {
          return log_abs(1.0 - z / zeta) + hw_sum(z / zeta, kk.genus);
        } else {  // Weierstrass
          double r = std::abs(zeta);
          if (r < kk.r0) return log_abs(zeta - z);
          int q = weierstrass_genus(kk, r);
          return log_abs(1.0 - z / zeta) + hw_sum(z / zeta, q);
        }
      },
      k);
}

double harmonic_component(const Kernel& k, cplx zeta, cplx z) {
  check_args(k, zeta, z);
  return std::visit(
      [&](const auto& kk) -> double {
        using T = std::decay_t<decltype(kk)>;
        const bool origin = zeta == cplx(0.0, 0.0);
        const double log_one_mz =
            origin ? 0.0 : log_abs(1.0 - std::conj(zeta) * z);
        if constexpr (std::is_same_v<T, LogKernel>) {
          return 0.0;
        } else if constexpr (std::is_same_v<T, BlaschkeKernel>) {
          return -log_one_mz;
        } else if constexpr (std::is_same_v<T, BlaschkeBarKernel>) {
          return std::log(std::abs(zeta)) - log_one_mz;
        } else if constexpr (std::is_same_v<T, DzhrbashianKernel>) {
          cplx w = (1.0 - std::norm(zeta)) / (1.0 - std::conj(zeta) * z);
          return std::log(std::abs(zeta)) - log_one_mz + hw_sum(w, kk.genus);
        } else if constexpr (std::is_same_v<T, HorowitzKernel>) {
          return -log_one_mz +
                 log_abs(beller_cofactor(blaschke_factor(zeta, z), 2.0));
        } else if constexpr (std::is_same_v<T, BellerKernel>) {
          return -log_one_mz +
                 log_abs(beller_cofactor(blaschke_factor(zeta, z), kk.s));
        } else if constexpr (std::is_same_v<T, BomashKernel>) {
          return std::log(std::abs(zeta)) - log_one_mz +
                 log_abs(beller_cofactor(blaschke_bar_factor(zeta, z), kk.s));
        } else if constexpr (std::is_same_v<T, KorenblumKernel>) {
          cplx u = zeta / std::abs(zeta);
          return -log_one_mz +
                 std::log(1.0 / std::abs(zeta)) * ((u + z) / (u - z)).real();
        } else if constexpr (std::is_same_v<T, HadamardWeierstrassKernel>) {
          return -std::log(std::abs(zeta)) + hw_sum(z / zeta, kk.genus);
        } else {  // Weierstrass
          double r = std::abs(zeta);
          if (r < kk.r0) return 0.0;
          int q = weierstrass_genus(kk, r);
          return -std::log(r) + hw_sum(z / zeta, q);
        }
      },
      k);
}

namespace {

// suitability integral of the kernel truncated at radius `cutoff`
double suitability_value(const Kernel& k, const RadialMeasure& nu,
                         double cutoff, double near0, const QuadConfig& cfg) {
  auto ipow = [&](double w, double c) {
    return nu.integrate([w](double t) { return std::pow(1.0 - t, w); }, 0.0, c,
                        cfg);
  };
  return std::visit(
      [&](const auto& kk) -> double {
        using T = std::decay_t<decltype(kk)>;
        if constexpr (std::is_same_v<T, LogKernel>) {
          return nu.cumulative(cutoff);
        } else if constexpr (std::is_same_v<T, BlaschkeKernel> ||
                             std::is_same_v<T, BlaschkeBarKernel>) {
          return ipow(1.0, cutoff);
        } else if constexpr (std::is_same_v<T, DzhrbashianKernel>) {
          return ipow(kk.genus + 1.0, cutoff) + near0;
        } else if constexpr (std::is_same_v<T, HorowitzKernel>) {
          return ipow(2.0, cutoff);
        } else if constexpr (std::is_same_v<T, BellerKernel>) {
          return ipow(kk.s, cutoff);
        } else if constexpr (std::is_same_v<T, BomashKernel>) {
          return ipow(kk.s, cutoff) + near0;
        } else if constexpr (std::is_same_v<T, KorenblumKernel>) {
          return ipow(2.0, cutoff) + near0;
        } else if constexpr (std::is_same_v<T, HadamardWeierstrassKernel>) {
          // the cutoff ladder pushes the plane truncation radius to infinity;
          // the cumulative is a step function, so split at the atom radii
          double big = 1.0 / (1.0 - cutoff);
          auto tail = [&](double p, double lo, double hi) {
            std::vector<double> pts{lo, hi};
            for (const auto& [r, m] : nu.atoms())
              if (r > lo && r < hi) pts.push_back(r);
            return integrate_segments(
                [&](double t) { return nu.cumulative(t) / std::pow(t, p); },
                pts, cfg);
          };
          double inner = tail(kk.genus + 1.0, 0.0, 1.0);
          double outer = big <= 1.0 ? 0.0 : tail(kk.genus + 2.0, 1.0, big);
          return inner + outer;
        } else {  // Weierstrass
          double big = 1.0 / (1.0 - cutoff);
          auto tail = [&](double p, double lo, double hi) {
            std::vector<double> pts{lo, hi};
            for (const auto& [r, m] : nu.atoms())
              if (r > lo && r < hi) pts.push_back(r);
            return integrate_segments(
                [&](double t) { return nu.cumulative(t) / std::pow(t, p); },
                pts, cfg);
          };
          double total = 0.0;
          double prev = kk.r0;
          for (size_t n = 0; n < kk.radii.size() && prev < big; ++n) {
            total += tail(kk.genera[n] + 2.0, prev, std::min(kk.radii[n], big));
            prev = kk.radii[n];
          }
          if (prev < big) {
            int q = kk.genera.empty() ? 0 : kk.genera.back();
            total += tail(q + 2.0, prev, big);
          }
          return total;
        }
      },
      k);
}

bool needs_near0(const Kernel& k) {
  return std::holds_alternative<DzhrbashianKernel>(k) ||
         std::holds_alternative<BomashKernel>(k) ||
         std::holds_alternative<KorenblumKernel>(k);
}
}  // namespace

SuitabilityReport suitability_margin(const Kernel& k, const RadialMeasure& nu,
                                     double cutoff) {
  validate_kernel(k);
  if (!(cutoff > 0.0 && cutoff < 1.0))
    throw std::invalid_argument("suitability cutoff must lie in (0, 1)");
  if (nu.is_zero()) return {0.0, Convergence::Convergent};

  QuadConfig cfg{1e-8, 200000};
  double near0 = 0.0;
  if (needs_near0(k)) {
    if (!nu.atoms().empty() && nu.atoms().front().first == 0.0)
      throw std::invalid_argument(
          "measure has an atom at 0; kernel is supported by the punctured disk");
    std::vector<double> pts{0.0, 0.5};
    for (const auto& [r, m] : nu.atoms())
      if (r < 0.5) pts.push_back(r);
    near0 = integrate_segments(
        [&](double t) { return nu.cumulative(t) / t; }, pts, cfg);
  }

  SuitabilityReport rep;
  rep.value = suitability_value(k, nu, cutoff, near0, cfg);

  double prev = 0.0;
  int growing = 0;
  bool stable = false;
  for (int j = 1; j <= 20; ++j) {
    double c = 1.0 - std::ldexp(1.0, -j);
    double v = suitability_value(k, nu, c, near0, cfg);
    if (j > 1) {
      double inc = v - prev;
      stable = std::abs(inc) <= 1e-6;
      if (v >= prev * 1.10 && v > prev) {
        ++growing;
      } else {
        growing = 0;
      }
    }
    prev = v;
  }
  if (stable)
    rep.flag = Convergence::Convergent;
  else if (growing >= 3)
    rep.flag = Convergence::Divergent;
  else
    rep.flag = Convergence::Inconclusive;
  return rep;
}

namespace {

double potential_radial(const Kernel& k, const RadialMeasure& nu, cplx z,
                        const QuadConfig& cfg) {
  QuadConfig inner = cfg;
  inner.tol = cfg.tol * 0.1;
  double r = std::abs(z);
  // Angular mean of k on the circle of radius t. Near the pole circle t = r
  // the log factor is averaged exactly (log max(t, r)) and only the harmonic
  // component sampled; away from it the kernel is averaged directly, which
  // keeps the mean relatively accurate where k nearly vanishes against a
  // density blowing up at the boundary.
  auto term = [&](double t) {
    if (t >= 0.5 * (1.0 + r)) {
      return circle_average(
          [&](double th) {
            return eval_kernel(k, t * cplx(std::cos(th), std::sin(th)), z);
          },
          inner);
    }
    double hbar = circle_average(
        [&](double th) {
          return harmonic_component(k, t * cplx(std::cos(th), std::sin(th)),
                                    z);
        },
        inner);
    return std::log(std::max(t, r)) + hbar;
  };
  double hi = 1.0;
  if (!disk_kernel(k) && !nu.atoms().empty())
    hi = nu.atoms().back().first + 1.0;
  QuadConfig half = cfg;
  half.tol = cfg.tol * 0.25;
  std::vector<double> cuts{0.0, hi};
  if (r > 0.0 && r < hi) cuts.push_back(r);                // kink of log max
  if (0.5 * (1.0 + r) < hi) cuts.push_back(0.5 * (1.0 + r));  // scheme switch
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  double out = 0.0;
  for (size_t i = 0; i + 1 < cuts.size(); ++i)
    out += nu.integrate(term, cuts[i], cuts[i + 1], half);
  return out;
}

double potential_discrete(const Kernel& k, const DiscreteMeasure& mu, cplx z) {
  double sum = 0.0;
  for (size_t i = 0; i < mu.points.size(); ++i) {
    double v = eval_kernel(k, mu.points[i], z);
    if (v == -HUGE_VAL) return -HUGE_VAL;  // z sits on an atom
    sum += mu.masses[i] * v;
  }
  return sum;
}

RadialMeasure lebesgue_radial() {
  return RadialMeasure::from_density([](double t) { return 2.0 * kPi * t; },
                                     [](double t) { return kPi * t * t; });
}
}  // namespace

double potential(const Kernel& k, const Measure& nu, cplx z,
                 const QuadConfig& cfg) {
  validate_kernel(k);
  if (const auto* mu = std::get_if<DiscreteMeasure>(&nu))
    return potential_discrete(k, *mu, z);
  if (const auto* rad = std::get_if<RadialMeasure>(&nu)) {
    if (rad->is_zero()) return 0.0;
    auto rep = suitability_margin(k, *rad, 1.0 - std::ldexp(1.0, -16));
    if (rep.flag == Convergence::Divergent)
      throw std::domain_error("kernel is not suitable for the measure");
    return potential_radial(k, *rad, z, cfg);
  }
  const auto& bz = std::get<BerezinMeasure>(nu);
  std::vector<PolarPoint> sing;
  if (std::abs(z) > 0.0) sing.push_back({std::abs(z), std::arg(z)});
  return integrate_polar(
      [&](double t, double th) {
        cplx zeta = t * cplx(std::cos(th), std::sin(th));
        return eval_kernel(k, zeta, z) * berezin_density(bz.sequence, zeta);
      },
      lebesgue_radial(), 0.0, 1.0, -kPi, kPi, sing, cfg);
}

bool d2_region_test(cplx zeta, double x) {
  if (zeta == cplx(0.0, 0.0))
    throw std::invalid_argument("d2_region_test needs zeta != 0");
  if (!(x > 0.0 && x < 1.0))
    throw std::invalid_argument("d2_region_test needs x in (0, 1)");
  double t2 = std::norm(zeta);
  cplx bb = blaschke_bar_factor(zeta, cplx(x, 0.0));
  return t2 * (2.0 - t2) > std::abs(bb) * std::abs(2.0 - bb);
}

double q_function(const Kernel& k, const Measure& nu, cplx z,
                  const QuadConfig& cfg) {
  validate_kernel(k);
  auto diff = [&](cplx zeta) {
    double k0 = eval_kernel(k, zeta, cplx(0.0, 0.0));
    double kz = eval_kernel(k, zeta, z);
    if (kz == -HUGE_VAL) return HUGE_VAL;
    if (k0 == -HUGE_VAL) return 0.0;
    return pos(k0 - kz);
  };

  if (const auto* mu = std::get_if<DiscreteMeasure>(&nu)) {
    double sum = 0.0;
    for (size_t i = 0; i < mu->points.size(); ++i)
      sum += mu->masses[i] * diff(mu->points[i]);
    return sum;
  }

  double x = std::abs(z);
  if (x == 0.0) return 0.0;
  double phi = std::arg(z);  // pole sits at (x, phi) in polar coordinates

  // integration window: all of the disk, shrunk to the proven superset of
  // D_2(z) for the Bomash s=2 kernel
  double t_lo = 0.0, th_max = kPi;
  const auto* bo = std::get_if<BomashKernel>(&k);
  if (bo && bo->s == 2.0) {
    t_lo = std::max(0.0, x - std::sqrt(1.0 - x * x));
    th_max = std::min(kPi, 0.5 * kPi * std::sqrt(1.0 - x * x));
  }
  std::vector<double> t_breaks, th_breaks;
  for (int m = 1; m <= 16; ++m) {
    double t = 1.0 - std::ldexp(1.0 - x, -m);
    if (t > t_lo && t < 1.0) t_breaks.push_back(t);
    double th = std::ldexp(th_max, -m);
    th_breaks.push_back(phi + th);
    th_breaks.push_back(phi - th);
  }

  auto run = [&](const RadialMeasure& rad) {
    return integrate_polar(
        [&](double t, double th) {
          return diff(t * cplx(std::cos(th), std::sin(th)));
        },
        rad, t_lo, 1.0, phi - th_max, phi + th_max, {{x, phi}}, cfg, t_breaks,
        th_breaks);
  };

  if (const auto* rad = std::get_if<RadialMeasure>(&nu)) {
    if (rad->is_zero()) return 0.0;
    return run(*rad);
  }
  const auto& bz = std::get<BerezinMeasure>(nu);
  return integrate_polar(
      [&](double t, double th) {
        cplx zeta = t * cplx(std::cos(th), std::sin(th));
        return diff(zeta) * berezin_density(bz.sequence, zeta);
      },
      lebesgue_radial(), t_lo, 1.0, phi - th_max, phi + th_max, {{x, phi}},
      cfg, t_breaks, th_breaks);
}

double q_bound_constant(double eps) {
  if (!(eps > 0.0 && eps < 1.0))
    throw std::invalid_argument("q_bound_constant needs 0 < eps < 1");
  return std::max(std::log(30.0 / eps) / (1.0 - eps), 12.0 / eps);
}

double q_upper_bound(const RadialWeight& m, cplx z, double eps,
                     const QuadConfig& cfg) {
  double r = std::abs(z);
  if (r < 0.9)
    throw std::domain_error("q_upper_bound is valid for |z| >= 9/10");
  validate_weight(m);
  double a = circle_mean([&](cplx w) { return weight_value(m, std::abs(w)); },
                         z, eps, cfg);
  double b = box_mass(riesz_measure_of(m), z, 6.0, cfg);
  return a - weight_value(m, r) + q_bound_constant(eps) * b;
}

}  // namespace dz
