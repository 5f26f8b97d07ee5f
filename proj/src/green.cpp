#include "diskzeroes/green.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <map>
#include <numbers>

#include "diskzeroes/parallel.hpp"
#include "diskzeroes/quadrature.hpp"
#include "diskzeroes/rng.hpp"

namespace dz {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr long kChunk = 1024;  // fixed chunk size keeps reductions bitwise stable

struct WalkOutcome {
  cplx exit;
  bool overflowed = false;
};

WalkOutcome run_walk(const UnionDomain& d, cplx start, double shell,
                     long max_steps, SplitRng& rng) {
  cplx z = start;
  for (long step = 0; step < max_steps; ++step) {
    double r = inscribed_radius(d, z);
    if (r < shell) return {nearest_boundary(d, z), false};
    double th = 2.0 * kPi * rng.uniform();
    z += r * cplx(std::cos(th), std::sin(th));
  }
  return {nearest_boundary(d, z), true};
}

Estimate reduce_walks(
    const MonteCarloConfig& cfg,
    const std::function<double(long, SplitRng&, bool&)>& sample) {
  auto partials = par::run_chunks(
      cfg.walks, kChunk, [&](long /*chunk*/, long lo, long hi) {
        double sum = 0.0, sumsq = 0.0, over = 0.0;
        for (long w = lo; w < hi; ++w) {
          SplitRng rng(cfg.seed, static_cast<uint64_t>(w));
          bool overflowed = false;
          double v = sample(w, rng, overflowed);
          if (overflowed) {  // step cap hit; keep the absorbed value
            over += 1.0;
          }
          sum += v;
          sumsq += v * v;
        }
        return std::vector<double>{sum, sumsq, over};
      });
  double sum = 0.0, sumsq = 0.0, over = 0.0;
  for (const auto& p : partials) {
    sum += p[0];
    sumsq += p[1];
    over += p[2];
  }
  const double n = static_cast<double>(cfg.walks);
  Estimate e;
  e.walks_used = cfg.walks;
  e.overflow_walks = static_cast<long>(over);
  e.value = sum / n;
  double var = cfg.walks > 1 ? std::max(0.0, (sumsq - n * e.value * e.value) /
                                                 (n - 1.0))
                             : 0.0;
  e.std_error = std::sqrt(var / n);
  if (over > 0.001 * n)
    throw std::runtime_error("walk-on-spheres: more than 0.1% of walks hit the step cap");
  return e;
}
}  // namespace

void validate_reporting_config(const MonteCarloConfig& cfg) {
  if (!(cfg.shell > 0.0 && cfg.shell <= 1e-3))
    throw std::invalid_argument("mc config: shell must lie in (0, 1e-3]");
  if (cfg.walks < 1000)
    throw std::invalid_argument("mc config: reported estimates need walks >= 1000");
  if (cfg.max_steps < 10000)
    throw std::invalid_argument("mc config: max_steps must be >= 10000");
}

double green_disk(const Disk& d, cplx zeta, cplx pole) {
  if (!(std::abs(pole - d.center) < d.radius))
    throw std::domain_error("green_disk: pole must lie inside the disk");
  if (std::abs(zeta - d.center) >= d.radius) return 0.0;
  cplx a = zeta - d.center, b = pole - d.center;
  double num = std::abs(d.radius * d.radius - a * std::conj(b));
  double den = d.radius * std::abs(zeta - pole);
  if (den == 0.0) return HUGE_VAL;
  return std::log(num / den);
}

Estimate wos_integrate(const UnionDomain& d, cplx start,
                       const std::function<double(cplx)>& f,
                       const MonteCarloConfig& cfg) {
  if (!contains(d, start))
    throw std::domain_error("wos_integrate: start point must lie in the domain");
  if (cfg.walks < 1) throw std::invalid_argument("wos_integrate: walks >= 1");
  return reduce_walks(cfg, [&](long, SplitRng& rng, bool& overflowed) {
    auto out = run_walk(d, start, cfg.shell, cfg.max_steps, rng);
    overflowed = out.overflowed;
    return f(out.exit);
  });
}

Estimate green_union(const UnionDomain& d, cplx zeta,
                     const MonteCarloConfig& cfg) {
  if (zeta == cplx(0.0, 0.0))
    throw std::domain_error("green_union: zeta = 0 is the pole");
  if (!contains(d, zeta)) return exact_estimate(0.0);
  if (d.disks.size() == 1)
    return exact_estimate(green_disk(d.disks[0], zeta, 0.0));
  Estimate h = wos_integrate(
      d, zeta, [](cplx w) { return std::log(std::abs(w)); }, cfg);
  h.value -= std::log(std::abs(zeta));
  return h;
}

Estimate green_sum_over_sequence(const UnionDomain& d, const ZeroSequence& seq,
                                 const MonteCarloConfig& cfg) {
  seq.validate();
  if (seq.contains_origin())
    throw std::invalid_argument("green_sum_over_sequence: 0 must not lie in the sequence");
  Estimate total;
  double var = 0.0;
  long k = 0;
  for (const auto& e : seq.entries) {
    if (!contains(d, e.point)) {
      ++k;
      continue;
    }
    MonteCarloConfig sub = cfg;
    sub.seed = derive_seed(cfg.seed, 0x95EC, static_cast<uint64_t>(k++));
    Estimate g = green_union(d, e.point, sub);
    total.value += e.multiplicity * g.value;
    var += std::pow(e.multiplicity * g.std_error, 2);
    total.walks_used += g.walks_used;
    total.overflow_walks += g.overflow_walks;
  }
  total.std_error = std::sqrt(var);
  return total;
}

namespace {

// deterministic single-disk path: radial quadrature of the circle means
Estimate kappa_hat_disk(const Disk& disk, const QuadConfig& quad) {
  double rd = std::abs(disk.center) + disk.radius;
  QuadConfig inner = quad;
  inner.tol = quad.tol * 0.05;
  auto mean_g = [&](double t) {
    return circle_average(
        [&](double th) {
          return green_disk(disk, t * cplx(std::cos(th), std::sin(th)), 0.0);
        },
        inner);
  };
  std::vector<double> pts{0.0, rd};
  double inside = disk.radius - std::abs(disk.center);  // fully-inside radius
  if (inside > 0.0 && inside < rd) pts.push_back(inside);
  QuadConfig seg = quad;
  seg.tol = quad.tol * 0.5;
  double v = integrate_segments(
      [&](double t) { return mean_g(t) / ((1.0 - t) * (1.0 - t)); }, pts, seg);
  return exact_estimate(v);
}
}  // namespace

Estimate kappa_hat(const UnionDomain& d, const MonteCarloConfig& cfg,
                   const QuadConfig& quad) {
  if (!invariants_hold(d))
    throw std::invalid_argument("kappa_hat: domain violates invariants");
  if (d.disks.size() == 1) return kappa_hat_disk(d.disks[0], quad);

  // MC: sample zeta from the normalized measure (dtheta/2pi) dt/(1-t)^2 on
  // [0, R_D] and average g(zeta, 0), one walk per sample
  const double rd = d.outer_radius();
  const double mass = rd / (1.0 - rd);
  return reduce_walks(cfg, [&](long, SplitRng& rng, bool& overflowed) {
    double v = rng.uniform() * mass;
    double t = v / (1.0 + v);
    double th = 2.0 * kPi * rng.uniform();
    cplx zeta = t * cplx(std::cos(th), std::sin(th));
    if (t == 0.0 || !contains(d, zeta)) return 0.0;
    auto out = run_walk(d, zeta, cfg.shell, cfg.max_steps, rng);
    overflowed = out.overflowed;
    return mass * (std::log(std::abs(out.exit)) - std::log(t));
  });
}

Estimate weighted_green_integral(const UnionDomain& d, const RadialWeight& m,
                                 const MonteCarloConfig& cfg,
                                 const QuadConfig& quad) {
  validate_weight(m);
  if (const auto* pl = std::get_if<PowerLogWeight>(&m)) {
    if (pl->p == 0.0) return exact_estimate(0.0);
    Estimate e = kappa_hat(d, cfg, quad);  // d(tM_p') = p dt/(1-t)^2
    e.value *= pl->p;
    e.std_error *= pl->p;
    return e;
  }
  return green_integral(d, Measure{riesz_measure_of(m)}, cfg, quad);
}

namespace {

Estimate green_integral_radial(const UnionDomain& d, const RadialMeasure& nu,
                               const MonteCarloConfig& cfg,
                               const QuadConfig& quad) {
  if (nu.is_zero()) return exact_estimate(0.0);
  const double rd = d.outer_radius();
  if (d.disks.size() == 1) {
    const Disk& disk = d.disks[0];
    QuadConfig inner = quad;
    inner.tol = quad.tol * 0.05;
    auto mean_g = [&](double t) {
      return circle_average(
          [&](double th) {
            return green_disk(disk, t * cplx(std::cos(th), std::sin(th)), 0.0);
          },
          inner);
    };
    std::vector<double> pts{0.0, rd};
    double inside = disk.radius - std::abs(disk.center);
    if (inside > 0.0 && inside < rd) pts.push_back(inside);
    for (const auto& [r, mass] : nu.atoms())
      if (r > 0.0 && r < rd) pts.push_back(r);
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    QuadConfig seg = quad;
    seg.tol = quad.tol * 0.5;
    double total = 0.0;
    for (size_t i = 0; i + 1 < pts.size(); ++i)
      total += nu.integrate(mean_g, pts[i], pts[i + 1], seg);
    return exact_estimate(total);
  }
  // union: importance-sample t from nu restricted to [0, R_D], theta uniform
  const double mass = nu.cumulative(rd);
  if (mass <= 0.0) return exact_estimate(0.0);
  return reduce_walks(cfg, [&](long, SplitRng& rng, bool& overflowed) {
    double t = nu.inverse_cumulative(rng.uniform() * mass, rd);
    double th = 2.0 * kPi * rng.uniform();
    cplx zeta = t * cplx(std::cos(th), std::sin(th));
    if (t == 0.0 || !contains(d, zeta)) return 0.0;
    auto out = run_walk(d, zeta, cfg.shell, cfg.max_steps, rng);
    overflowed = out.overflowed;
    return mass * (std::log(std::abs(out.exit)) - std::log(t));
  });
}

Estimate green_integral_discrete(const UnionDomain& d,
                                 const DiscreteMeasure& mu,
                                 const MonteCarloConfig& cfg) {
  Estimate total;
  double var = 0.0;
  for (size_t i = 0; i < mu.points.size(); ++i) {
    if (!contains(d, mu.points[i])) continue;
    if (mu.points[i] == cplx(0.0, 0.0))
      throw std::invalid_argument("green_integral: atom at the pole 0");
    MonteCarloConfig sub = cfg;
    sub.seed = derive_seed(cfg.seed, 0x6D15C, static_cast<uint64_t>(i));
    Estimate g = green_union(d, mu.points[i], sub);
    total.value += mu.masses[i] * g.value;
    var += std::pow(mu.masses[i] * g.std_error, 2);
    total.walks_used += g.walks_used;
    total.overflow_walks += g.overflow_walks;
  }
  total.std_error = std::sqrt(var);
  return total;
}

// Berezin-density integrand over the domain by 2D polar quadrature. Green
// values on union domains come from WoS, cached per grid node, with streams
// keyed by the node coordinates so the adaptive refinement order cannot
// change them.
Estimate green_integral_berezin(const UnionDomain& d, const ZeroSequence& seq,
                                const MonteCarloConfig& cfg,
                                const QuadConfig& quad) {
  const double rd = d.outer_radius();
  const bool single = d.disks.size() == 1;
  std::map<std::pair<uint64_t, uint64_t>, double> cache;
  auto g_at = [&](cplx zeta) -> double {
    if (!contains(d, zeta) || zeta == cplx(0.0, 0.0)) return 0.0;
    if (single) return green_disk(d.disks[0], zeta, 0.0);
    uint64_t hx, hy;
    double re = zeta.real(), im = zeta.imag();
    std::memcpy(&hx, &re, sizeof(hx));
    std::memcpy(&hy, &im, sizeof(hy));
    auto key = std::make_pair(hx, hy);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
    MonteCarloConfig sub = cfg;
    sub.seed = derive_seed(cfg.seed, hx, hy);
    double v = green_union(d, zeta, sub).value;
    cache.emplace(key, v);
    return v;
  };
  RadialMeasure lebesgue = RadialMeasure::from_density(
      [](double t) { return 2.0 * kPi * t; },
      [](double t) { return kPi * t * t; });
  // grade toward the domain rim and toward the positive real axis, where the
  // model sequences concentrate
  std::vector<double> t_breaks, th_breaks;
  for (int m2 = 1; m2 <= 12; ++m2) {
    double t = rd * (1.0 - std::ldexp(1.0, -m2));
    if (t > 0.0) t_breaks.push_back(t);
    double th = std::ldexp(kPi, -m2);
    th_breaks.push_back(th);
    th_breaks.push_back(-th);
  }
  double v = integrate_polar(
      [&](double t, double th) {
        cplx zeta = t * cplx(std::cos(th), std::sin(th));
        return g_at(zeta) * berezin_density(seq, zeta);
      },
      lebesgue, 0.0, rd, -kPi, kPi, {}, quad, t_breaks, th_breaks);
  Estimate e = exact_estimate(v);
  if (!single) e.walks_used = cfg.walks;  // per cached node
  return e;
}
}  // namespace

Estimate green_integral(const UnionDomain& d, const Measure& nu,
                        const MonteCarloConfig& cfg, const QuadConfig& quad) {
  if (const auto* rad = std::get_if<RadialMeasure>(&nu))
    return green_integral_radial(d, *rad, cfg, quad);
  if (const auto* mu = std::get_if<DiscreteMeasure>(&nu))
    return green_integral_discrete(d, *mu, cfg);
  return green_integral_berezin(d, std::get<BerezinMeasure>(nu).sequence, cfg,
                                quad);
}

DiscreteMeasure balayage_discrete(const DiscreteMeasure& mu,
                                  const UnionDomain& d,
                                  const MonteCarloConfig& cfg) {
  if (!invariants_hold(d))
    throw std::invalid_argument("balayage_discrete: domain violates invariants");
  DiscreteMeasure out;
  for (size_t i = 0; i < mu.points.size(); ++i) {
    if (!contains(d, mu.points[i])) {
      out.points.push_back(mu.points[i]);
      out.masses.push_back(mu.masses[i]);
      continue;
    }
    double w = mu.masses[i] / static_cast<double>(cfg.walks);
    for (long walk = 0; walk < cfg.walks; ++walk) {
      SplitRng rng(derive_seed(cfg.seed, 0xBA1A, static_cast<uint64_t>(i)),
                   static_cast<uint64_t>(walk));
      auto res = run_walk(d, mu.points[i], cfg.shell, cfg.max_steps, rng);
      out.points.push_back(res.exit);
      out.masses.push_back(w);
    }
  }
  return out;
}

}  // namespace dz
