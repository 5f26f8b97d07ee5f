#include "diskzeroes/measures.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "diskzeroes/quadrature.hpp"

namespace dz {

namespace {
constexpr double kPi = std::numbers::pi;
}

long ZeroSequence::total_multiplicity() const {
  long n = 0;
  for (const auto& e : entries) n += e.multiplicity;
  return n;
}

bool ZeroSequence::contains_origin() const {
  for (const auto& e : entries)
    if (e.point == cplx(0.0, 0.0)) return true;
  return false;
}

void ZeroSequence::validate() const {
  for (const auto& e : entries) {
    if (!(std::abs(e.point) < 1.0))
      throw std::invalid_argument("zero sequence point outside the unit disk");
    if (e.multiplicity < 1)
      throw std::invalid_argument("zero multiplicity must be >= 1");
  }
}

ZeroSequence dyadic_sequence(int k_max, int multiplicity) {
  ZeroSequence seq;
  for (int k = 1; k <= k_max; ++k)
    seq.entries.push_back({cplx(1.0 - std::ldexp(1.0, -k), 0.0), multiplicity});
  return seq;
}

ZeroSequence harmonic_sequence(int k_max, int multiplicity) {
  ZeroSequence seq;
  for (int k = 1; k <= k_max; ++k)
    seq.entries.push_back({cplx(1.0 - 1.0 / (k + 1.0), 0.0), multiplicity});
  return seq;
}

double weight_value(const RadialWeight& w, double t) {
  if (const auto* pl = std::get_if<PowerLogWeight>(&w))
    return t < 1.0 ? pl->p * std::log(1.0 / (1.0 - t)) : HUGE_VAL;
  const auto& knots = std::get<TabulatedWeight>(w).knots;
  if (knots.empty()) return 0.0;
  if (t <= knots.front().first) return knots.front().second;
  if (t >= knots.back().first) return knots.back().second;
  // piecewise linear in (log t, M)
  auto it = std::upper_bound(
      knots.begin(), knots.end(), t,
      [](double x, const auto& k) { return x < k.first; });
  const auto& [t1, m1] = *it;
  const auto& [t0, m0] = *(it - 1);
  double x = (std::log(t) - std::log(t0)) / (std::log(t1) - std::log(t0));
  return m0 + x * (m1 - m0);
}

void validate_weight(const RadialWeight& w) {
  if (const auto* pl = std::get_if<PowerLogWeight>(&w)) {
    if (pl->p < 0.0) throw std::invalid_argument("power_log weight needs p >= 0");
    return;
  }
  const auto& knots = std::get<TabulatedWeight>(w).knots;
  if (knots.size() < 2)
    throw std::invalid_argument("tabulated weight needs at least 2 knots");
  double prev_slope = -HUGE_VAL;
  for (size_t i = 0; i < knots.size(); ++i) {
    auto [t, m] = knots[i];
    if (!(t > 0.0 && t < 1.0))
      throw std::invalid_argument("tabulated weight knots need 0 < t < 1");
    if (m < 0.0) throw std::invalid_argument("tabulated weight must be >= 0");
    if (i > 0) {
      auto [tp, mp] = knots[i - 1];
      if (!(t > tp) || m < mp)
        throw std::invalid_argument("tabulated weight must be increasing");
      double slope = (m - mp) / (std::log(t) - std::log(tp));
      if (slope + 1e-12 < prev_slope)
        throw std::invalid_argument(
            "tabulated weight is not convex in log t");
      prev_slope = slope;
    }
  }
}

RadialMeasure riesz_measure_of(const RadialWeight& w) {
  validate_weight(w);
  if (const auto* pl = std::get_if<PowerLogWeight>(&w))
    return RadialMeasure::power_log_riesz(pl->p);
  const auto& knots = std::get<TabulatedWeight>(w).knots;
  // t M'_-(t) is the slope of M in log t; piecewise linear interpolation
  // makes it a step function, so d(t M'_-) is a sum of circle atoms.
  std::vector<std::pair<double, double>> atoms;
  double prev_slope = 0.0;  // flat extension below the first knot
  for (size_t i = 1; i < knots.size(); ++i) {
    auto [t0, m0] = knots[i - 1];
    auto [t1, m1] = knots[i];
    double slope = (m1 - m0) / (std::log(t1) - std::log(t0));
    if (slope > prev_slope) atoms.push_back({t0, slope - prev_slope});
    prev_slope = slope;
  }
  return RadialMeasure::from_atoms(std::move(atoms));
}

RadialMeasure counting_radial(const ZeroSequence& seq) {
  std::vector<std::pair<double, double>> atoms;
  for (const auto& e : seq.entries)
    atoms.push_back({std::abs(e.point), static_cast<double>(e.multiplicity)});
  return RadialMeasure::from_atoms(std::move(atoms));
}

long counting_mass(const ZeroSequence& seq, const Disk& s) {
  long n = 0;
  for (const auto& e : seq.entries)
    if (std::abs(e.point - s.center) < s.radius) n += e.multiplicity;
  return n;
}

long counting_mass(const ZeroSequence& seq, const CarlesonBox& s) {
  long n = 0;
  for (const auto& e : seq.entries)
    if (box_contains(s, e.point)) n += e.multiplicity;
  return n;
}

long counting_mass(const ZeroSequence& seq, const UnionDomain& s) {
  long n = 0;
  for (const auto& e : seq.entries)
    if (contains(s, e.point)) n += e.multiplicity;
  return n;
}

DiscreteMeasure DiscreteMeasure::from_sequence(const ZeroSequence& seq) {
  DiscreteMeasure mu;
  for (const auto& e : seq.entries) {
    mu.points.push_back(e.point);
    mu.masses.push_back(static_cast<double>(e.multiplicity));
  }
  return mu;
}

double DiscreteMeasure::total_mass() const {
  double m = 0.0;
  for (double x : masses) m += x;
  return m;
}

double circle_mean(const std::function<double(cplx)>& m, cplx z, double eps,
                   const QuadConfig& cfg) {
  if (!(eps > 0.0 && eps < 1.0))
    throw std::invalid_argument("circle_mean needs 0 < eps < 1");
  double r = std::abs(z);
  if (!(r < 1.0)) throw std::invalid_argument("circle_mean needs |z| < 1");
  double s = eps * (1.0 - r);
  return circle_average(
      [&](double th) { return m(z + s * cplx(std::cos(th), std::sin(th))); },
      cfg);
}

double box_mass(const RadialMeasure& nu, cplx z, double alpha,
                const QuadConfig& cfg) {
  double r = std::abs(z);
  if (r == 0.0) throw std::invalid_argument("box_mass needs z != 0");
  if (!(alpha > 0.0)) throw std::invalid_argument("box_mass needs alpha > 0");
  if (nu.is_zero()) return 0.0;
  double size = alpha * (1.0 - r);
  double frac = std::min(1.0, size / kPi);  // angular fraction of the circle
  double lo = std::max(0.0, r - size);
  double inner = nu.integrate(
      [](double t) { return (1.0 - t) * (1.0 - t); }, lo, 1.0, cfg);
  return frac * inner / ((1.0 - r) * (1.0 - r));
}

double box_mass(const DiscreteMeasure& nu, cplx z, double alpha) {
  double r = std::abs(z);
  if (r == 0.0) throw std::invalid_argument("box_mass needs z != 0");
  CarlesonBox box{z, alpha};
  double sum = 0.0;
  for (size_t i = 0; i < nu.points.size(); ++i)
    if (box_contains(box, nu.points[i])) {
      double d = 1.0 - std::abs(nu.points[i]);
      sum += nu.masses[i] * d * d;
    }
  return sum / ((1.0 - r) * (1.0 - r));
}

double mollify(const std::function<double(cplx)>& f,
               const std::function<double(cplx)>& sigma, cplx z,
               const QuadConfig& cfg) {
  double s = sigma(z);
  if (!(s > 0.0 && s < 1.0 - std::abs(z)))
    throw std::invalid_argument(
        "mollify needs 0 < sigma(z) < dist(z, boundary)");
  // area average in polar form; u = (rho/s)^2 makes the radial weight flat
  QuadConfig inner = cfg;
  inner.tol = cfg.tol * 0.1;
  return integrate_1d(
      [&](double u) {
        double rho = s * std::sqrt(u);
        return circle_average(
            [&](double th) {
              return f(z + rho * cplx(std::cos(th), std::sin(th)));
            },
            inner);
      },
      0.0, 1.0, cfg);
}

double berezin_density(const ZeroSequence& seq, cplx zeta) {
  if (!(std::abs(zeta) < 1.0))
    throw std::invalid_argument("berezin_density needs |zeta| < 1");
  double sum = 0.0;
  for (const auto& e : seq.entries) {
    double a2 = std::norm(e.point);       // |lambda|^2
    double w = std::norm(1.0 - e.point * std::conj(zeta));
    sum += e.multiplicity * (1.0 - a2) * (1.0 - a2) / (w * w);
  }
  return sum / kPi;
}

double k_lambda(const ZeroSequence& seq, cplx z) {
  if (!(std::abs(z) < 1.0))
    throw std::invalid_argument("k_lambda needs |z| < 1");
  double sum = 0.0;
  for (const auto& e : seq.entries) {
    double a2 = std::norm(e.point);
    double w = std::norm(1.0 - e.point * std::conj(z));
    sum += e.multiplicity * (1.0 - a2) * (1.0 - a2) / w;
  }
  return 0.5 * std::norm(z) * sum;
}

}  // namespace dz
