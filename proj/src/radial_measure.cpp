#include "diskzeroes/radial_measure.hpp"

#include <algorithm>
#include <cmath>

#include "diskzeroes/quadrature.hpp"

namespace dz {

RadialMeasure RadialMeasure::power_log_riesz(double p) {
  if (p < 0.0) throw std::invalid_argument("power_log weight needs p >= 0");
  if (p == 0.0) return zero();
  return from_density(
      [p](double t) { return p / ((1.0 - t) * (1.0 - t)); },
      [p](double t) { return p * t / (1.0 - t); },
      [p](double m) { return m / (p + m); });
}

RadialMeasure RadialMeasure::from_density(
    std::function<double(double)> density,
    std::function<double(double)> cumulative,
    std::function<double(double)> inverse_cum) {
  RadialMeasure nu;
  nu.kind_ = Kind::Density;
  nu.density_ = std::move(density);
  nu.cumulative_ = std::move(cumulative);
  nu.inverse_cum_ = std::move(inverse_cum);
  return nu;
}

RadialMeasure RadialMeasure::from_atoms(
    std::vector<std::pair<double, double>> atoms) {
  std::erase_if(atoms, [](const auto& a) { return a.second == 0.0; });
  if (atoms.empty()) return zero();
  for (const auto& [r, m] : atoms)
    if (r < 0.0 || m < 0.0)
      throw std::invalid_argument("radial atom needs radius, mass >= 0");
  std::sort(atoms.begin(), atoms.end());
  RadialMeasure nu;
  nu.kind_ = Kind::Atoms;
  nu.atoms_ = std::move(atoms);
  return nu;
}

double RadialMeasure::cumulative(double t) const {
  switch (kind_) {
    case Kind::Zero:
      return 0.0;
    case Kind::Density:
      return cumulative_(t);
    case Kind::Atoms: {
      double m = 0.0;
      for (const auto& [r, mass] : atoms_) {
        if (r >= t) break;
        m += mass;
      }
      return m;
    }
  }
  return 0.0;
}

double RadialMeasure::inverse_cumulative(double m, double hi) const {
  if (kind_ == Kind::Zero) return 0.0;
  if (kind_ == Kind::Atoms) {
    double acc = 0.0;
    for (const auto& [r, mass] : atoms_) {
      acc += mass;
      if (acc >= m) return r;
    }
    return atoms_.back().first;
  }
  if (inverse_cum_) return std::min(inverse_cum_(m), hi);
  double lo = 0.0;
  for (int i = 0; i < 80; ++i) {
    double mid = 0.5 * (lo + hi);
    (cumulative_(mid) < m ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

double RadialMeasure::integrate(const std::function<double(double)>& F,
                                double lo, double hi,
                                const QuadConfig& cfg) const {
  switch (kind_) {
    case Kind::Zero:
      return 0.0;
    case Kind::Atoms: {
      double sum = 0.0;
      for (const auto& [r, m] : atoms_) {
        if (r < lo) continue;
        if (r >= hi) break;
        sum += m * F(r);
      }
      return sum;
    }
    case Kind::Density:
      return integrate_1d([&](double t) { return F(t) * density_(t); }, lo,
                          hi, cfg);
  }
  return 0.0;
}

}  // namespace dz
