#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "diskzeroes/types.hpp"

namespace dz {

// Rotation-invariant positive measure on the disk (or plane), represented by
// its radial part: nu = (1/2pi) dtheta (x) d nu_rad(t). cumulative(t) is the
// mass of the open disk D(t); a density descriptor is kept when available,
// otherwise the measure is a finite sum of circle atoms.
class RadialMeasure {
 public:
  RadialMeasure() = default;  // zero measure

  static RadialMeasure zero() { return RadialMeasure(); }

  // Riesz measure of M_p(t) = p log 1/(1-t): d(tM'(t)) = p dt/(1-t)^2,
  // cumulative p t/(1-t).
  static RadialMeasure power_log_riesz(double p);

  static RadialMeasure from_density(std::function<double(double)> density,
                                    std::function<double(double)> cumulative,
                                    std::function<double(double)> inverse_cum = {});

  // (radius, mass) pairs; radii need not be distinct
  static RadialMeasure from_atoms(std::vector<std::pair<double, double>> atoms);

  bool is_zero() const { return kind_ == Kind::Zero; }
  bool has_density() const { return kind_ == Kind::Density; }
  const std::vector<std::pair<double, double>>& atoms() const { return atoms_; }

  double density(double t) const { return density_(t); }
  double cumulative(double t) const;

  // smallest t with cumulative mass >= m (for importance sampling)
  double inverse_cumulative(double m, double hi = 1.0) const;

  // integral of F over [lo, hi) against d nu_rad
  double integrate(const std::function<double(double)>& F, double lo,
                   double hi, const QuadConfig& cfg) const;

 private:
  enum class Kind { Zero, Density, Atoms };
  Kind kind_ = Kind::Zero;
  std::function<double(double)> density_;
  std::function<double(double)> cumulative_;
  std::function<double(double)> inverse_cum_;
  std::vector<std::pair<double, double>> atoms_;  // sorted by radius
};

}  // namespace dz
