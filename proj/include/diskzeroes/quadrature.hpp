#pragma once

#include <functional>
#include <vector>

#include "diskzeroes/radial_measure.hpp"
#include "diskzeroes/types.hpp"

namespace dz {

// (1/2pi) integral of f over the circle, by trapezoid doubling (uniform
// sampling is the trapezoid rule for periodic integrands). Isolated -inf
// samples are dodged by a phase shift; a persistent hit means the integrand
// is -inf on a set of positive measure and raises.
double circle_average(const std::function<double(double)>& f,
                      const QuadConfig& cfg);

// Adaptive tanh-sinh quadrature on [a, b]; handles integrable endpoint
// singularities (log, negative powers < 1). Interior kinks should be split
// by the caller via integrate_segments.
double integrate_1d(const std::function<double(double)>& f, double a, double b,
                    const QuadConfig& cfg);

// Sum of integrate_1d over consecutive segments of `points` (sorted, deduped).
double integrate_segments(const std::function<double(double)>& f,
                          std::vector<double> points, const QuadConfig& cfg);

struct PolarPoint {
  double t;
  double theta;
};

// Adaptive 2D quadrature of  f(t, theta) (dtheta/2pi) d nu_rad(t)  over
// [t0,t1] x [th0,th1]. Cells are split at singular points; cells shrunk to
// within kPoleExclusion of a singularity are dropped (the log singularity is
// integrable). Extra breakpoints seed the initial grid.
double integrate_polar(const std::function<double(double, double)>& f,
                       const RadialMeasure& nu, double t0, double t1,
                       double th0, double th1,
                       const std::vector<PolarPoint>& singular,
                       const QuadConfig& cfg,
                       std::vector<double> t_breaks = {},
                       std::vector<double> th_breaks = {});

}  // namespace dz
