#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace dz {

using cplx = std::complex<double>;

// Disks of a union domain are kept at least this far inside the unit disk so
// that boundary-weighted integrals stay finite.
inline constexpr double kAmbientMargin = 1e-9;

// Integrators exclude a disk of this radius around logarithmic poles.
inline constexpr double kPoleExclusion = 1e-12;

struct QuadConfig {
  double tol = 1e-6;
  int max_cells = 200000;
};

class QuadratureError : public std::runtime_error {
 public:
  QuadratureError(const std::string& what, double achieved)
      : std::runtime_error(what + " (achieved error estimate " +
                           std::to_string(achieved) + ")"),
        achieved_error(achieved) {}
  double achieved_error;
};

// Monte Carlo estimate; std_error = sample standard deviation / sqrt(walks).
struct Estimate {
  double value = 0.0;
  double std_error = 0.0;
  long walks_used = 0;
  long overflow_walks = 0;
};

inline Estimate exact_estimate(double v) { return Estimate{v, 0.0, 0, 0}; }

}  // namespace dz
