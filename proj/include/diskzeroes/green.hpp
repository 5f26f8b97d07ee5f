#pragma once

#include <cstdint>
#include <functional>

#include "diskzeroes/geometry.hpp"
#include "diskzeroes/measures.hpp"
#include "diskzeroes/types.hpp"

namespace dz {

struct MonteCarloConfig {
  uint64_t seed = 1;
  long walks = 10000;
  double shell = 1e-6;   // absorption distance
  long max_steps = 100000;
};

// checks the reporting-grade bounds (shell <= 1e-3, walks >= 1e3,
// max_steps >= 1e4); library calls only need positive values
void validate_reporting_config(const MonteCarloConfig& cfg);

// Green's function of a disk with the stated pole, extended by 0 outside the
// closed disk; +inf at the pole.
double green_disk(const Disk& d, cplx zeta, cplx pole);

// Estimates integral f d omega_D(start, .) by walk on spheres: jump to a
// uniform point of the inscribed circle until within `shell` of the
// boundary, then evaluate f at the nearest boundary point. Deterministic in
// (seed, walks) and independent of worker-thread count.
Estimate wos_integrate(const UnionDomain& d, cplx start,
                       const std::function<double(cplx)>& f,
                       const MonteCarloConfig& cfg);

// g_D(zeta, 0): exact 0 outside the closed union, closed form for
// single-disk domains, -log|zeta| + WoS estimate of the harmonic part
// otherwise.
Estimate green_union(const UnionDomain& d, cplx zeta,
                     const MonteCarloConfig& cfg);

// sum of m_k g_D(lambda_k, 0); Monte Carlo errors add in quadrature
Estimate green_sum_over_sequence(const UnionDomain& d, const ZeroSequence& seq,
                                 const MonteCarloConfig& cfg);

// kappa-hat of g_D(., 0): the circle means of g weighted by dt/(1-t)^2,
// truncated at the outer radius of the domain. Deterministic quadrature for
// single disks, importance-sampled Monte Carlo for unions.
Estimate kappa_hat(const UnionDomain& d, const MonteCarloConfig& cfg,
                   const QuadConfig& quad = {});

// integral of the circle means of g_D against d(t M'_-(t)); equals
// p * kappa_hat for the power-log weight
Estimate weighted_green_integral(const UnionDomain& d, const RadialWeight& m,
                                 const MonteCarloConfig& cfg,
                                 const QuadConfig& quad = {});

// integral g_D(zeta, 0) d nu(zeta) for radial / discrete / Berezin measures
Estimate green_integral(const UnionDomain& d, const Measure& nu,
                        const MonteCarloConfig& cfg,
                        const QuadConfig& quad = {});

// classical balayage of a discrete measure onto the domain boundary:
// masses outside stay put, each inside mass is replaced by `walks`
// equal-weight samples of its harmonic measure
DiscreteMeasure balayage_discrete(const DiscreteMeasure& mu,
                                  const UnionDomain& d,
                                  const MonteCarloConfig& cfg);

}  // namespace dz
