#pragma once

#include <variant>
#include <vector>

#include "diskzeroes/measures.hpp"
#include "diskzeroes/types.hpp"

namespace dz {

// The subharmonic kernel zoo. Every kernel is k(zeta, z) = log|zeta - z| +
// h(zeta, z) with h harmonic in z; "support" is the set of admissible zeta.
struct LogKernel {};                                     // log|zeta - z| on C x C
struct BlaschkeKernel {};                                // log|B_zeta(z)|, D x D
struct BlaschkeBarKernel {};                             // log|Bbar_zeta(z)|, (D\{0}) x D
struct DzhrbashianKernel { int genus = 0; };             // (D\{0}) x D
struct HorowitzKernel {};                                // D x D
struct BellerKernel { double s = 1.0; };                 // 0 < s <= 6, D x D
struct BomashKernel { double s = 2.0; };                 // s >= 1, (D\{0}) x D
struct KorenblumKernel {};                               // (D\{0}) x D
struct HadamardWeierstrassKernel { int genus = 0; };     // (C\{0}) x C
struct WeierstrassKernel {
  double r0 = 1.0;
  std::vector<double> radii;   // increasing, > r0
  std::vector<int> genera;     // genus on [r_{n-1}, r_n); clamped beyond
};

using Kernel =
    std::variant<LogKernel, BlaschkeKernel, BlaschkeBarKernel,
                 DzhrbashianKernel, HorowitzKernel, BellerKernel, BomashKernel,
                 KorenblumKernel, HadamardWeierstrassKernel, WeierstrassKernel>;

// Blaschke factor B_zeta(z) = (|zeta|/zeta)(zeta-z)/(1-conj(zeta)z); the
// limiting convention B_0(z) = -z keeps |B_0(z)| = |z|.
cplx blaschke_factor(cplx zeta, cplx z);
// Bbar_zeta(z) = conj(zeta)(zeta-z)/(1-conj(zeta)z) = |zeta| B_zeta(z)
cplx blaschke_bar_factor(cplx zeta, cplx z);
// pseudo-hyperbolic distance |(zeta-z)/(1-conj(zeta)z)|
double pseudo_distance(cplx zeta, cplx z);

void validate_kernel(const Kernel& k);
bool in_support(const Kernel& k, cplx zeta);
bool disk_kernel(const Kernel& k);  // domain D x D rather than C x C

// k(zeta, z); -inf exactly at the logarithmic pole. Throws domain_error for
// zeta outside the support or arguments outside the kernel's domain.
double eval_kernel(const Kernel& k, cplx zeta, cplx z);

// h(zeta, z) = k(zeta, z) - log|zeta - z|, from closed forms (stable at the
// pole, where plain subtraction would cancel).
double harmonic_component(const Kernel& k, cplx zeta, cplx z);

enum class Convergence { Convergent, Divergent, Inconclusive };

struct SuitabilityReport {
  double value = 0.0;            // suitability integral truncated at `cutoff`
  Convergence flag = Convergence::Convergent;
};

// The kernel's suitability integral truncated at radius cutoff, with a
// divergence flag obtained from the growth of the tail over the geometric
// cutoff ladder 1 - 2^{-j}, j <= 20: stable within 1e-6 -> Convergent,
// monotone growth >= 10% -> Divergent, else Inconclusive.
SuitabilityReport suitability_margin(const Kernel& k, const RadialMeasure& nu,
                                     double cutoff);

// U_k^nu(z) = integral of k(zeta, z) d nu(zeta). Radial measures use the
// exact angular mean log max(t, |z|) of the log factor plus the circle
// average of the harmonic component; discrete measures are summed directly.
double potential(const Kernel& k, const Measure& nu, cplx z,
                 const QuadConfig& cfg = {});

// Q_k^nu(z) = integral of (k(zeta,0) - k(zeta,z))^+ d nu(zeta); for
// Bomash{2} the integration is restricted to the region D_2(z).
double q_function(const Kernel& k, const Measure& nu, cplx z,
                  const QuadConfig& cfg = {});

// membership test for D_2(x): |zeta|^2(2-|zeta|^2) > |Bbar_zeta(x)||2-Bbar_zeta(x)|
bool d2_region_test(cplx zeta, double x);

// A_{M,eps}(z) - M(z) + C_eps b_M^{[6]}(z) with
// C_eps = max{ log(30/eps)/(1-eps), 12/eps }, valid for |z| >= 9/10
double q_upper_bound(const RadialWeight& m, cplx z, double eps,
                     const QuadConfig& cfg = {});

double q_bound_constant(double eps);  // C_eps above

}  // namespace dz
