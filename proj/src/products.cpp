#include "diskzeroes/products.hpp"

#include <cmath>
#include <numbers>

namespace dz {

double log_product(const Kernel& k, const ZeroSequence& seq, cplx z) {
  validate_kernel(k);
  seq.validate();
  double sum = 0.0;
  for (const auto& e : seq.entries) {
    if (!in_support(k, e.point))
      throw std::domain_error("log_product: zero outside the kernel support");
    double v = eval_kernel(k, e.point, z);
    if (v == -HUGE_VAL) return -HUGE_VAL;
    sum += e.multiplicity * v;
  }
  return sum;
}

cplx blaschke_product(const ZeroSequence& seq, cplx z) {
  if (!(std::abs(z) < 1.0))
    throw std::invalid_argument("blaschke_product needs |z| < 1");
  seq.validate();
  cplx prod = 1.0;
  for (const auto& e : seq.entries) {
    cplx b = blaschke_factor(e.point, z);
    for (int i = 0; i < e.multiplicity; ++i) prod *= b;
  }
  return prod;
}

GrowthReport growth_norm(const std::function<double(cplx)>& logf, double p,
                         const GridSpec& grid, const ZeroSequence& exclusions) {
  if (p < 0.0) throw std::invalid_argument("growth_norm needs p >= 0");
  if (grid.j_max < 1 || grid.angles < 1)
    throw std::invalid_argument("growth_norm needs a nonempty grid");
  GrowthReport rep;
  rep.p = p;
  rep.grid = grid;
  for (int j = 1; j <= grid.j_max; ++j) {
    double r = 1.0 - std::ldexp(1.0, -j);
    for (int a = 0; a < grid.angles; ++a) {
      double th = 2.0 * std::numbers::pi * a / grid.angles;
      cplx z = r * cplx(std::cos(th), std::sin(th));
      bool near_zero = false;
      for (const auto& e : exclusions.entries)
        if (std::abs(z - e.point) < 1e-6) {
          near_zero = true;
          break;
        }
      if (near_zero) continue;
      double v = logf(z) + p * std::log(1.0 - r);
      if (v > rep.sup_value) {
        rep.sup_value = v;
        rep.attained_at = z;
      }
    }
  }
  return rep;
}

}  // namespace dz
