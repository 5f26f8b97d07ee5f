#pragma once

#include <functional>

#include "diskzeroes/kernels.hpp"
#include "diskzeroes/measures.hpp"
#include "diskzeroes/types.hpp"

namespace dz {

// log|f(z)| of the canonical product with zeros Lambda built from the
// kernel: sum of m_k k(lambda_k, z); -inf exactly on Lambda
double log_product(const Kernel& k, const ZeroSequence& seq, cplx z);

// product of Blaschke factors B_lambda(z)^m; |result| <= 1
cplx blaschke_product(const ZeroSequence& seq, cplx z);

struct GridSpec {
  int j_max = 10;    // radii 1 - 2^{-j}, j = 1..j_max
  int angles = 256;  // uniform angles per radius
};

struct GrowthReport {
  double p = 0.0;
  double sup_value = -HUGE_VAL;  // sup of log|f(z)| + p log(1-|z|) on the grid
  GridSpec grid;
  cplx attained_at;
};

// grid sup of log|f| + p log(1-|z|), skipping 1e-6 neighborhoods of the
// excluded zeros; a lower bound for the A^{-p} norm of log-growth
GrowthReport growth_norm(const std::function<double(cplx)>& logf, double p,
                         const GridSpec& grid,
                         const ZeroSequence& exclusions = {});

}  // namespace dz
