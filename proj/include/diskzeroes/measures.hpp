#pragma once

#include <functional>
#include <variant>
#include <vector>

#include "diskzeroes/geometry.hpp"
#include "diskzeroes/radial_measure.hpp"
#include "diskzeroes/types.hpp"

namespace dz {

// Finite multiset of candidate zeros with multiplicities (the divisor n_Lambda)
struct ZeroEntry {
  cplx point;
  int multiplicity = 1;
};

struct ZeroSequence {
  std::vector<ZeroEntry> entries;

  long total_multiplicity() const;
  bool contains_origin() const;
  void validate() const;  // |point| < 1, multiplicity >= 1
};

// model sequences 1 - 2^{-k} and 1 - 1/(k+1), k = 1..k_max
ZeroSequence dyadic_sequence(int k_max, int multiplicity = 1);
ZeroSequence harmonic_sequence(int k_max, int multiplicity = 1);

// Radial weight M(t): either M_p(t) = p log 1/(1-t) or a tabulated weight,
// increasing and convex in log t, interpolated piecewise-linearly in
// (log t, M) with left-hand difference quotients for M'_-.
struct PowerLogWeight {
  double p = 0.0;
};

struct TabulatedWeight {
  std::vector<std::pair<double, double>> knots;  // increasing (t, M(t))
};

using RadialWeight = std::variant<PowerLogWeight, TabulatedWeight>;

double weight_value(const RadialWeight& w, double t);
void validate_weight(const RadialWeight& w);  // throws on non-convex tables

// Riesz measure of M(|z|): d nu = (1/2pi) dtheta (x) d(t M'_-(t)).
// PowerLog{p} gives cumulative p t/(1-t); tabulated weights give circle atoms
// at the knots (the log-linear slope jumps).
RadialMeasure riesz_measure_of(const RadialWeight& w);

// counting measure of the sequence, radial part (circle atoms at |lambda_k|)
RadialMeasure counting_radial(const ZeroSequence& seq);

// region masses n_Lambda(S)
long counting_mass(const ZeroSequence& seq, const Disk& s);
long counting_mass(const ZeroSequence& seq, const CarlesonBox& s);
long counting_mass(const ZeroSequence& seq, const UnionDomain& s);

// finite atomic measure in the plane
struct DiscreteMeasure {
  std::vector<cplx> points;
  std::vector<double> masses;

  static DiscreteMeasure from_sequence(const ZeroSequence& seq);
  double total_mass() const;
};

// measures the criteria quantify over: radial, discrete, or the
// absolutely continuous Berezin aggregation of a zero sequence
struct BerezinMeasure {
  ZeroSequence sequence;
};

using Measure = std::variant<RadialMeasure, DiscreteMeasure, BerezinMeasure>;

// A_{M,eps}(z): mean of M over the circle of radius eps(1-|z|) about z
double circle_mean(const std::function<double(cplx)>& m, cplx z, double eps,
                   const QuadConfig& cfg = {});

// b^{[alpha]}(z) = (1-|z|)^{-2} integral over Box_alpha(z) of (1-|zeta|)^2 dnu
double box_mass(const RadialMeasure& nu, cplx z, double alpha,
                const QuadConfig& cfg = {});
double box_mass(const DiscreteMeasure& nu, cplx z, double alpha);

// F^{(sigma)}(z): area average of F over D(z, sigma(z)), sigma < dist to
// the boundary of the unit disk
double mollify(const std::function<double(cplx)>& f,
               const std::function<double(cplx)>& sigma, cplx z,
               const QuadConfig& cfg = {});

// density of the Riesz measure of K_Lambda w.r.t. Lebesgue measure:
// (1/pi) sum m_k (1-|l_k|^2)^2 / |1 - l_k conj(zeta)|^4
double berezin_density(const ZeroSequence& seq, cplx zeta);

// K_Lambda(z) = (|z|^2/2) sum m_k (1-|l_k|^2)^2 / |1 - l_k conj(z)|^2
double k_lambda(const ZeroSequence& seq, cplx z);

}  // namespace dz
