#include "diskzeroes/criteria.hpp"

#include <cmath>

#include "diskzeroes/quadrature.hpp"

namespace dz {

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Pass:
      return "PASS";
    case Verdict::Fail:
      return "FAIL";
    case Verdict::Inconclusive:
      return "INCONCLUSIVE";
  }
  return "INCONCLUSIVE";
}

void CriterionReport::finalize() {
  max_margin = -HUGE_VAL;
  argmax_domain = -1;
  for (const auto& r : records)
    if (r.margin > max_margin) {
      max_margin = r.margin;
      argmax_domain = r.domain_id;
    }
  verdict = Verdict::Inconclusive;
  size_t n = records.size();
  if (n < 3) return;
  double m0 = records[n - 3].margin;
  double m1 = records[n - 2].margin;
  double m2 = records[n - 1].margin;
  double g1 = m1 - m0, g2 = m2 - m1;
  if (g1 >= kGrowthStep && g2 >= kGrowthStep)
    verdict = Verdict::Fail;
  else if (g1 <= kStabilizeStep && g2 <= kStabilizeStep)
    verdict = Verdict::Pass;
}

namespace {
void check_family(const std::vector<UnionDomain>& family) {
  for (size_t i = 0; i < family.size(); ++i)
    if (!is_admissible(family[i], 0.0))
      throw std::invalid_argument("criterion family: domain #" +
                                  std::to_string(i) + " is not admissible");
}
}  // namespace

CriterionReport criterion_radial(const ZeroSequence& seq,
                                 const RadialWeight& weight,
                                 const std::vector<UnionDomain>& family,
                                 const MonteCarloConfig& cfg,
                                 const QuadConfig& quad) {
  seq.validate();
  if (seq.contains_origin())
    throw std::invalid_argument("criterion_radial: 0 must not lie in the sequence");
  validate_weight(weight);
  check_family(family);
  CriterionReport rep;
  rep.criterion = "radial";
  for (size_t i = 0; i < family.size(); ++i) {
    DomainRecord rec;
    rec.domain_id = static_cast<int>(i);
    rec.outer_radius = family[i].outer_radius();
    rec.lhs = green_sum_over_sequence(family[i], seq, cfg);
    rec.rhs = weighted_green_integral(family[i], weight, cfg, quad);
    rec.margin = rec.lhs.value - rec.rhs.value;
    rep.records.push_back(rec);
  }
  rep.finalize();
  return rep;
}

CriterionReport criterion_berezin(const ZeroSequence& seq, double p,
                                  const std::vector<UnionDomain>& family,
                                  const MonteCarloConfig& cfg,
                                  const QuadConfig& quad) {
  seq.validate();
  if (seq.contains_origin())
    throw std::invalid_argument("criterion_berezin: 0 must not lie in the sequence");
  if (p < 0.0) throw std::invalid_argument("criterion_berezin needs p >= 0");
  check_family(family);
  CriterionReport rep;
  rep.criterion = "berezin";
  for (size_t i = 0; i < family.size(); ++i) {
    DomainRecord rec;
    rec.domain_id = static_cast<int>(i);
    rec.outer_radius = family[i].outer_radius();
    rec.lhs = green_integral(family[i], Measure{BerezinMeasure{seq}}, cfg, quad);
    rec.rhs = kappa_hat(family[i], cfg, quad);
    rec.rhs.value *= p;
    rec.rhs.std_error *= p;
    rec.margin = rec.lhs.value - rec.rhs.value;
    rep.records.push_back(rec);
  }
  rep.finalize();
  return rep;
}

CriterionReport criterion_general(const Measure& nu_u, const Measure& nu_m,
                                  const std::vector<UnionDomain>& family,
                                  const MonteCarloConfig& cfg,
                                  const QuadConfig& quad) {
  check_family(family);
  CriterionReport rep;
  rep.criterion = "general";
  for (size_t i = 0; i < family.size(); ++i) {
    DomainRecord rec;
    rec.domain_id = static_cast<int>(i);
    rec.outer_radius = family[i].outer_radius();
    // both sides share the same streams: margins of equal measures vanish
    // exactly, and similar measures get correlated noise that cancels
    rec.lhs = green_integral(family[i], nu_u, cfg, quad);
    rec.rhs = green_integral(family[i], nu_m, cfg, quad);
    rec.margin = rec.lhs.value - rec.rhs.value;
    rep.records.push_back(rec);
  }
  rep.finalize();
  return rep;
}

double blaschke_sum(const ZeroSequence& seq) {
  double sum = 0.0;
  for (const auto& e : seq.entries)
    sum += e.multiplicity * (1.0 - std::abs(e.point));
  return sum;
}

double poisson_jensen_residual(const PJCase& u, double r,
                               const QuadConfig& quad) {
  if (!(r > 0.0 && r < 1.0))
    throw std::invalid_argument("poisson_jensen_residual needs 0 < r < 1");
  const Disk disk{0.0, r};
  QuadConfig inner = quad;
  inner.tol = std::min(quad.tol, 1e-9);

  if (const auto* la = std::get_if<PJLogAbs>(&u)) {
    cplx a = la->a;
    if (a == cplx(0.0, 0.0))
      throw std::invalid_argument("poisson_jensen_residual: 0 is a zero of u");
    double u0 = std::log(std::abs(a));
    double mean = circle_average(
        [&](double th) {
          return std::log(std::abs(r * cplx(std::cos(th), std::sin(th)) - a));
        },
        inner);
    double pot = green_disk(disk, a, 0.0);
    return std::abs(u0 - mean + pot);
  }

  const auto& seq = std::get<PJLogBlaschke>(u).seq;
  seq.validate();
  if (seq.contains_origin())
    throw std::invalid_argument("poisson_jensen_residual: 0 is a zero of u");
  double u0 = 0.0, pot = 0.0;
  for (const auto& e : seq.entries) {
    u0 += e.multiplicity * std::log(std::abs(e.point));
    pot += e.multiplicity * green_disk(disk, e.point, 0.0);
  }
  double mean = circle_average(
      [&](double th) {
        cplx z = r * cplx(std::cos(th), std::sin(th));
        double s = 0.0;
        for (const auto& e : seq.entries)
          s += e.multiplicity *
               std::log(std::abs((e.point - z) / (1.0 - std::conj(e.point) * z)));
        return s;
      },
      inner);
  return std::abs(u0 - mean + pot);
}

}  // namespace dz
