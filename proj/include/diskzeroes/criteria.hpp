#pragma once

#include <string>
#include <vector>

#include "diskzeroes/green.hpp"
#include "diskzeroes/measures.hpp"
#include "diskzeroes/types.hpp"

namespace dz {

enum class Verdict { Pass, Fail, Inconclusive };

std::string verdict_name(Verdict v);

struct DomainRecord {
  int domain_id = 0;
  double outer_radius = 0.0;
  Estimate lhs;
  Estimate rhs;
  double margin = 0.0;  // lhs.value - rhs.value
};

// The "there exist constants a < 1 and C" quantifier is operationalized as
// an escalation rule over the ordered domain family (one level per family
// member): margins that stop moving by more than kStabilizeStep across the
// last three levels read as bounded (PASS); margins that grow monotonically
// by at least kGrowthStep per level read as unbounded (FAIL); anything else
// is INCONCLUSIVE. The thresholds are reporting conventions, not theorems.
struct CriterionReport {
  static constexpr double kStabilizeStep = 0.1;
  static constexpr double kGrowthStep = 0.5;

  std::string criterion;
  std::vector<DomainRecord> records;
  double max_margin = -HUGE_VAL;
  int argmax_domain = -1;
  Verdict verdict = Verdict::Inconclusive;

  void finalize();  // fills the summary from the records
};

// Radial test: sum of m_k g_D(lambda_k, 0) against the weighted circle
// means of g_D, per family domain
CriterionReport criterion_radial(const ZeroSequence& seq,
                                 const RadialWeight& weight,
                                 const std::vector<UnionDomain>& family,
                                 const MonteCarloConfig& cfg,
                                 const QuadConfig& quad = {});

// Luecking-type test: Berezin aggregation of the sequence against
// p * kappa_hat, per family domain
CriterionReport criterion_berezin(const ZeroSequence& seq, double p,
                                  const std::vector<UnionDomain>& family,
                                  const MonteCarloConfig& cfg,
                                  const QuadConfig& quad = {});

// general form: integral g_D d nu_u vs integral g_D d nu_M
CriterionReport criterion_general(const Measure& nu_u, const Measure& nu_m,
                                  const std::vector<UnionDomain>& family,
                                  const MonteCarloConfig& cfg,
                                  const QuadConfig& quad = {});

// sum of m_k (1 - |lambda_k|)
double blaschke_sum(const ZeroSequence& seq);

// test functions for the Poisson-Jensen residual
struct PJLogAbs { cplx a; };                // u = log|z - a|
struct PJLogBlaschke { ZeroSequence seq; }; // u = log|B_Lambda|
using PJCase = std::variant<PJLogAbs, PJLogBlaschke>;

// |u(0) - integral u d omega_{D(0,r)} + integral g_{D(0,r)}(., 0) d nu_u|
double poisson_jensen_residual(const PJCase& u, double r,
                               const QuadConfig& quad = {});

}  // namespace dz
