#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "diskzeroes/criteria.hpp"
#include "diskzeroes/io.hpp"
#include "diskzeroes/parallel.hpp"
#include "diskzeroes/products.hpp"

namespace py = pybind11;
using namespace dz;

namespace {

UnionDomain domain_from(const std::vector<std::pair<cplx, double>>& disks) {
  UnionDomain d;
  for (const auto& [c, r] : disks) d.disks.push_back(Disk{c, r});
  return d;
}

ZeroSequence sequence_from(const std::vector<std::pair<cplx, int>>& pts) {
  ZeroSequence seq;
  for (const auto& [z, m] : pts) seq.entries.push_back({z, m});
  seq.validate();
  return seq;
}

Kernel kernel_from(const std::string& name, double s, int genus) {
  io::json j;
  j["kernel"] = name;
  if (name == "beller" || name == "bomash") j["s"] = s;
  if (name == "dzhrbashian") j["p"] = genus;
  if (name == "hadamard_weierstrass") j["q"] = genus;
  return io::parse_kernel(j);
}

py::dict estimate_dict(const Estimate& e) {
  py::dict d;
  d["value"] = e.value;
  d["stderr"] = e.std_error;
  d["walks"] = e.walks_used;
  return d;
}

py::dict report_dict(const CriterionReport& rep) {
  py::dict d;
  d["criterion"] = rep.criterion;
  py::list records;
  for (const auto& r : rep.records) {
    py::dict rd;
    rd["domain"] = r.domain_id;
    rd["outer_radius"] = r.outer_radius;
    rd["lhs"] = estimate_dict(r.lhs);
    rd["rhs"] = estimate_dict(r.rhs);
    rd["margin"] = r.margin;
    records.append(rd);
  }
  d["records"] = records;
  d["max_margin"] = rep.max_margin;
  d["argmax_domain"] = rep.argmax_domain;
  d["verdict"] = verdict_name(rep.verdict);
  return d;
}

MonteCarloConfig mc_from(uint64_t seed, long walks, double shell,
                         long max_steps) {
  return MonteCarloConfig{seed, walks, shell, max_steps};
}

using DiskList = std::vector<std::pair<cplx, double>>;
using PointList = std::vector<std::pair<cplx, int>>;

}  // namespace

PYBIND11_MODULE(_diskzeroes, m) {
  m.doc() = "potential-theory toolkit for zero sets of weighted disk spaces";

  m.def("set_threads", &par::set_thread_count, py::arg("n"),
        "worker threads; never changes results");

  m.def(
      "contains",
      [](const DiskList& d, cplx z) { return contains(domain_from(d), z); },
      py::arg("disks"), py::arg("z"));
  m.def(
      "inscribed_radius",
      [](const DiskList& d, cplx z) {
        return inscribed_radius(domain_from(d), z);
      },
      py::arg("disks"), py::arg("z"));
  m.def(
      "is_admissible",
      [](const DiskList& d, double a) {
        return is_admissible(domain_from(d), a);
      },
      py::arg("disks"), py::arg("a"));
  m.def(
      "box_contains",
      [](cplx anchor, double alpha, cplx zeta) {
        return box_contains(CarlesonBox{anchor, alpha}, zeta);
      },
      py::arg("anchor"), py::arg("alpha"), py::arg("zeta"));
  m.def(
      "random_domain_family",
      [](uint64_t seed, int count, double a) {
        std::vector<DiskList> out;
        for (const auto& dom : random_domain_family(seed, count, a)) {
          DiskList dl;
          for (const auto& disk : dom.disks)
            dl.push_back({disk.center, disk.radius});
          out.push_back(dl);
        }
        return out;
      },
      py::arg("seed"), py::arg("count"), py::arg("a"));

  m.def(
      "kernel_eval",
      [](const std::string& name, cplx zeta, cplx z, double s, int genus) {
        return eval_kernel(kernel_from(name, s, genus), zeta, z);
      },
      py::arg("kernel"), py::arg("zeta"), py::arg("z"), py::arg("s") = 2.0,
      py::arg("genus") = 0);
  m.def(
      "harmonic_component",
      [](const std::string& name, cplx zeta, cplx z, double s, int genus) {
        return harmonic_component(kernel_from(name, s, genus), zeta, z);
      },
      py::arg("kernel"), py::arg("zeta"), py::arg("z"), py::arg("s") = 2.0,
      py::arg("genus") = 0);

  m.def(
      "berezin_density",
      [](const PointList& pts, cplx zeta) {
        return berezin_density(sequence_from(pts), zeta);
      },
      py::arg("points"), py::arg("zeta"));
  m.def(
      "k_lambda",
      [](const PointList& pts, cplx z) {
        return k_lambda(sequence_from(pts), z);
      },
      py::arg("points"), py::arg("z"));
  m.def(
      "blaschke_sum",
      [](const PointList& pts) { return blaschke_sum(sequence_from(pts)); },
      py::arg("points"));
  m.def(
      "box_mass_power_log",
      [](double p, cplx z, double alpha) {
        return box_mass(RadialMeasure::power_log_riesz(p), z, alpha);
      },
      py::arg("p"), py::arg("z"), py::arg("alpha"));

  m.def(
      "green_disk",
      [](cplx center, double radius, cplx zeta, cplx pole) {
        return green_disk(Disk{center, radius}, zeta, pole);
      },
      py::arg("center"), py::arg("radius"), py::arg("zeta"),
      py::arg("pole") = cplx(0.0, 0.0));
  m.def(
      "green_union",
      [](const DiskList& d, cplx zeta, uint64_t seed, long walks, double shell,
         long max_steps) {
        return estimate_dict(green_union(domain_from(d), zeta,
                                         mc_from(seed, walks, shell, max_steps)));
      },
      py::arg("disks"), py::arg("zeta"), py::arg("seed") = 1,
      py::arg("walks") = 10000, py::arg("shell") = 1e-6,
      py::arg("max_steps") = 100000);
  m.def(
      "kappa_hat",
      [](const DiskList& d, uint64_t seed, long walks, double shell,
         long max_steps) {
        return estimate_dict(
            kappa_hat(domain_from(d), mc_from(seed, walks, shell, max_steps)));
      },
      py::arg("disks"), py::arg("seed") = 1, py::arg("walks") = 10000,
      py::arg("shell") = 1e-6, py::arg("max_steps") = 100000);

  m.def(
      "criterion_radial",
      [](const PointList& pts, double p,
         const std::vector<DiskList>& family, uint64_t seed, long walks) {
        std::vector<UnionDomain> doms;
        for (const auto& dl : family) doms.push_back(domain_from(dl));
        return report_dict(criterion_radial(sequence_from(pts),
                                            PowerLogWeight{p}, doms,
                                            mc_from(seed, walks, 1e-6, 100000)));
      },
      py::arg("points"), py::arg("p"), py::arg("family"), py::arg("seed") = 1,
      py::arg("walks") = 10000);
  m.def(
      "criterion_berezin",
      [](const PointList& pts, double p,
         const std::vector<DiskList>& family, uint64_t seed, long walks,
         double tol) {
        std::vector<UnionDomain> doms;
        for (const auto& dl : family) doms.push_back(domain_from(dl));
        return report_dict(criterion_berezin(
            sequence_from(pts), p, doms, mc_from(seed, walks, 1e-6, 100000),
            QuadConfig{tol, 200000}));
      },
      py::arg("points"), py::arg("p"), py::arg("family"), py::arg("seed") = 1,
      py::arg("walks") = 10000, py::arg("tol") = 1e-3);

  m.def(
      "log_product",
      [](const std::string& name, const PointList& pts, cplx z, double s,
         int genus) {
        return log_product(kernel_from(name, s, genus), sequence_from(pts), z);
      },
      py::arg("kernel"), py::arg("points"), py::arg("z"), py::arg("s") = 2.0,
      py::arg("genus") = 0);
  m.def(
      "blaschke_product",
      [](const PointList& pts, cplx z) {
        return blaschke_product(sequence_from(pts), z);
      },
      py::arg("points"), py::arg("z"));
  m.def(
      "growth_norm",
      [](const std::string& name, const PointList& pts, double p, int j_max,
         int angles, double s, int genus) {
        Kernel k = kernel_from(name, s, genus);
        ZeroSequence seq = sequence_from(pts);
        auto rep = growth_norm(
            [&](cplx z) { return log_product(k, seq, z); }, p,
            GridSpec{j_max, angles}, seq);
        py::dict d;
        d["p"] = rep.p;
        d["sup_value"] = rep.sup_value;
        d["attained_at"] = rep.attained_at;
        return d;
      },
      py::arg("kernel"), py::arg("points"), py::arg("p"), py::arg("j_max") = 10,
      py::arg("angles") = 256, py::arg("s") = 2.0, py::arg("genus") = 0);

  m.def(
      "q_function_power_log",
      [](double p, cplx z, double tol) {
        return q_function(BomashKernel{2.0},
                          Measure{RadialMeasure::power_log_riesz(p)}, z,
                          QuadConfig{tol, 200000});
      },
      py::arg("p"), py::arg("z"), py::arg("tol") = 1e-3);
  m.def(
      "q_upper_bound_power_log",
      [](double p, cplx z, double eps) {
        return q_upper_bound(PowerLogWeight{p}, z, eps);
      },
      py::arg("p"), py::arg("z"), py::arg("eps"));
  m.def("d2_region_test", &d2_region_test, py::arg("zeta"), py::arg("x"));

  m.def(
      "poisson_jensen_residual",
      [](cplx a, double r) {
        return poisson_jensen_residual(PJLogAbs{a}, r);
      },
      py::arg("a"), py::arg("r"));
}
