#include "diskzeroes/io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace dz::io {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw ConfigError("config error: " + where + ": " + what);
}

double get_num(const json& j, const char* key, const std::string& where) {
  if (!j.contains(key)) fail(where, std::string("missing field '") + key + "'");
  if (!j[key].is_number()) fail(where + "." + key, "expected a number");
  return j[key].get<double>();
}

double get_num_or(const json& j, const char* key, double fallback) {
  if (!j.contains(key)) return fallback;
  return j[key].get<double>();
}

cplx get_point(const json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    fail(where, "expected [re, im]");
  return {j[0].get<double>(), j[1].get<double>()};
}

}  // namespace

UnionDomain parse_domain(const json& j) {
  if (!j.contains("disks") || !j["disks"].is_array() || j["disks"].empty())
    fail("domain", "expected nonempty 'disks' array");
  UnionDomain d;
  d.ambient_radius = get_num_or(j, "ambient_radius", 1.0);
  for (const auto& dj : j["disks"]) {
    Disk disk;
    disk.center = get_point(dj.at("c"), "domain.disks.c");
    disk.radius = get_num(dj, "r", "domain.disks");
    if (!(disk.radius > 0.0)) fail("domain.disks.r", "radius must be > 0");
    d.disks.push_back(disk);
  }
  return d;
}

std::vector<UnionDomain> parse_family(const json& j) {
  if (j.contains("domains")) {
    std::vector<UnionDomain> fam;
    for (const auto& dj : j["domains"]) fam.push_back(parse_domain(dj));
    return fam;
  }
  if (j.contains("model")) {
    std::string model = j["model"].get<std::string>();
    if (model == "dyadic_disks") {
      int j_max = static_cast<int>(get_num(j, "j_max", "family"));
      if (j_max < 1) fail("family.j_max", "must be >= 1");
      std::vector<UnionDomain> fam;
      for (int k = 1; k <= j_max; ++k)
        fam.push_back(UnionDomain{{Disk{0.0, 1.0 - std::ldexp(1.0, -k)}}});
      return fam;
    }
    fail("family.model", "unknown model '" + model + "'");
  }
  if (j.contains("seed")) {
    uint64_t seed = j["seed"].get<uint64_t>();
    int count = static_cast<int>(get_num(j, "count", "family"));
    double a = get_num(j, "a", "family");
    return random_domain_family(seed, count, a);
  }
  fail("family", "expected 'domains', 'model' or generator fields");
}

ZeroSequence parse_sequence(const json& j) {
  ZeroSequence seq;
  if (j.contains("model")) {
    std::string model = j["model"].get<std::string>();
    int k_max = static_cast<int>(get_num(j, "k_max", "sequence"));
    int mult = static_cast<int>(get_num_or(j, "multiplicity", 1.0));
    if (model == "dyadic") return dyadic_sequence(k_max, mult);
    if (model == "harmonic") return harmonic_sequence(k_max, mult);
    fail("sequence.model", "unknown model '" + model + "'");
  }
  if (!j.contains("points")) fail("sequence", "expected 'points' or 'model'");
  for (const auto& pj : j["points"]) {
    ZeroEntry e;
    e.point = get_point(pj.at("z"), "sequence.points.z");
    e.multiplicity = static_cast<int>(get_num_or(pj, "m", 1.0));
    seq.entries.push_back(e);
  }
  try {
    seq.validate();
  } catch (const std::exception& ex) {
    fail("sequence.points", ex.what());
  }
  return seq;
}

RadialWeight parse_weight(const json& j) {
  std::string kind = j.value("kind", "power_log");
  RadialWeight w;
  if (kind == "power_log") {
    w = PowerLogWeight{get_num(j, "p", "weight")};
  } else if (kind == "tabulated") {
    TabulatedWeight t;
    if (!j.contains("knots")) fail("weight", "tabulated weight needs 'knots'");
    for (const auto& kj : j["knots"]) {
      if (!kj.is_array() || kj.size() != 2) fail("weight.knots", "expected [t, M]");
      t.knots.push_back({kj[0].get<double>(), kj[1].get<double>()});
    }
    w = t;
  } else {
    fail("weight.kind", "unknown kind '" + kind + "'");
  }
  try {
    validate_weight(w);
  } catch (const std::exception& ex) {
    fail("weight", ex.what());
  }
  return w;
}

Kernel parse_kernel(const json& j) {
  std::string name = j.value("kernel", "");
  Kernel k;
  if (name == "log")
    k = LogKernel{};
  else if (name == "blaschke")
    k = BlaschkeKernel{};
  else if (name == "blaschke_bar")
    k = BlaschkeBarKernel{};
  else if (name == "dzhrbashian")
    k = DzhrbashianKernel{static_cast<int>(get_num(j, "p", "kernel"))};
  else if (name == "horowitz")
    k = HorowitzKernel{};
  else if (name == "beller")
    k = BellerKernel{get_num(j, "s", "kernel")};
  else if (name == "bomash")
    k = BomashKernel{get_num(j, "s", "kernel")};
  else if (name == "korenblum")
    k = KorenblumKernel{};
  else if (name == "hadamard_weierstrass")
    k = HadamardWeierstrassKernel{static_cast<int>(get_num(j, "q", "kernel"))};
  else if (name == "weierstrass") {
    WeierstrassKernel w;
    w.r0 = get_num(j, "r0", "kernel");
    for (const auto& r : j.at("radii")) w.radii.push_back(r.get<double>());
    for (const auto& g : j.at("genera")) w.genera.push_back(g.get<int>());
    k = w;
  } else {
    fail("kernel", "unknown kernel '" + name + "'");
  }
  try {
    validate_kernel(k);
  } catch (const std::exception& ex) {
    fail("kernel", ex.what());
  }
  return k;
}

MonteCarloConfig parse_mc(const json& j) {
  MonteCarloConfig cfg;
  cfg.seed = j.value("seed", uint64_t{1});
  cfg.walks = static_cast<long>(get_num_or(j, "walks", 10000.0));
  cfg.shell = get_num_or(j, "shell", 1e-6);
  cfg.max_steps = static_cast<long>(get_num_or(j, "max_steps", 100000.0));
  try {
    validate_reporting_config(cfg);
  } catch (const std::exception& ex) {
    fail("mc", ex.what());
  }
  return cfg;
}

QuadConfig parse_quad(const json& j) {
  QuadConfig q;
  q.tol = get_num_or(j, "tol", 1e-6);
  q.max_cells = static_cast<int>(get_num_or(j, "max_cells", 200000.0));
  if (!(q.tol > 0.0)) fail("quad.tol", "must be > 0");
  if (q.max_cells < 16) fail("quad.max_cells", "must be >= 16");
  return q;
}

Measure parse_measure(const json& j) {
  std::string type = j.value("type", "");
  if (type == "zero") return Measure{RadialMeasure::zero()};
  if (type == "counting")
    return Measure{DiscreteMeasure::from_sequence(parse_sequence(j.at("sequence")))};
  if (type == "berezin") return Measure{BerezinMeasure{parse_sequence(j.at("sequence"))}};
  if (type == "riesz_power_log")
    return Measure{RadialMeasure::power_log_riesz(get_num(j, "p", "measure"))};
  if (type == "riesz_of_weight")
    return Measure{riesz_measure_of(parse_weight(j.at("weight")))};
  fail("measure.type", "unknown type '" + type + "'");
}

GridSpec parse_grid(const json& j) {
  GridSpec g;
  g.j_max = static_cast<int>(get_num_or(j, "j_max", 10.0));
  g.angles = static_cast<int>(get_num_or(j, "angles", 256.0));
  if (g.j_max < 1 || g.angles < 1) fail("grid", "j_max and angles must be >= 1");
  return g;
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config error: cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& ex) {
    throw ConfigError("config error: " + path + ": " + ex.what());
  }
}

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string fmt_shortest(double v) {
  char buf[40];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

std::string estimate_to_json(const Estimate& e) {
  std::ostringstream os;
  os << "{\"value\":" << fmt17(e.value) << ",\"stderr\":" << fmt17(e.std_error)
     << ",\"walks\":" << e.walks_used << "}";
  return os.str();
}

std::string report_to_json(const CriterionReport& rep) {
  std::ostringstream os;
  os << "{\n\"criterion\":\"" << rep.criterion << "\",\n\"records\":[\n";
  for (size_t i = 0; i < rep.records.size(); ++i) {
    const auto& r = rep.records[i];
    os << "{\"domain\":" << r.domain_id
       << ",\"outer_radius\":" << fmt17(r.outer_radius)
       << ",\"lhs\":" << estimate_to_json(r.lhs)
       << ",\"rhs\":" << estimate_to_json(r.rhs)
       << ",\"margin\":" << fmt17(r.margin) << "}";
    if (i + 1 < rep.records.size()) os << ",";
    os << "\n";
  }
  os << "],\n\"max_margin\":" << fmt17(rep.max_margin)
     << ",\n\"argmax_domain\":" << rep.argmax_domain << ",\n\"verdict\":\""
     << verdict_name(rep.verdict) << "\"\n}\n";
  return os.str();
}

std::string report_to_csv(const CriterionReport& rep) {
  std::ostringstream os;
  os << "domain_id,outer_radius,lhs,lhs_stderr,rhs,rhs_stderr,margin\n";
  for (const auto& r : rep.records)
    os << r.domain_id << "," << fmt17(r.outer_radius) << ","
       << fmt17(r.lhs.value) << "," << fmt17(r.lhs.std_error) << ","
       << fmt17(r.rhs.value) << "," << fmt17(r.rhs.std_error) << ","
       << fmt17(r.margin) << "\n";
  return os.str();
}

std::string domains_to_json(const std::vector<UnionDomain>& family) {
  std::ostringstream os;
  os << "{\n\"domains\":[\n";
  for (size_t i = 0; i < family.size(); ++i) {
    os << "{\"disks\":[";
    for (size_t k = 0; k < family[i].disks.size(); ++k) {
      const auto& d = family[i].disks[k];
      os << "{\"c\":[" << fmt17(d.center.real()) << "," << fmt17(d.center.imag())
         << "],\"r\":" << fmt17(d.radius) << "}";
      if (k + 1 < family[i].disks.size()) os << ",";
    }
    os << "]}";
    if (i + 1 < family.size()) os << ",";
    os << "\n";
  }
  os << "]\n}\n";
  return os.str();
}

std::string growth_to_json(const GrowthReport& rep,
                           const std::string& extra_fields) {
  std::ostringstream os;
  os << "{\"p\":" << fmt17(rep.p) << ",\"sup_value\":" << fmt17(rep.sup_value)
     << ",\"grid\":{\"j_max\":" << rep.grid.j_max
     << ",\"angles\":" << rep.grid.angles << "},\"attained_at\":["
     << fmt17(rep.attained_at.real()) << "," << fmt17(rep.attained_at.imag())
     << "]" << extra_fields << "}\n";
  return os.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);  // LF endings as-is
  if (!out) throw ConfigError("config error: cannot write '" + path + "'");
  out << content;
}

}  // namespace dz::io
