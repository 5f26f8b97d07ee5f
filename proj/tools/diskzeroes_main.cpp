#include <CLI11.hpp>
#include <cmath>
#include <iostream>
#include <optional>
#include <string>

#include "diskzeroes/criteria.hpp"
#include "diskzeroes/io.hpp"
#include "diskzeroes/parallel.hpp"
#include "diskzeroes/products.hpp"

using namespace dz;
namespace io = dz::io;

namespace {

// exit codes: 0 success / PASS, 1 criterion FAIL verdict, 2 usage or config
// error, 3 numeric failure (tolerance miss)
constexpr int kOk = 0;
constexpr int kFailVerdict = 1;
constexpr int kConfigError = 2;
constexpr int kNumericError = 3;

struct CommonOpts {
  std::string config_path;
  std::string out_path;
  std::string format = "json";
  int threads = 0;
  uint64_t seed = 0;
  bool seed_set = false;
};

void add_common(CLI::App* cmd, CommonOpts& opts, bool need_config = true) {
  auto* c = cmd->add_option("--config", opts.config_path, "JSON config file");
  if (need_config) c->required();
  cmd->add_option("--out", opts.out_path, "write the report here");
  cmd->add_option("--format", opts.format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  cmd->add_option("--threads", opts.threads,
                  "worker threads (never changes results)");
  cmd->add_option("--seed", opts.seed, "override the config seed")
      ->each([&opts](const std::string&) { opts.seed_set = true; });
}

void apply_threads(const CommonOpts& opts) {
  if (opts.threads > 0) par::set_thread_count(opts.threads);
}

void emit(const CommonOpts& opts, const std::string& text) {
  std::cout << text;
  if (!opts.out_path.empty()) io::write_file(opts.out_path, text);
}

MonteCarloConfig mc_from(const io::json& j, const CommonOpts& opts) {
  MonteCarloConfig cfg = j.contains("mc") ? io::parse_mc(j["mc"]) : MonteCarloConfig{};
  if (opts.seed_set) cfg.seed = opts.seed;
  return cfg;
}

QuadConfig quad_from(const io::json& j) {
  return j.contains("quad") ? io::parse_quad(j["quad"]) : QuadConfig{};
}

std::string estimate_csv(const Estimate& e) {
  return "value,stderr,walks\n" + io::fmt17(e.value) + "," +
         io::fmt17(e.std_error) + "," + std::to_string(e.walks_used) + "\n";
}

int run_criterion(const std::string& mode, const CommonOpts& opts) {
  apply_threads(opts);
  auto j = io::load_json_file(opts.config_path);
  auto family = io::parse_family(j.at("family"));
  auto mc = mc_from(j, opts);
  auto quad = quad_from(j);
  CriterionReport rep;
  if (mode == "radial") {
    rep = criterion_radial(io::parse_sequence(j.at("sequence")),
                           io::parse_weight(j.at("weight")), family, mc, quad);
  } else if (mode == "berezin") {
    double p = j.at("p").get<double>();
    rep = criterion_berezin(io::parse_sequence(j.at("sequence")), p, family,
                            mc, quad);
  } else {
    rep = criterion_general(io::parse_measure(j.at("nu_u")),
                            io::parse_measure(j.at("nu_m")), family, mc, quad);
  }
  emit(opts, opts.format == "csv" ? io::report_to_csv(rep)
                                  : io::report_to_json(rep));
  return rep.verdict == Verdict::Fail ? kFailVerdict : kOk;
}

int run_pj(const CommonOpts& opts) {
  io::json j;
  if (!opts.config_path.empty()) {
    j = io::load_json_file(opts.config_path);
  } else {
    // the three canonical checks: zero inside, Blaschke factor, zero outside
    j = io::json::parse(R"({"cases":[
      {"name":"log_abs_inside","kind":"log_abs","a":[0.3,0.0],"r":0.5},
      {"name":"blaschke_factor","kind":"blaschke",
       "sequence":{"points":[{"z":[0.3,0.0],"m":1}]},"r":0.5},
      {"name":"log_abs_outside","kind":"log_abs","a":[0.7,0.0],"r":0.5}]})");
  }
  double tol = j.value("tol", 1e-6);
  QuadConfig quad = quad_from(j);
  if (quad.tol > 1e-9) quad.tol = 1e-9;
  std::string out = "{\n\"cases\":[\n";
  std::string csv = "name,residual,ok\n";
  bool all_ok = true;
  const auto& cases = j.at("cases");
  for (size_t i = 0; i < cases.size(); ++i) {
    const auto& cj = cases[i];
    std::string kind = cj.at("kind").get<std::string>();
    std::string name = cj.value("name", kind + "_" + std::to_string(i));
    double r = cj.at("r").get<double>();
    PJCase pj;
    if (kind == "log_abs") {
      auto a = cj.at("a");
      pj = PJLogAbs{cplx(a[0].get<double>(), a[1].get<double>())};
    } else if (kind == "blaschke") {
      pj = PJLogBlaschke{io::parse_sequence(cj.at("sequence"))};
    } else {
      throw io::ConfigError("config error: cases.kind: unknown kind '" + kind + "'");
    }
    double res = poisson_jensen_residual(pj, r, quad);
    bool ok = res < tol;
    all_ok = all_ok && ok;
    out += "{\"name\":\"" + name + "\",\"residual\":" + io::fmt17(res) +
           ",\"ok\":" + (ok ? "true" : "false") + "}";
    out += (i + 1 < cases.size()) ? ",\n" : "\n";
    csv += name + "," + io::fmt17(res) + "," + (ok ? "true" : "false") + "\n";
  }
  out += "]\n}\n";
  emit(opts, opts.format == "csv" ? csv : out);
  return all_ok ? kOk : kNumericError;
}

int run_q_bound(const CommonOpts& opts) {
  auto j = io::load_json_file(opts.config_path);
  RadialWeight w = io::parse_weight(j.at("weight"));
  QuadConfig quad = quad_from(j);
  std::string out = "{\n\"rows\":[\n";
  std::string csv = "x,eps,q,bound,ok\n";
  bool all_ok = true;
  const auto& xs = j.at("xs");
  const auto& eps = j.at("eps");
  Measure nu{riesz_measure_of(w)};
  size_t rows = xs.size() * eps.size(), row = 0;
  for (const auto& xj : xs) {
    double x = xj.get<double>();
    double q = q_function(BomashKernel{2.0}, nu, x, quad);
    for (const auto& ej : eps) {
      double e = ej.get<double>();
      double bound = q_upper_bound(w, x, e, quad);
      bool ok = q <= bound;
      all_ok = all_ok && ok;
      out += "{\"x\":" + io::fmt17(x) + ",\"eps\":" + io::fmt17(e) +
             ",\"q\":" + io::fmt17(q) + ",\"bound\":" + io::fmt17(bound) +
             ",\"ok\":" + (ok ? "true" : "false") + "}";
      out += (++row < rows) ? ",\n" : "\n";
      csv += io::fmt17(x) + "," + io::fmt17(e) + "," + io::fmt17(q) + "," +
             io::fmt17(bound) + "," + (ok ? "true" : "false") + "\n";
    }
  }
  out += "]\n}\n";
  emit(opts, opts.format == "csv" ? csv : out);
  return all_ok ? kOk : kFailVerdict;
}

// exponent w of the (1-t)^w factor in the kernel's suitability integral;
// 0 means plain mass (every infinite sequence in the disk diverges)
double suitability_power(const Kernel& k) {
  if (std::holds_alternative<BlaschkeKernel>(k) ||
      std::holds_alternative<BlaschkeBarKernel>(k))
    return 1.0;
  if (const auto* d = std::get_if<DzhrbashianKernel>(&k)) return d->genus + 1.0;
  if (std::holds_alternative<HorowitzKernel>(k)) return 2.0;
  if (const auto* b = std::get_if<BellerKernel>(&k)) return b->s;
  if (const auto* bo = std::get_if<BomashKernel>(&k)) return bo->s;
  if (std::holds_alternative<KorenblumKernel>(k)) return 2.0;
  return 0.0;
}

// suitability margin of the discarded tail of a truncated model sequence:
// sum over k > k_max of (1 - lambda_k)^w
double model_tail_margin(const std::string& model, int k_max, double w) {
  if (w <= 0.0) return HUGE_VAL;
  if (model == "dyadic") {
    double q = std::pow(2.0, -w);
    return std::pow(q, k_max + 1) / (1.0 - q);
  }
  // harmonic: sum (k+1)^-w, integral remainder after 1e6 explicit terms
  if (w <= 1.0) return HUGE_VAL;
  double sum = 0.0;
  long cut = k_max + 1000000;
  for (long k = k_max + 1; k <= cut; ++k) sum += std::pow(k + 1.0, -w);
  sum += std::pow(cut + 2.0, 1.0 - w) / (w - 1.0);
  return sum;
}

int run_product_verify(const CommonOpts& opts) {
  auto j = io::load_json_file(opts.config_path);
  Kernel k = io::parse_kernel(j.at("kernel"));
  ZeroSequence seq = io::parse_sequence(j.at("sequence"));
  double p = j.at("p").get<double>();
  GridSpec grid = j.contains("grid") ? io::parse_grid(j["grid"]) : GridSpec{};
  auto rep = growth_norm(
      [&](cplx z) { return log_product(k, seq, z); }, p, grid, seq);
  std::string extra;
  const auto& sj = j.at("sequence");
  if (sj.contains("model")) {
    double tail = model_tail_margin(sj["model"].get<std::string>(),
                                    static_cast<int>(sj.at("k_max").get<double>()),
                                    suitability_power(k));
    extra = ",\"truncated_tail_margin\":" +
            (std::isfinite(tail) ? io::fmt17(tail) : std::string("\"inf\""));
  }
  emit(opts, io::growth_to_json(rep, extra));
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"potential-theory toolkit for zero sets of weighted disk spaces"};
  app.require_subcommand(1);

  CommonOpts ko;
  auto* kernel_eval = app.add_subcommand("kernel-eval", "evaluate a kernel");
  std::string kname = "blaschke";
  double ks = 2.0;
  int kp = 0, kq = 0;
  std::vector<double> zeta{0.0, 0.0}, zz{0.0, 0.0};
  kernel_eval->add_option("--kernel", kname, "kernel name")->required();
  kernel_eval->add_option("--s", ks, "s parameter (beller/bomash)");
  kernel_eval->add_option("--p", kp, "genus (dzhrbashian)");
  kernel_eval->add_option("--q", kq, "genus (hadamard_weierstrass)");
  kernel_eval->add_option("--zeta", zeta, "zeta as RE IM")->expected(2);
  kernel_eval->add_option("--z", zz, "z as RE IM")->expected(2);

  CommonOpts go, kao, co, po, pjo, fo, qo;
  auto* green_eval = app.add_subcommand("green-eval", "g_D(zeta, 0) estimate");
  add_common(green_eval, go);
  auto* kappa = app.add_subcommand("kappa-hat", "kappa-hat of g_D(., 0)");
  add_common(kappa, kao);
  auto* crit = app.add_subcommand("criterion", "run a zero-set criterion");
  crit->require_subcommand(1);
  auto* crad = crit->add_subcommand("radial", "green sums vs weighted means");
  auto* cber = crit->add_subcommand("berezin", "berezin transform test");
  auto* cgen = crit->add_subcommand("general", "general measure pair");
  add_common(crad, co);
  add_common(cber, co);
  add_common(cgen, co);
  auto* prod = app.add_subcommand("product-verify", "growth of a canonical product");
  add_common(prod, po);
  auto* pj = app.add_subcommand("pj-check", "Poisson-Jensen residuals");
  add_common(pj, pjo, false);
  auto* fam = app.add_subcommand("family-gen", "generate a domain family");
  add_common(fam, fo);
  auto* qb = app.add_subcommand("q-bound-check", "Q function vs its bound");
  add_common(qb, qo);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kConfigError;
  }

  try {
    if (kernel_eval->parsed()) {
      Kernel k;
      io::json kj;
      kj["kernel"] = kname;
      if (kname == "beller" || kname == "bomash") kj["s"] = ks;
      if (kname == "dzhrbashian") kj["p"] = kp;
      if (kname == "hadamard_weierstrass") kj["q"] = kq;
      k = io::parse_kernel(kj);
      double v = eval_kernel(k, cplx(zeta[0], zeta[1]), cplx(zz[0], zz[1]));
      std::cout << io::fmt_shortest(v) << "\n";
      return kOk;
    }
    if (green_eval->parsed()) {
      apply_threads(go);
      auto j = io::load_json_file(go.config_path);
      auto d = io::parse_domain(j.at("domain"));
      auto zj = j.at("zeta");
      cplx z(zj[0].get<double>(), zj[1].get<double>());
      auto est = green_union(d, z, mc_from(j, go));
      emit(go, go.format == "csv" ? estimate_csv(est)
                                  : io::estimate_to_json(est) + "\n");
      return kOk;
    }
    if (kappa->parsed()) {
      apply_threads(kao);
      auto j = io::load_json_file(kao.config_path);
      auto d = io::parse_domain(j.at("domain"));
      auto est = kappa_hat(d, mc_from(j, kao), quad_from(j));
      emit(kao, kao.format == "csv" ? estimate_csv(est)
                                    : io::estimate_to_json(est) + "\n");
      return kOk;
    }
    if (crad->parsed()) return run_criterion("radial", co);
    if (cber->parsed()) return run_criterion("berezin", co);
    if (cgen->parsed()) return run_criterion("general", co);
    if (prod->parsed()) return run_product_verify(po);
    if (pj->parsed()) return run_pj(pjo);
    if (fam->parsed()) {
      auto j = io::load_json_file(fo.config_path);
      auto family = io::parse_family(j);
      emit(fo, io::domains_to_json(family));
      return kOk;
    }
    if (qb->parsed()) return run_q_bound(qo);
  } catch (const io::ConfigError& e) {
    std::cerr << e.what() << "\n";
    return kConfigError;
  } catch (const io::json::exception& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kConfigError;
  } catch (const QuadratureError& e) {
    std::cerr << "numeric error: " << e.what() << "\n";
    return kNumericError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kConfigError;
  } catch (const std::domain_error& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kConfigError;
  } catch (const std::exception& e) {
    std::cerr << "numeric error: " << e.what() << "\n";
    return kNumericError;
  }
  return kConfigError;
}
