#include "diskzeroes/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <queue>

namespace dz {

namespace {
constexpr double kPi = std::numbers::pi;

double finite_or_zero(double v) { return std::isfinite(v) ? v : 0.0; }
}  // namespace

double circle_average(const std::function<double(double)>& f,
                      const QuadConfig& cfg) {
  auto level_mean = [&](long n, double offset, bool& ok) {
    double sum = 0.0;
    ok = true;
    for (long j = 0; j < n; ++j) {
      double v = f(2.0 * kPi * (static_cast<double>(j) + offset) /
                   static_cast<double>(n));
      if (!std::isfinite(v)) {
        ok = false;
        return 0.0;
      }
      sum += v;
    }
    return sum / static_cast<double>(n);
  };

  auto sample = [&](long n) {
    bool ok = false;
    double m = level_mean(n, 0.5, ok);
    if (!ok) m = level_mean(n, 0.5 + 1.0 / (3.0 * static_cast<double>(n)), ok);
    if (!ok)
      throw std::runtime_error(
          "circle average: integrand is -inf on a set of positive measure");
    return m;
  };

  long n = 16;
  double prev = sample(n);
  for (int level = 0; level < 16; ++level) {
    n *= 2;
    double cur = sample(n);
    double diff = std::abs(cur - prev);
    if (diff <= cfg.tol || diff <= 1e-12 * std::abs(cur) || diff <= 1e-15)
      return cur;
    prev = cur;
    if (n > cfg.max_cells && n > 1 << 16) break;
  }
  throw QuadratureError("circle average did not converge", std::abs(prev));
}

double integrate_1d(const std::function<double(double)>& f, double a, double b,
                    const QuadConfig& cfg) {
  if (!(b > a)) return 0.0;
  const double c = 0.5 * (a + b), half = 0.5 * (b - a);
  const double tmax = 3.6;

  // weighted sample of the tanh-sinh transform at abscissa t
  auto node = [&](double t) {
    double u = 0.5 * kPi * std::sinh(t);
    double ch = std::cosh(u);
    double w = 0.5 * kPi * std::cosh(t) / (ch * ch);
    if (w < 1e-300) return 0.0;
    double x = c + half * std::tanh(u);
    if (x <= a || x >= b) return 0.0;
    return w * finite_or_zero(f(x));
  };

  double h = 0.5;
  double sum = node(0.0);
  for (double t = h; t <= tmax; t += h) sum += node(t) + node(-t);
  double prev = sum * h * half;

  for (int level = 1; level <= 12; ++level) {
    h *= 0.5;
    for (double t = h; t <= tmax; t += 2.0 * h) sum += node(t) + node(-t);
    double cur = sum * h * half;
    double diff = std::abs(cur - prev);
    if (level >= 2 && (diff <= cfg.tol || diff <= 1e-10 * std::abs(cur)))
      return cur;
    prev = cur;
  }
  throw QuadratureError("1d quadrature did not converge", std::abs(prev));
}

double integrate_segments(const std::function<double(double)>& f,
                          std::vector<double> points, const QuadConfig& cfg) {
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  double total = 0.0;
  QuadConfig per = cfg;
  if (points.size() > 2)
    per.tol = cfg.tol / static_cast<double>(points.size() - 1);
  for (size_t i = 0; i + 1 < points.size(); ++i)
    total += integrate_1d(f, points[i], points[i + 1], per);
  return total;
}

namespace {

// nested Gauss-Legendre nodes on [-1,1]
constexpr double kGl2X[] = {-0.5773502691896257, 0.5773502691896257};
constexpr double kGl2W[] = {1.0, 1.0};
constexpr double kGl3X[] = {-0.7745966692414834, 0.0, 0.7745966692414834};
constexpr double kGl3W[] = {5.0 / 9.0, 8.0 / 9.0, 5.0 / 9.0};

struct Cell {
  double t0, t1, th0, th1;
  double value = 0.0;
  double err = 0.0;
  long index = 0;
};

struct CellOrder {
  bool operator()(const Cell& a, const Cell& b) const {
    if (a.err != b.err) return a.err < b.err;
    return a.index > b.index;  // older cell first on ties
  }
};

}  // namespace

double integrate_polar(const std::function<double(double, double)>& f,
                       const RadialMeasure& nu, double t0, double t1,
                       double th0, double th1,
                       const std::vector<PolarPoint>& singular,
                       const QuadConfig& cfg, std::vector<double> t_breaks,
                       std::vector<double> th_breaks) {
  if (nu.is_zero() || !(t1 > t0) || !(th1 > th0)) return 0.0;

  // evaluate one cell with the nested pair of tensor rules
  auto eval_cell = [&](Cell& cell) {
    const double tm = 0.5 * (cell.t0 + cell.t1), tr = 0.5 * (cell.t1 - cell.t0);
    const double hm = 0.5 * (cell.th0 + cell.th1),
                 hr = 0.5 * (cell.th1 - cell.th0);
    const double ang = (cell.th1 - cell.th0) / (2.0 * kPi);
    double coarse = 0.0, fine = 0.0;
    if (nu.has_density()) {
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
          double t = tm + tr * kGl2X[i];
          coarse += kGl2W[i] * kGl2W[j] *
                    finite_or_zero(f(t, hm + hr * kGl2X[j])) * nu.density(t);
        }
      coarse *= tr * hr / (2.0 * kPi);
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
          double t = tm + tr * kGl3X[i];
          fine += kGl3W[i] * kGl3W[j] *
                  finite_or_zero(f(t, hm + hr * kGl3X[j])) * nu.density(t);
        }
      fine *= tr * hr / (2.0 * kPi);
    } else {
      // atoms: exact in t, nested rule in theta only
      for (const auto& [r, m] : nu.atoms()) {
        if (r < cell.t0 || r >= cell.t1) continue;
        double c2 = 0.0, c3 = 0.0;
        for (int j = 0; j < 2; ++j)
          c2 += kGl2W[j] * finite_or_zero(f(r, hm + hr * kGl2X[j]));
        for (int j = 0; j < 3; ++j)
          c3 += kGl3W[j] * finite_or_zero(f(r, hm + hr * kGl3X[j]));
        coarse += m * c2 * 0.5;
        fine += m * c3 * 0.5;
      }
      coarse *= ang;
      fine *= ang;
    }
    cell.value = fine;
    cell.err = std::abs(fine - coarse);
  };

  auto inside = [](const Cell& c, const PolarPoint& s) {
    return s.t > c.t0 && s.t < c.t1 && s.theta > c.th0 && s.theta < c.th1;
  };
  auto negligible = [&](const Cell& c) {
    double size = std::max(c.t1 - c.t0, 0.5 * (c.t0 + c.t1) * (c.th1 - c.th0));
    if (size >= kPoleExclusion) return false;
    for (const auto& s : singular)
      if (s.t >= c.t0 - kPoleExclusion && s.t <= c.t1 + kPoleExclusion &&
          s.theta >= c.th0 - kPoleExclusion && s.theta <= c.th1 + kPoleExclusion)
        return true;
    return false;
  };

  std::priority_queue<Cell, std::vector<Cell>, CellOrder> heap;
  std::vector<Cell> done;  // cells no longer refined
  long next_index = 0;
  long cells_made = 0;
  double total_err = 0.0;

  // splits a rectangle at singular points recursively, then books it
  std::function<void(Cell)> admit = [&](Cell c) {
    if (!(c.t1 > c.t0) || !(c.th1 > c.th0)) return;
    if (negligible(c)) return;
    for (const auto& s : singular) {
      if (inside(c, s)) {
        admit({c.t0, s.t, c.th0, s.theta, 0, 0, 0});
        admit({s.t, c.t1, c.th0, s.theta, 0, 0, 0});
        admit({c.t0, s.t, s.theta, c.th1, 0, 0, 0});
        admit({s.t, c.t1, s.theta, c.th1, 0, 0, 0});
        return;
      }
    }
    c.index = next_index++;
    eval_cell(c);
    ++cells_made;
    total_err += c.err;
    heap.push(c);
  };

  auto add_break = [](std::vector<double>& v, double x, double lo, double hi) {
    if (x > lo && x < hi) v.push_back(x);
  };
  t_breaks.push_back(t0);
  t_breaks.push_back(t1);
  th_breaks.push_back(th0);
  th_breaks.push_back(th1);
  for (const auto& s : singular) {
    add_break(t_breaks, s.t, t0, t1);
    add_break(th_breaks, s.theta, th0, th1);
  }
  auto tidy = [](std::vector<double>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
  };
  tidy(t_breaks);
  tidy(th_breaks);
  t_breaks.erase(std::remove_if(t_breaks.begin(), t_breaks.end(),
                                [&](double x) { return x < t0 || x > t1; }),
                 t_breaks.end());
  th_breaks.erase(std::remove_if(th_breaks.begin(), th_breaks.end(),
                                 [&](double x) { return x < th0 || x > th1; }),
                  th_breaks.end());

  for (size_t i = 0; i + 1 < t_breaks.size(); ++i)
    for (size_t j = 0; j + 1 < th_breaks.size(); ++j)
      admit({t_breaks[i], t_breaks[i + 1], th_breaks[j], th_breaks[j + 1],
             0, 0, 0});

  while (total_err > cfg.tol && !heap.empty()) {
    if (cells_made >= cfg.max_cells)
      throw QuadratureError("2d quadrature cell budget exhausted", total_err);
    Cell c = heap.top();
    heap.pop();
    total_err -= c.err;
    double size = std::max(c.t1 - c.t0, 0.5 * (c.t0 + c.t1) * (c.th1 - c.th0));
    if (size < kPoleExclusion || c.err == 0.0) {
      done.push_back(c);  // cannot usefully refine further
      continue;
    }
    double tm = 0.5 * (c.t0 + c.t1), hm = 0.5 * (c.th0 + c.th1);
    admit({c.t0, tm, c.th0, hm, 0, 0, 0});
    admit({tm, c.t1, c.th0, hm, 0, 0, 0});
    admit({c.t0, tm, hm, c.th1, 0, 0, 0});
    admit({tm, c.t1, hm, c.th1, 0, 0, 0});
  }

  while (!heap.empty()) {
    done.push_back(heap.top());
    heap.pop();
  }
  // deterministic reduction: sum in cell creation order
  std::sort(done.begin(), done.end(),
            [](const Cell& a, const Cell& b) { return a.index < b.index; });
  double total = 0.0;
  for (const auto& c : done) total += c.value;
  return total;
}

}  // namespace dz
