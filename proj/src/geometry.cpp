#include "diskzeroes/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "diskzeroes/rng.hpp"

namespace dz {

namespace {
constexpr double kPi = std::numbers::pi;

double wrap_angle(double a) {
  a = std::fmod(a, 2.0 * kPi);
  if (a > kPi) a -= 2.0 * kPi;
  if (a <= -kPi) a += 2.0 * kPi;
  return a;
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};
}  // namespace

double UnionDomain::outer_radius() const {
  double r = 0.0;
  for (const auto& d : disks) r = std::max(r, std::abs(d.center) + d.radius);
  return r;
}

bool contains(const UnionDomain& d, cplx z) {
  for (const auto& disk : d.disks)
    if (std::abs(z - disk.center) < disk.radius) return true;
  return false;
}

bool closed_contains(const UnionDomain& d, cplx z) {
  for (const auto& disk : d.disks)
    if (std::abs(z - disk.center) <= disk.radius) return true;
  return false;
}

double inscribed_radius(const UnionDomain& d, cplx z) {
  double best = 0.0;
  for (const auto& disk : d.disks)
    best = std::max(best, disk.radius - std::abs(z - disk.center));
  return std::max(best, 0.0);
}

int inscribed_disk(const UnionDomain& d, cplx z) {
  int best = -1;
  double best_r = 0.0;
  for (size_t i = 0; i < d.disks.size(); ++i) {
    double r = d.disks[i].radius - std::abs(z - d.disks[i].center);
    if (r > best_r) {
      best_r = r;
      best = static_cast<int>(i);
    }
  }
  return best;
}

cplx nearest_boundary(const UnionDomain& d, cplx z) {
  int i = inscribed_disk(d, z);
  if (i < 0) return z;
  const Disk& disk = d.disks[static_cast<size_t>(i)];
  cplx v = z - disk.center;
  double len = std::abs(v);
  if (len == 0.0) return disk.center + cplx(disk.radius, 0.0);
  return disk.center + v * (disk.radius / len);
}

bool invariants_hold(const UnionDomain& d) {
  if (d.disks.empty()) return false;
  for (const auto& disk : d.disks) {
    if (!(disk.radius > 0.0)) return false;
    if (!std::isfinite(disk.center.real()) || !std::isfinite(disk.center.imag()))
      return false;
    if (std::abs(disk.center) + disk.radius > d.ambient_radius - kAmbientMargin)
      return false;
  }
  if (!contains(d, 0.0)) return false;
  UnionFind uf(d.disks.size());
  for (size_t i = 0; i < d.disks.size(); ++i)
    for (size_t j = i + 1; j < d.disks.size(); ++j)
      if (std::abs(d.disks[i].center - d.disks[j].center) <
          d.disks[i].radius + d.disks[j].radius)
        uf.unite(static_cast<int>(i), static_cast<int>(j));
  int root = uf.find(0);
  for (size_t i = 1; i < d.disks.size(); ++i)
    if (uf.find(static_cast<int>(i)) != root) return false;
  return true;
}

bool is_admissible(const UnionDomain& d, double a) {
  if (a < 0.0 || a >= 1.0) return false;
  if (!invariants_hold(d)) return false;
  if (a == 0.0) return true;
  double central = 0.0;
  for (const auto& disk : d.disks)
    central = std::max(central, disk.radius - std::abs(disk.center));
  if (a > central) return false;
  for (int k = 0; k < 720; ++k) {
    double th = 2.0 * kPi * k / 720.0;
    cplx w = a * cplx(std::cos(th), std::sin(th));
    bool hit = false;
    for (const auto& disk : d.disks)
      if (std::abs(w - disk.center) <= disk.radius + 1e-12) {
        hit = true;
        break;
      }
    if (!hit) return false;
  }
  return true;
}

bool box_contains(const CarlesonBox& box, cplx zeta) {
  double r = std::abs(box.anchor);
  if (r == 0.0) throw std::invalid_argument("Carleson box anchor must be nonzero");
  if (!(box.alpha > 0.0)) throw std::invalid_argument("Carleson box alpha must be > 0");
  double size = box.alpha * (1.0 - r);
  if (std::abs(zeta) >= 1.0) return false;
  if (std::abs(zeta) < r - size) return false;
  double dth = wrap_angle(std::arg(zeta) - std::arg(box.anchor));
  return std::abs(dth) <= size;
}

std::vector<UnionDomain> random_domain_family(uint64_t seed, int count,
                                              double a) {
  if (count < 1) throw std::invalid_argument("family count must be >= 1");
  if (a < 0.0 || a >= 1.0)
    throw std::invalid_argument("family parameter a must lie in [0, 1)");

  std::vector<UnionDomain> family;
  for (double r : {a, 0.5 * (1.0 + a), 0.25 * (3.0 + a)})
    if (r > 0.0) family.push_back(UnionDomain{{Disk{0.0, r}}});

  SplitRng rng(seed, 0xD07A11ull);
  const double cap = 1.0 - kAmbientMargin;
  while (family.size() < static_cast<size_t>(count)) {
    UnionDomain dom;
    double r0 = std::max(a + 0.05, 0.3) +
                rng.uniform() * (0.9 - std::max(a + 0.05, 0.3));
    r0 = std::min(r0, cap);
    dom.disks.push_back(Disk{0.0, r0});
    int extra = static_cast<int>(rng.uniform() * 12.0);  // disk count in [1,12]
    for (int k = 0; k < extra && static_cast<int>(dom.disks.size()) < 12; ++k) {
      const Disk& host = dom.disks[static_cast<size_t>(
          rng.uniform() * static_cast<double>(dom.disks.size()))];
      double rad = 0.05 + 0.4 * rng.uniform();
      double rho = (host.radius + rad) * (0.2 + 0.75 * rng.uniform());
      double phi = 2.0 * kPi * rng.uniform();
      cplx c = host.center + rho * cplx(std::cos(phi), std::sin(phi));
      // shrink until compactly inside the unit disk, keep the overlap edge
      double room = cap - std::abs(c);
      if (room <= 0.02) continue;
      rad = std::min(rad, room);
      if (std::abs(c - host.center) >= host.radius + rad) continue;
      dom.disks.push_back(Disk{c, rad});
    }
    if (is_admissible(dom, a)) family.push_back(std::move(dom));
  }
  return family;
}

}  // namespace dz
