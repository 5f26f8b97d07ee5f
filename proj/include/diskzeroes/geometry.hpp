#pragma once

#include <cstdint>
#include <vector>

#include "diskzeroes/types.hpp"

namespace dz {

struct Disk {
  cplx center;
  double radius = 0.0;
};

// Finite union of disks compactly contained in the ambient disk (radius 1
// for the unit disk), forming a domain that contains the origin. The class
// U0d of test domains over which the criteria quantify.
struct UnionDomain {
  std::vector<Disk> disks;
  double ambient_radius = 1.0;

  double outer_radius() const;  // max |c_i| + r_i
};

// Boundary-anchored polar rectangle of relative size alpha about the anchor.
struct CarlesonBox {
  cplx anchor;
  double alpha = 0.0;
};

bool contains(const UnionDomain& d, cplx z);
bool closed_contains(const UnionDomain& d, cplx z);

// max over disks containing z of r_i - |z - c_i|; 0 outside. A valid lower
// bound on dist(z, boundary), so the ball of this radius about z lies in d.
double inscribed_radius(const UnionDomain& d, cplx z);

// index of the disk realizing inscribed_radius (-1 outside)
int inscribed_disk(const UnionDomain& d, cplx z);

// nearest boundary point of the disk realizing the inscribed radius
cplx nearest_boundary(const UnionDomain& d, cplx z);

// structural invariants: strict compact containment in the ambient disk
// (with margin kAmbientMargin), origin interior to some disk, connected
// overlap graph (union-find; disks i,j adjacent iff |c_i-c_j| < r_i+r_j)
bool invariants_hold(const UnionDomain& d);

// invariants plus coverage of the disk D(a): a central disk through the
// origin of inscribed radius >= a, cross-checked by 720 sampled points of
// the circle |z| = a (conservative sampled check)
bool is_admissible(const UnionDomain& d, double a);

bool box_contains(const CarlesonBox& box, cplx zeta);

// Deterministic-in-seed family of admissible domains, each containing D(a),
// with 1..12 disks. Always includes the pure disks D(r) for
// r in {a, (1+a)/2, (3+a)/4} (degenerate r = 0 entries are dropped; the
// returned list has max(count, #representatives) members).
std::vector<UnionDomain> random_domain_family(uint64_t seed, int count,
                                              double a);

}  // namespace dz
