#pragma once

#include <cstdint>
#include <set>
#include <vector>

#include "pomod/poset.hpp"

namespace pomod {

// Degree in Z^n, componentwise partial order.
using Degree = std::vector<std::int64_t>;

// Face of N^n as its characteristic subset of {0..n-1}.
using Face = std::set<int>;

inline bool degree_leq(const Degree& a, const Degree& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

struct Box {
  Degree lo, hi;  // inclusive

  Box() = default;
  Box(Degree lo_, Degree hi_);

  int n() const { return int(lo.size()); }
  std::int64_t cell_count() const;
  std::int64_t index(const Degree& q) const;
  Degree degree(std::int64_t idx) const;
  Degree clamp(const Degree& q) const;
  bool contains(const Degree& q) const;
  Box grown(std::int64_t margin) const;

  friend bool operator==(const Box& a, const Box& b) { return a.lo == b.lo && a.hi == b.hi; }
};

// Finitely determined region of Z^n: membership anywhere is looked up at the
// componentwise clamp into the box, so the bitset over the box determines the
// whole region.
struct FinDetRegion {
  Box box;
  RegionKind kind = RegionKind::Downset;
  std::vector<char> cells;  // row-major over box

  FinDetRegion() = default;
  FinDetRegion(Box b, RegionKind k, std::vector<char> cells_, bool check = true);

  bool contains(const Degree& q) const;
  std::int64_t count() const;
  bool empty() const;
  FinDetRegion reboxed(const Box& b) const;

  friend bool operator==(const FinDetRegion& a, const FinDetRegion& b) {
    return a.box == b.box && a.kind == b.kind && a.cells == b.cells;
  }
};

// k[b + Z tau + N^n]  (indecomposable flat)
struct IndecFlatLabel {
  Degree base;
  Face tau;
  friend bool operator==(const IndecFlatLabel& a, const IndecFlatLabel& b) {
    return a.base == b.base && a.tau == b.tau;
  }
  friend bool operator<(const IndecFlatLabel& a, const IndecFlatLabel& b) {
    if (a.tau != b.tau) return a.tau < b.tau;
    return a.base < b.base;
  }
};

// k[b + Z tau - N^n]  (indecomposable injective)
struct IndecInjLabel {
  Degree base;
  Face tau;
  friend bool operator==(const IndecInjLabel& a, const IndecInjLabel& b) {
    return a.base == b.base && a.tau == b.tau;
  }
  friend bool operator<(const IndecInjLabel& a, const IndecInjLabel& b) {
    if (a.tau != b.tau) return a.tau < b.tau;
    return a.base < b.base;
  }
};

FinDetRegion indec_flat_region(const IndecFlatLabel& f, const Box& box);
FinDetRegion indec_inj_region(const IndecInjLabel& e, const Box& box);

// Degree sets intersect (linear feasibility over Z, coordinatewise).
bool flat_meets_inj(const IndecFlatLabel& f, const IndecInjLabel& e);

std::vector<Face> all_faces(int n);
bool face_subset(const Face& a, const Face& b);

// D_tau = {q in D : q + tau inside D}.
FinDetRegion localize_downset(const FinDetRegion& d, const Face& tau);

// Gamma_tau D: degrees of D not in any D_tau' for tau' not inside tau.
std::vector<Degree> global_support_downset(const FinDetRegion& d, const Face& tau);

// P_tau(D) = (local tau-support of D) - N^n, a downset.
FinDetRegion primary_component_downset(const FinDetRegion& d, const Face& tau);

// All faces with nonempty local support, paired with their components.
std::vector<std::pair<Face, FinDetRegion>> canonical_primary_decomposition_downset(
    const FinDetRegion& d);

}  // namespace pomod
