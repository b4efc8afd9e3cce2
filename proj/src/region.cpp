#include "pomod/hom.hpp"
#include "pomod/zn.hpp"

#include <algorithm>
#include <functional>

namespace pomod {

std::vector<PosetRegion> hom_indicator(const PosetRegion& upset, const PosetRegion& downset) {
  if (upset.carrier.get() != downset.carrier.get())
    throw PosetError("hom: regions on different carriers");
  if (upset.kind != RegionKind::Upset || downset.kind != RegionKind::Downset)
    throw PosetError("hom_indicator expects (upset, downset)");
  return pi0(region_intersection(upset, downset));
}

std::vector<PosetRegion> hom_upset_upset(const PosetRegion& source, const PosetRegion& target) {
  if (source.carrier.get() != target.carrier.get())
    throw PosetError("hom: regions on different carriers");
  if (source.kind != RegionKind::Upset || target.kind != RegionKind::Upset)
    throw PosetError("hom_upset_upset expects upsets");
  std::vector<PosetRegion> out;
  for (PosetRegion& comp : pi0(source)) {
    bool inside = true;
    for (int i : comp.member_indices())
      if (!target.contains(i)) { inside = false; break; }
    if (inside) out.push_back(std::move(comp));
  }
  return out;
}

std::vector<PosetRegion> hom_downset_downset(const PosetRegion& source, const PosetRegion& target) {
  if (source.carrier.get() != target.carrier.get())
    throw PosetError("hom: regions on different carriers");
  if (source.kind != RegionKind::Downset || target.kind != RegionKind::Downset)
    throw PosetError("hom_downset_downset expects downsets");
  std::vector<PosetRegion> out;
  for (PosetRegion& comp : pi0(target)) {
    bool inside = true;
    for (int i : comp.member_indices())
      if (!source.contains(i)) { inside = false; break; }
    if (inside) out.push_back(std::move(comp));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Z^n regions
// ---------------------------------------------------------------------------

Box::Box(Degree lo_, Degree hi_) : lo(std::move(lo_)), hi(std::move(hi_)) {
  if (lo.size() != hi.size()) throw PosetError("box rank mismatch");
  for (size_t i = 0; i < lo.size(); ++i)
    if (lo[i] > hi[i]) throw PosetError("empty box");
}

std::int64_t Box::cell_count() const {
  std::int64_t c = 1;
  for (int i = 0; i < n(); ++i) c *= hi[i] - lo[i] + 1;
  return c;
}

std::int64_t Box::index(const Degree& q) const {
  std::int64_t idx = 0;
  for (int i = 0; i < n(); ++i) {
    if (q[i] < lo[i] || q[i] > hi[i]) throw PosetError("degree outside box");
    idx = idx * (hi[i] - lo[i] + 1) + (q[i] - lo[i]);
  }
  return idx;
}

Degree Box::degree(std::int64_t idx) const {
  Degree q(size_t(n()), 0);
  for (int i = n() - 1; i >= 0; --i) {
    std::int64_t w = hi[i] - lo[i] + 1;
    q[i] = lo[i] + idx % w;
    idx /= w;
  }
  return q;
}

Degree Box::clamp(const Degree& q) const {
  Degree c(size_t(n()), 0);
  for (int i = 0; i < n(); ++i) c[i] = std::min(std::max(q[i], lo[i]), hi[i]);
  return c;
}

bool Box::contains(const Degree& q) const {
  for (int i = 0; i < n(); ++i)
    if (q[i] < lo[i] || q[i] > hi[i]) return false;
  return true;
}

Box Box::grown(std::int64_t margin) const {
  Degree l = lo, h = hi;
  for (int i = 0; i < n(); ++i) { l[i] -= margin; h[i] += margin; }
  return Box(l, h);
}

FinDetRegion::FinDetRegion(Box b, RegionKind k, std::vector<char> cells_, bool check)
    : box(std::move(b)), kind(k), cells(std::move(cells_)) {
  if (std::int64_t(cells.size()) != box.cell_count()) throw PosetError("region cell count mismatch");
  if (kind == RegionKind::Interval) throw PosetError("FinDetRegion must be an upset or downset");
  if (!check) return;
  // Clamp extension of an in-box upset/downset is a genuine upset/downset of
  // Z^n, so in-box closure is the whole faithfulness condition.
  for (std::int64_t idx = 0; idx < box.cell_count(); ++idx) {
    if (!cells[idx]) continue;
    Degree q = box.degree(idx);
    for (int i = 0; i < box.n(); ++i) {
      Degree q2 = q;
      if (kind == RegionKind::Upset) {
        ++q2[i];
        if (q2[i] <= box.hi[i] && !cells[box.index(q2)])
          throw PosetError("cells are not an upset of the box");
      } else {
        --q2[i];
        if (q2[i] >= box.lo[i] && !cells[box.index(q2)])
          throw PosetError("cells are not a downset of the box");
      }
    }
  }
}

bool FinDetRegion::contains(const Degree& q) const { return cells[box.index(box.clamp(q))] != 0; }

std::int64_t FinDetRegion::count() const {
  std::int64_t c = 0;
  for (char x : cells) c += (x != 0);
  return c;
}

bool FinDetRegion::empty() const { return count() == 0; }

FinDetRegion FinDetRegion::reboxed(const Box& b) const {
  std::vector<char> m(size_t(b.cell_count()), 0);
  for (std::int64_t i = 0; i < b.cell_count(); ++i)
    m[i] = contains(b.degree(i));
  return FinDetRegion(b, kind, std::move(m));
}

FinDetRegion indec_flat_region(const IndecFlatLabel& f, const Box& box) {
  std::vector<char> m(size_t(box.cell_count()), 0);
  for (std::int64_t i = 0; i < box.cell_count(); ++i) {
    Degree q = box.degree(i);
    bool in = true;
    for (int k = 0; k < box.n(); ++k)
      if (!f.tau.count(k) && q[k] < f.base[k]) { in = false; break; }
    m[i] = in;
  }
  return FinDetRegion(box, RegionKind::Upset, std::move(m));
}

FinDetRegion indec_inj_region(const IndecInjLabel& e, const Box& box) {
  std::vector<char> m(size_t(box.cell_count()), 0);
  for (std::int64_t i = 0; i < box.cell_count(); ++i) {
    Degree q = box.degree(i);
    bool in = true;
    for (int k = 0; k < box.n(); ++k)
      if (!e.tau.count(k) && q[k] > e.base[k]) { in = false; break; }
    m[i] = in;
  }
  return FinDetRegion(box, RegionKind::Downset, std::move(m));
}

bool flat_meets_inj(const IndecFlatLabel& f, const IndecInjLabel& e) {
  if (f.base.size() != e.base.size()) throw PosetError("label rank mismatch");
  // Coordinatewise: x_k >= f.base[k] unless k in f.tau, x_k <= e.base[k]
  // unless k in e.tau; feasibility is independent per coordinate.
  for (size_t k = 0; k < f.base.size(); ++k) {
    bool lo_free = f.tau.count(int(k)) > 0;
    bool hi_free = e.tau.count(int(k)) > 0;
    if (!lo_free && !hi_free && f.base[k] > e.base[k]) return false;
  }
  return true;
}

std::vector<Face> all_faces(int n) {
  std::vector<Face> out;
  for (int mask = 0; mask < (1 << n); ++mask) {
    Face f;
    for (int i = 0; i < n; ++i)
      if (mask & (1 << i)) f.insert(i);
    out.push_back(std::move(f));
  }
  return out;
}

bool face_subset(const Face& a, const Face& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

FinDetRegion localize_downset(const FinDetRegion& d, const Face& tau) {
  if (d.kind != RegionKind::Downset) throw PosetError("localize_downset needs a downset");
  const Box& box = d.box;
  std::vector<char> m(size_t(box.cell_count()), 0);
  for (std::int64_t i = 0; i < box.cell_count(); ++i) {
    Degree q = box.degree(i);
    // q + tau stays inside iff membership survives at the stabilization
    // horizon: push every tau coordinate one past the box top.
    Degree probe = q;
    for (int k : tau) probe[k] = box.hi[k] + 1;
    m[i] = d.contains(probe);
  }
  return FinDetRegion(box, RegionKind::Downset, std::move(m));
}

namespace {

// Global tau-support of a downset region as a raw cell mask (the support is
// generally neither an upset nor a downset).
std::vector<char> global_support_mask(const FinDetRegion& d, const Face& tau) {
  const Box& box = d.box;
  const int n = box.n();
  // Minimal faces not contained in tau are the rays off tau, so membership in
  // some D_{tau'} with tau' not inside tau reduces to the ray localizations.
  std::vector<FinDetRegion> ray_loc;
  std::vector<int> rays;
  for (int i = 0; i < n; ++i)
    if (!tau.count(i)) {
      rays.push_back(i);
      ray_loc.push_back(localize_downset(d, Face{i}));
    }
  std::vector<char> m(size_t(box.cell_count()), 0);
  for (std::int64_t i = 0; i < box.cell_count(); ++i) {
    if (!d.cells[i]) continue;
    bool supported = true;
    for (size_t r = 0; r < rays.size(); ++r)
      if (ray_loc[r].cells[i]) { supported = false; break; }
    m[i] = supported;
  }
  return m;
}

}  // namespace

std::vector<Degree> global_support_downset(const FinDetRegion& d, const Face& tau) {
  if (d.kind != RegionKind::Downset) throw PosetError("support needs a downset");
  std::vector<char> m = global_support_mask(d, tau);
  std::vector<Degree> out;
  for (std::int64_t i = 0; i < d.box.cell_count(); ++i)
    if (m[i]) out.push_back(d.box.degree(i));
  return out;
}

FinDetRegion primary_component_downset(const FinDetRegion& d, const Face& tau) {
  if (d.kind != RegionKind::Downset) throw PosetError("primary component needs a downset");
  const Box& box = d.box;
  FinDetRegion loc = localize_downset(d, tau);
  std::vector<char> supp = global_support_mask(loc, tau);
  // Cogenerate: q is in P_tau(D) iff q <= s for some s in the local support.
  // The local support is Z tau stable, so comparisons may ignore the tau
  // coordinates entirely.
  std::vector<std::int64_t> sup_cells;
  for (std::int64_t i = 0; i < box.cell_count(); ++i)
    if (supp[i]) sup_cells.push_back(i);
  std::vector<char> m(size_t(box.cell_count()), 0);
  for (std::int64_t i = 0; i < box.cell_count(); ++i) {
    Degree q = box.degree(i);
    for (std::int64_t sc : sup_cells) {
      Degree s = box.degree(sc);
      bool le = true;
      for (int k = 0; k < box.n() && le; ++k)
        if (!tau.count(k) && q[k] > s[k]) le = false;
      if (le) { m[i] = 1; break; }
    }
  }
  return FinDetRegion(box, RegionKind::Downset, std::move(m));
}

std::vector<std::pair<Face, FinDetRegion>> canonical_primary_decomposition_downset(
    const FinDetRegion& d) {
  if (d.kind != RegionKind::Downset) throw PosetError("decomposition needs a downset");
  std::vector<std::pair<Face, FinDetRegion>> out;
  for (const Face& tau : all_faces(d.box.n())) {
    FinDetRegion loc = localize_downset(d, tau);
    std::vector<char> supp = global_support_mask(loc, tau);
    bool nonempty = false;
    for (char c : supp)
      if (c) { nonempty = true; break; }
    if (!nonempty) continue;
    out.emplace_back(tau, primary_component_downset(d, tau));
  }
  return out;
}

}  // namespace pomod
