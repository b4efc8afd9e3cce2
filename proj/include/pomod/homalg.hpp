#pragma once

#include "pomod/findet.hpp"

namespace pomod {

// Direct sum of indicator modules of box regions, with bookkeeping for which
// summands are alive at each cell (in label order).
template <class S>
struct IndicatorSum {
  Box box;
  std::vector<FinDetRegion> regions;
  std::vector<std::vector<int>> active;  // per cell: label indices alive there
  FinDetPtr<S> module;

  int position(std::int64_t cell, int label) const {
    const auto& a = active[size_t(cell)];
    for (int i = 0; i < int(a.size()); ++i)
      if (a[i] == label) return i;
    return -1;
  }
};

template <class S>
IndicatorSum<S> indicator_sum(const Box& box, std::vector<FinDetRegion> regions) {
  IndicatorSum<S> out;
  out.box = box;
  out.regions = std::move(regions);
  const std::int64_t cells = box.cell_count();
  out.active.assign(size_t(cells), {});
  std::vector<int> dims(static_cast<size_t>(cells), 0);
  for (std::int64_t c = 0; c < cells; ++c) {
    for (int j = 0; j < int(out.regions.size()); ++j)
      if (out.regions[j].cells[c]) out.active[size_t(c)].push_back(j);
    dims[size_t(c)] = int(out.active[size_t(c)].size());
  }
  std::vector<std::vector<Matrix<S>>> maps(box.n(), std::vector<Matrix<S>>(size_t(cells)));
  for (std::int64_t c = 0; c < cells; ++c) {
    Degree q = box.degree(c);
    for (int i = 0; i < box.n(); ++i) {
      if (q[i] >= box.hi[i]) continue;
      Degree q2 = q;
      ++q2[i];
      std::int64_t c2 = box.index(q2);
      Matrix<S> m(dims[size_t(c2)], dims[size_t(c)]);
      for (int col = 0; col < dims[size_t(c)]; ++col) {
        int row = out.position(c2, out.active[size_t(c)][col]);
        if (row >= 0) m(row, col) = S(1);
      }
      maps[i][size_t(c)] = std::move(m);
    }
  }
  out.module = FinDetModule<S>::make(box, std::move(dims), std::move(maps));
  return out;
}

template <class S>
struct InjectiveHull {
  std::vector<IndecInjLabel> labels;
  IndicatorSum<S> sum;
  FinDetPtr<S> source;          // margin-normalized copy of the input
  FinDetMorphism<S> inclusion;  // source -> sum.module
};

namespace detail {

// Hull candidate: one summand per socle vector, with the dual functional of
// that vector at its socle degree.
template <class S>
struct HullCandidate {
  IndecInjLabel label;
  Degree eval_degree;
  Matrix<S> functional;  // 1 x dim M_{eval_degree}
};

template <class S>
std::vector<HullCandidate<S>> hull_candidates(const FinDetPtr<S>& m) {
  std::vector<HullCandidate<S>> out;
  for (const Cogenerator<S>& cg : cogenerators(m)) {
    int d = cg.socle_basis.rows();
    Matrix<S> comp = standard_complement(cg.socle_basis, d);
    auto inv = Matrix<S>::hstack(cg.socle_basis, comp).inverse();
    if (!inv) throw ModuleError("internal: socle basis not extendable");
    for (int k = 0; k < cg.socle_basis.cols(); ++k) {
      Matrix<S> lam(1, d);
      for (int j = 0; j < d; ++j) lam(0, j) = (*inv)(k, j);
      Degree base = cg.degree;  // tau coordinates already at the box top
      out.push_back({IndecInjLabel{base, cg.tau}, cg.degree, std::move(lam)});
    }
  }
  return out;
}

template <class S>
FinDetMorphism<S> hull_map(const FinDetPtr<S>& m, const std::vector<HullCandidate<S>>& cands,
                           const IndicatorSum<S>& sum) {
  const Box& box = m->box();
  std::vector<Matrix<S>> blocks(size_t(box.cell_count()));
  for (std::int64_t c = 0; c < box.cell_count(); ++c) {
    Degree q = box.degree(c);
    const auto& act = sum.active[size_t(c)];
    Matrix<S> blk(int(act.size()), m->dim_cell(c));
    for (int r = 0; r < int(act.size()); ++r) {
      const HullCandidate<S>& cand = cands[size_t(act[r])];
      Matrix<S> row = cand.functional * m->path_map(q, cand.eval_degree);
      for (int j = 0; j < m->dim_cell(c); ++j) blk(r, j) = row(0, j);
    }
    blocks[size_t(c)] = std::move(blk);
  }
  return FinDetMorphism<S>(m, sum.module, std::move(blocks));
}

}  // namespace detail

struct HullFailure : ModuleError {
  using ModuleError::ModuleError;
};

// Single hull attempt on the module's own box; nullopt when the candidate map
// is not injective (the caller may enlarge the box and retry).
template <class S>
std::optional<InjectiveHull<S>> injective_hull_attempt(const FinDetPtr<S>& m) {
  const Box& box = m->box();
  std::vector<detail::HullCandidate<S>> cands = detail::hull_candidates(m);
  std::vector<FinDetRegion> regions;
  for (auto& cand : cands) regions.push_back(indec_inj_region(cand.label, box));
  IndicatorSum<S> sum = indicator_sum<S>(box, regions);
  FinDetMorphism<S> incl = detail::hull_map(m, cands, sum);
  if (!incl.injective_everywhere()) return std::nullopt;
  // Greedy minimization: drop any summand whose removal keeps injectivity.
  // Dropping only removes rows, so a summand kept here stays necessary no
  // matter what is dropped later.
  std::vector<int> keep(cands.size());
  for (size_t j = 0; j < cands.size(); ++j) keep[j] = int(j);
  for (size_t j = 0; j < cands.size(); ++j) {
    std::vector<int> trial;
    for (int k : keep)
      if (k != int(j)) trial.push_back(k);
    if (trial.size() == keep.size()) continue;
    std::vector<detail::HullCandidate<S>> tc;
    std::vector<FinDetRegion> tr;
    for (int k : trial) {
      tc.push_back(cands[size_t(k)]);
      tr.push_back(regions[size_t(k)]);
    }
    IndicatorSum<S> tsum = indicator_sum<S>(box, tr);
    FinDetMorphism<S> tincl = detail::hull_map(m, tc, tsum);
    if (tincl.injective_everywhere()) keep = std::move(trial);
  }
  std::vector<detail::HullCandidate<S>> fc;
  std::vector<FinDetRegion> fr;
  std::vector<IndecInjLabel> labels;
  for (int k : keep) {
    fc.push_back(cands[size_t(k)]);
    fr.push_back(regions[size_t(k)]);
    labels.push_back(cands[size_t(k)].label);
  }
  IndicatorSum<S> fsum = indicator_sum<S>(box, fr);
  FinDetMorphism<S> fincl = detail::hull_map(m, fc, fsum);
  if (!fincl.injective_everywhere()) throw ModuleError("internal: hull lost injectivity");
  return InjectiveHull<S>{std::move(labels), std::move(fsum), m, std::move(fincl)};
}

// Minimal injective hull by verified construction: socle-of-local-support
// candidates, an injectivity check on the whole working box, at most two box
// enlargements when the check fails, then greedy summand dropping.
template <class S>
InjectiveHull<S> injective_hull(const FinDetPtr<S>& input, std::int64_t base_margin = 1) {
  for (std::int64_t attempt = 0; attempt < 3; ++attempt) {
    auto r = injective_hull_attempt(ensure_margin(input, base_margin + attempt));
    if (r) return std::move(*r);
  }
  throw HullFailure("injective hull: candidates not injective after box enlargement");
}

enum class ResolutionSide { Injective, Flat };

// Finite resolution by indecomposable injectives or flats; terms carry their
// labels and the differentials are genuine module morphisms on the working
// box. Homology is concentrated in degree zero by construction and the tests
// re-check it degreewise.
template <class S>
struct ZnResolution {
  ResolutionSide side = ResolutionSide::Injective;
  FinDetPtr<S> source;  // margin-normalized module
  std::vector<std::vector<IndecInjLabel>> inj_labels;
  std::vector<std::vector<IndecFlatLabel>> flat_labels;
  std::vector<FinDetPtr<S>> terms;
  std::vector<FinDetMorphism<S>> differentials;  // term i -> term i+1 (injective side)
                                                 // term i+1 -> term i (flat side)
  FinDetMorphism<S> augmentation;  // M -> E^0, or F_0 -> M

  int length() const { return int(terms.size()) - 1; }
};

// Iterated hulls of cokernels. Termination within n steps is guaranteed for
// finitely determined modules; running past n means the working box was too
// small, so one enlargement is attempted before giving up.
template <class S>
ZnResolution<S> minimal_injective_resolution(const FinDetPtr<S>& input) {
  const int n = input->box().n();
  for (std::int64_t extra = 0; extra < 2; ++extra) {
    ZnResolution<S> res;
    res.side = ResolutionSide::Injective;
    InjectiveHull<S> h0 = injective_hull(input, 1 + extra);
    res.source = h0.source;
    res.augmentation = h0.inclusion;
    res.inj_labels.push_back(h0.labels);
    res.terms.push_back(h0.sum.module);
    FinDetMorphism<S> prev_incl = h0.inclusion;
    bool ok = true;
    for (;;) {
      FinDetSes<S> cok = cokernel(prev_incl);
      if (cok.module->is_zero()) break;
      if (res.length() >= n) { ok = false; break; }
      auto h = injective_hull_attempt(cok.module);
      if (!h) { ok = false; break; }
      res.inj_labels.push_back(h->labels);
      res.terms.push_back(h->sum.module);
      res.differentials.push_back(h->inclusion.compose(cok.map));
      prev_incl = h->inclusion;
    }
    if (ok) return res;
  }
  throw ModuleError("injective resolution did not terminate within n steps");
}

template <class S>
FinDetPtr<S> injective_module_dual(const FinDetPtr<S>& e) { return matlis_dual(e); }

inline IndecFlatLabel dual_label(const IndecInjLabel& l) {
  Degree b = l.base;
  for (auto& x : b) x = -x;
  return IndecFlatLabel{b, l.tau};
}

inline IndecInjLabel dual_label(const IndecFlatLabel& l) {
  Degree b = l.base;
  for (auto& x : b) x = -x;
  return IndecInjLabel{b, l.tau};
}

// Matlis-dualize an injective resolution of M^vee into a flat resolution of M.
template <class S>
ZnResolution<S> minimal_flat_resolution(const FinDetPtr<S>& input) {
  ZnResolution<S> inj = minimal_injective_resolution(matlis_dual(input));
  ZnResolution<S> res;
  res.side = ResolutionSide::Flat;
  res.source = matlis_dual(inj.source);
  for (size_t i = 0; i < inj.terms.size(); ++i) {
    res.terms.push_back(matlis_dual(inj.terms[i]));
    std::vector<IndecFlatLabel> labels;
    for (auto& l : inj.inj_labels[i]) labels.push_back(dual_label(l));
    res.flat_labels.push_back(std::move(labels));
  }
  res.augmentation = findet_dual_morphism(inj.augmentation, res.terms[0], res.source);
  for (size_t i = 0; i < inj.differentials.size(); ++i)
    res.differentials.push_back(
        findet_dual_morphism(inj.differentials[i], res.terms[i + 1], res.terms[i]));
  return res;
}

// Flange presentation: flat cover composed with injective hull, recorded as a
// monomial matrix over the indecomposable labels.
template <class S>
struct MonomialMatrixFlange {
  std::vector<IndecFlatLabel> rows;
  std::vector<IndecInjLabel> cols;
  Matrix<S> scalars;  // rows x cols

  Box box;                        // working box
  FinDetPtr<S> source;            // margin-normalized module
  IndicatorSum<S> flat_sum, inj_sum;
  FinDetMorphism<S> cover;        // flat_sum.module -> source (surjective)
  FinDetMorphism<S> hull;         // source -> inj_sum.module (injective)
  FinDetMorphism<S> composite;    // flat_sum.module -> inj_sum.module
};

template <class S>
MonomialMatrixFlange<S> flange_presentation(const FinDetPtr<S>& input) {
  // Hull of the dual gives the flat cover after dualizing back. Both sides
  // must live on one working box: grow to whichever margin the two hull
  // computations settled on.
  InjectiveHull<S> hv = injective_hull(matlis_dual(input));
  InjectiveHull<S> h = injective_hull(input);
  Box bh = h.source->box();
  Box bf = matlis_dual(hv.sum.module)->box();
  Degree lo = bh.lo, hi = bh.hi;
  for (int i = 0; i < bh.n(); ++i) {
    lo[i] = std::min(lo[i], bf.lo[i]);
    hi[i] = std::max(hi[i], bf.hi[i]);
  }
  Box box(lo, hi);

  MonomialMatrixFlange<S> out;
  out.box = box;
  out.source = rebox(h.source, box);
  for (auto& l : hv.labels) out.rows.push_back(dual_label(l));
  out.cols = h.labels;

  std::vector<FinDetRegion> flat_regions, inj_regions;
  for (auto& l : out.rows) flat_regions.push_back(indec_flat_region(l, box));
  for (auto& l : out.cols) inj_regions.push_back(indec_inj_region(l, box));
  out.flat_sum = indicator_sum<S>(box, flat_regions);
  out.inj_sum = indicator_sum<S>(box, inj_regions);

  // cover = dual of the hull of the dual, transported onto the working box
  FinDetPtr<S> f0_native = matlis_dual(hv.sum.module);
  FinDetMorphism<S> cover_native = findet_dual_morphism(hv.inclusion, f0_native,
                                                        matlis_dual(hv.source));
  std::vector<Matrix<S>> cover_blocks(size_t(box.cell_count()));
  std::vector<Matrix<S>> hull_blocks(size_t(box.cell_count()));
  for (std::int64_t c = 0; c < box.cell_count(); ++c) {
    Degree q = box.degree(c);
    cover_blocks[size_t(c)] = cover_native.block_at(q);
    hull_blocks[size_t(c)] = h.inclusion.block_at(q);
  }
  out.cover = FinDetMorphism<S>(out.flat_sum.module, out.source, std::move(cover_blocks));
  out.hull = FinDetMorphism<S>(out.source, out.inj_sum.module, std::move(hull_blocks));
  out.composite = out.hull.compose(out.cover);

  if (!out.cover.surjective_everywhere())
    throw ModuleError("flange: flat cover is not surjective");
  if (!out.hull.injective_everywhere())
    throw ModuleError("flange: injective hull is not injective");

  // Extract the scalar of each connected component at a meet degree.
  out.scalars = Matrix<S>(int(out.rows.size()), int(out.cols.size()));
  for (int p = 0; p < int(out.rows.size()); ++p)
    for (int qi = 0; qi < int(out.cols.size()); ++qi) {
      if (!flat_meets_inj(out.rows[p], out.cols[qi])) continue;
      Degree meet(size_t(box.n()), 0);
      for (int i = 0; i < box.n(); ++i) {
        std::int64_t lo_i = out.rows[p].tau.count(i) ? box.lo[i] : out.rows[p].base[i];
        meet[i] = std::max(lo_i, box.lo[i]);
      }
      meet = box.clamp(meet);
      std::int64_t cell = box.index(meet);
      int row = out.inj_sum.position(cell, qi);
      int col = out.flat_sum.position(cell, p);
      if (row < 0 || col < 0) throw ModuleError("internal: meet degree misses the box");
      out.scalars(p, qi) = out.composite.blocks[size_t(cell)](row, col);
    }

  // Image must be the module itself: with a surjective cover and injective
  // hull this is a rank identity, checked cell by cell.
  for (std::int64_t c = 0; c < box.cell_count(); ++c)
    if (out.composite.blocks[size_t(c)].rank() != out.source->dim_cell(c))
      throw ModuleError("flange: image rank mismatch at a degree");
  return out;
}

// Pushforward of a finite poset module along an order embedding into Z^n,
// computed cellwise as the colimit over the embedded subdiagram below the
// cell: cokernel of the standard difference map over the diagram's covers.
template <class S>
struct Pushforward {
  FinDetPtr<S> module;
  std::vector<Matrix<S>> units;  // H_p -> (pushforward)_{iota(p)}
};

template <class S>
Pushforward<S> pushforward(const std::vector<Degree>& iota, const ModulePtr<S>& h,
                           std::int64_t margin = 1) {
  const FinitePoset& p = *h->poset();
  if (int(iota.size()) != p.size()) throw ModuleError("embedding size mismatch");
  const int n = iota.empty() ? 1 : int(iota[0].size());
  Degree lo(size_t(n), 0), hi(size_t(n), 0);
  for (int i = 0; i < n; ++i) {
    lo[i] = iota[0][i];
    hi[i] = iota[0][i];
    for (auto& d : iota) {
      lo[i] = std::min(lo[i], d[i]);
      hi[i] = std::max(hi[i], d[i]);
    }
    lo[i] -= margin;
    hi[i] += margin;
  }
  Box box(lo, hi);
  const std::int64_t cells = box.cell_count();

  std::vector<int> dims(static_cast<size_t>(cells), 0);
  std::vector<Matrix<S>> proj, sect;
  proj.resize(size_t(cells));
  sect.resize(size_t(cells));
  std::vector<std::vector<int>> below, offset;  // diagram elements per cell, with slot offsets
  below.resize(size_t(cells));
  offset.resize(size_t(cells));
  for (std::int64_t c = 0; c < cells; ++c) {
    Degree z = box.degree(c);
    int total = 0;
    for (int e = 0; e < p.size(); ++e)
      if (degree_leq(iota[size_t(e)], z)) {
        below[size_t(c)].push_back(e);
        offset[size_t(c)].push_back(total);
        total += h->dim(e);
      }
    // difference map over covers of the induced (down-closed) subdiagram
    std::vector<std::pair<int, int>> edges;
    for (auto& [a, b] : p.covers()) {
      bool ina = degree_leq(iota[size_t(a)], z), inb = degree_leq(iota[size_t(b)], z);
      if (ina && inb) edges.emplace_back(a, b);
    }
    int ecols = 0;
    for (auto& [a, b] : edges) ecols += h->dim(a);
    Matrix<S> delta(total, ecols);
    int col = 0;
    auto slot = [&](int elem) {
      for (size_t i = 0; i < below[size_t(c)].size(); ++i)
        if (below[size_t(c)][i] == elem) return offset[size_t(c)][i];
      throw ModuleError("internal: diagram slot missing");
    };
    for (auto& [a, b] : edges) {
      int oa = slot(a), ob = slot(b);
      const Matrix<S>& f = h->cover_map(a, b);
      for (int j = 0; j < h->dim(a); ++j) {
        delta(oa + j, col + j) += S(1);
        for (int i = 0; i < h->dim(b); ++i) delta(ob + i, col + j) -= f(i, j);
      }
      col += h->dim(a);
    }
    Matrix<S> img = delta.columns(delta.independent_columns());
    Matrix<S> comp = standard_complement(img, total);
    dims[size_t(c)] = comp.cols();
    sect[size_t(c)] = comp;
    if (comp.cols() == 0) {
      proj[size_t(c)] = Matrix<S>(0, total);
      continue;
    }
    auto inv = Matrix<S>::hstack(img, comp).inverse();
    if (!inv) throw ModuleError("internal: colimit basis not invertible");
    Matrix<S> pr(comp.cols(), total);
    for (int i = 0; i < comp.cols(); ++i)
      for (int j = 0; j < total; ++j) pr(i, j) = (*inv)(img.cols() + i, j);
    proj[size_t(c)] = std::move(pr);
  }

  std::vector<std::vector<Matrix<S>>> maps(n, std::vector<Matrix<S>>(size_t(cells)));
  for (std::int64_t c = 0; c < cells; ++c) {
    Degree z = box.degree(c);
    for (int i = 0; i < n; ++i) {
      if (z[i] >= box.hi[i]) continue;
      Degree z2 = z;
      ++z2[i];
      std::int64_t c2 = box.index(z2);
      int t1 = proj[size_t(c)].cols(), t2 = proj[size_t(c2)].cols();
      Matrix<S> j(t2, t1);
      for (size_t a = 0; a < below[size_t(c)].size(); ++a) {
        int elem = below[size_t(c)][a];
        int o1 = offset[size_t(c)][a];
        int o2 = -1;
        for (size_t b = 0; b < below[size_t(c2)].size(); ++b)
          if (below[size_t(c2)][b] == elem) { o2 = offset[size_t(c2)][b]; break; }
        for (int k = 0; k < h->dim(elem); ++k) j(o2 + k, o1 + k) = S(1);
      }
      maps[i][size_t(c)] = proj[size_t(c2)] * (j * sect[size_t(c)]);
    }
  }

  Pushforward<S> out;
  out.module = FinDetModule<S>::make(box, std::move(dims), std::move(maps));
  for (int e = 0; e < p.size(); ++e) {
    std::int64_t c = box.index(iota[size_t(e)]);
    int total = proj[size_t(c)].cols();
    Matrix<S> unit_in(total, h->dim(e));
    int o = -1;
    for (size_t a = 0; a < below[size_t(c)].size(); ++a)
      if (below[size_t(c)][a] == e) { o = offset[size_t(c)][a]; break; }
    for (int k = 0; k < h->dim(e); ++k) unit_in(o + k, k) = S(1);
    out.units.push_back(proj[size_t(c)] * unit_in);
  }
  return out;
}

}  // namespace pomod
