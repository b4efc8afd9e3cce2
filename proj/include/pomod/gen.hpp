#pragma once

#include "pomod/findet.hpp"
#include "pomod/module.hpp"
#include "pomod/rng.hpp"

namespace pomod {

// Test-corpus generators. Modules are built as direct sums of indicator
// modules conjugated by a random invertible change of basis in every degree,
// which keeps commutativity automatic while producing generic-looking maps.

template <class S>
Matrix<S> random_invertible(Rng& rng, int d) {
  Matrix<S> m = Matrix<S>::identity(d);
  for (int ops = 0; ops < 2 * d; ++ops) {
    int i = int(rng.next_below(std::max(1, d)));
    int j = int(rng.next_below(std::max(1, d)));
    if (d < 2 || i == j) continue;
    S c = S(long(rng.next_below(5)) - 2);
    if (is_zero(c)) c = S(1);
    for (int k = 0; k < d; ++k) m(j, k) += c * m(i, k);
  }
  return m;
}

inline PosetRegion random_upset(Rng& rng, const PosetPtr& p) {
  std::vector<int> seed;
  for (int i = 0; i < p->size(); ++i)
    if (rng.next_below(3) == 0) seed.push_back(i);
  return upset_generated(p, seed);
}

inline PosetRegion random_downset(Rng& rng, const PosetPtr& p) {
  std::vector<int> seed;
  for (int i = 0; i < p->size(); ++i)
    if (rng.next_below(3) == 0) seed.push_back(i);
  return downset_cogenerated(p, seed);
}

template <class S>
ModulePtr<S> random_encoded_module(Rng& rng, const PosetPtr& p, int summands) {
  std::vector<PosetRegion> regions;
  for (int k = 0; k < summands; ++k)
    regions.push_back(rng.next_below(2) ? random_upset(rng, p) : random_downset(rng, p));
  std::vector<int> dims(p->size(), 0);
  for (int q = 0; q < p->size(); ++q)
    for (auto& r : regions) dims[q] += r.contains(q) ? 1 : 0;
  std::vector<Matrix<S>> twist;
  for (int q = 0; q < p->size(); ++q) twist.push_back(random_invertible<S>(rng, dims[q]));
  std::map<std::pair<int, int>, Matrix<S>> maps;
  for (auto& [a, b] : p->covers()) {
    Matrix<S> d(dims[b], dims[a]);
    int ra = 0, rb = 0;
    for (auto& r : regions) {
      bool ia = r.contains(a), ib = r.contains(b);
      if (ia && ib) d(rb, ra) = S(1);
      ra += ia ? 1 : 0;
      rb += ib ? 1 : 0;
    }
    maps[{a, b}] = twist[b] * d * *twist[a].inverse();
  }
  return EncodedModule<S>::make(p, std::move(dims), std::move(maps));
}

template <class S>
std::optional<ModuleMorphism<S>> random_morphism(Rng& rng, const ModulePtr<S>& m,
                                                 const ModulePtr<S>& n) {
  auto basis = hom_space(m, n);
  if (basis.empty()) return std::nullopt;
  std::vector<Matrix<S>> blocks;
  for (int q = 0; q < m->poset()->size(); ++q) blocks.emplace_back(n->dim(q), m->dim(q));
  for (auto& h : basis) {
    S c = S(long(rng.next_below(5)) - 2);
    for (size_t q = 0; q < blocks.size(); ++q) blocks[q] = blocks[q] + h.blocks[q].scaled(c);
  }
  return ModuleMorphism<S>(m, n, std::move(blocks));
}

// Random upset or downset region of a box, as a union of principal or
// face-shifted pieces.
inline FinDetRegion random_findet_region(Rng& rng, const Box& box, RegionKind kind, int pieces) {
  std::vector<char> cells(size_t(box.cell_count()), 0);
  const int n = box.n();
  for (int k = 0; k < pieces; ++k) {
    Degree b(size_t(n), 0);
    for (int i = 0; i < n; ++i)
      b[i] = box.lo[i] + rng.next_below(box.hi[i] - box.lo[i] + 1);
    Face tau;
    for (int i = 0; i < n; ++i)
      if (rng.next_below(4) == 0) tau.insert(i);
    for (std::int64_t c = 0; c < box.cell_count(); ++c) {
      Degree q = box.degree(c);
      bool in = true;
      for (int i = 0; i < n && in; ++i) {
        if (tau.count(i)) continue;
        if (kind == RegionKind::Upset ? q[i] < b[i] : q[i] > b[i]) in = false;
      }
      if (in) cells[size_t(c)] = 1;
    }
  }
  return FinDetRegion(box, kind, std::move(cells));
}

template <class S>
FinDetPtr<S> random_findet_module(Rng& rng, const Box& box, int summands) {
  std::vector<FinDetRegion> regions;
  for (int k = 0; k < summands; ++k)
    regions.push_back(random_findet_region(rng, box,
                                           rng.next_below(2) ? RegionKind::Upset
                                                             : RegionKind::Downset,
                                           1 + int(rng.next_below(2))));
  std::vector<int> dims(size_t(box.cell_count()), 0);
  for (std::int64_t c = 0; c < box.cell_count(); ++c)
    for (auto& r : regions) dims[size_t(c)] += r.cells[size_t(c)] ? 1 : 0;
  std::vector<Matrix<S>> twist;
  for (std::int64_t c = 0; c < box.cell_count(); ++c)
    twist.push_back(random_invertible<S>(rng, dims[size_t(c)]));
  std::vector<std::vector<Matrix<S>>> maps(box.n(),
                                           std::vector<Matrix<S>>(size_t(box.cell_count())));
  for (std::int64_t c = 0; c < box.cell_count(); ++c) {
    Degree q = box.degree(c);
    for (int i = 0; i < box.n(); ++i) {
      if (q[i] >= box.hi[i]) continue;
      Degree q2 = q;
      ++q2[i];
      std::int64_t c2 = box.index(q2);
      Matrix<S> d(dims[size_t(c2)], dims[size_t(c)]);
      int ra = 0, rb = 0;
      for (auto& r : regions) {
        bool ia = r.cells[size_t(c)], ib = r.cells[size_t(c2)];
        if (ia && ib) d(rb, ra) = S(1);
        ra += ia ? 1 : 0;
        rb += ib ? 1 : 0;
      }
      maps[i][size_t(c)] = twist[size_t(c2)] * d * *twist[size_t(c)].inverse();
    }
  }
  return FinDetModule<S>::make(box, std::move(dims), std::move(maps));
}

template <class S>
std::optional<FinDetMorphism<S>> random_findet_morphism(Rng& rng, const FinDetPtr<S>& m,
                                                        const FinDetPtr<S>& n) {
  auto basis = hom_space_findet(m, n);
  if (basis.empty()) return std::nullopt;
  std::vector<Matrix<S>> blocks;
  for (std::int64_t c = 0; c < m->box().cell_count(); ++c)
    blocks.emplace_back(n->dim_cell(c), m->dim_cell(c));
  for (auto& h : basis) {
    S c = S(long(rng.next_below(5)) - 2);
    for (size_t q = 0; q < blocks.size(); ++q) blocks[q] = blocks[q] + h.blocks[q].scaled(c);
  }
  return FinDetMorphism<S>(m, n, std::move(blocks));
}

}  // namespace pomod
