#pragma once

#include <map>
#include <memory>

#include "pomod/matrix.hpp"
#include "pomod/module.hpp"
#include "pomod/zn.hpp"

namespace pomod {

// Finitely determined Z^n-module stored on a box. Values and maps at degrees
// outside the box are those at the componentwise clamp, so every structure
// map crossing the boundary is an identity; the box is the determinacy
// window. Commutativity of all grid squares is checked at construction.
template <class S>
class FinDetModule {
 public:
  FinDetModule(Box box, std::vector<int> dims, std::vector<std::vector<Matrix<S>>> step_maps)
      : box_(std::move(box)), dims_(std::move(dims)), maps_(std::move(step_maps)) {
    const int n = box_.n();
    if (std::int64_t(dims_.size()) != box_.cell_count()) throw ModuleError("dims size mismatch");
    if (int(maps_.size()) != n) throw ModuleError("need one map family per direction");
    for (int i = 0; i < n; ++i)
      if (std::int64_t(maps_[i].size()) != box_.cell_count())
        throw ModuleError("map family size mismatch");
    for (std::int64_t c = 0; c < box_.cell_count(); ++c) {
      Degree q = box_.degree(c);
      for (int i = 0; i < n; ++i) {
        if (q[i] >= box_.hi[i]) continue;
        Degree q2 = q;
        ++q2[i];
        const Matrix<S>& m = maps_[i][c];
        if (m.rows() != dims_[box_.index(q2)] || m.cols() != dims_[c])
          throw ModuleError("step map shape mismatch");
      }
    }
    check_squares();
  }

  static std::shared_ptr<const FinDetModule> make(Box box, std::vector<int> dims,
                                                  std::vector<std::vector<Matrix<S>>> maps) {
    return std::make_shared<const FinDetModule>(std::move(box), std::move(dims), std::move(maps));
  }

  static std::shared_ptr<const FinDetModule> zero(const Box& box) {
    std::vector<int> dims(size_t(box.cell_count()), 0);
    std::vector<std::vector<Matrix<S>>> maps(box.n(),
                                             std::vector<Matrix<S>>(size_t(box.cell_count())));
    return make(box, std::move(dims), std::move(maps));
  }

  static std::shared_ptr<const FinDetModule> indicator(const FinDetRegion& r) {
    std::vector<int> dims(size_t(r.box.cell_count()));
    for (std::int64_t c = 0; c < r.box.cell_count(); ++c) dims[c] = r.cells[c] ? 1 : 0;
    std::vector<std::vector<Matrix<S>>> maps(r.box.n(),
                                             std::vector<Matrix<S>>(size_t(r.box.cell_count())));
    for (std::int64_t c = 0; c < r.box.cell_count(); ++c) {
      Degree q = r.box.degree(c);
      for (int i = 0; i < r.box.n(); ++i) {
        if (q[i] >= r.box.hi[i]) continue;
        Degree q2 = q;
        ++q2[i];
        Matrix<S> m(dims[r.box.index(q2)], dims[c]);
        if (m.rows() == 1 && m.cols() == 1) m(0, 0) = S(1);
        maps[i][c] = std::move(m);
      }
    }
    return make(r.box, std::move(dims), std::move(maps));
  }

  const Box& box() const { return box_; }
  int n() const { return box_.n(); }

  int dim_cell(std::int64_t c) const { return dims_[c]; }
  int dim_at(const Degree& q) const { return dims_[box_.index(box_.clamp(q))]; }
  int total_dim() const {
    int t = 0;
    for (int d : dims_) t += d;
    return t;
  }
  bool is_zero() const { return total_dim() == 0; }

  // Structure map M_q -> M_{q + e_i}, valid for any q in Z^n.
  Matrix<S> step(const Degree& q, int i) const {
    Degree a = box_.clamp(q);
    Degree q2 = q;
    ++q2[i];
    Degree b = box_.clamp(q2);
    if (a == b) return Matrix<S>::identity(dims_[box_.index(a)]);
    return maps_[i][box_.index(a)];
  }

  // Composite map M_a -> M_b for a <= b, along axes in index order.
  Matrix<S> path_map(const Degree& a, const Degree& b) const {
    if (!degree_leq(a, b)) throw ModuleError("path_map needs a <= b");
    Degree cur = a;
    Matrix<S> acc = Matrix<S>::identity(dim_at(a));
    for (int i = 0; i < box_.n(); ++i)
      while (cur[i] < b[i]) {
        acc = step(cur, i) * acc;
        ++cur[i];
      }
    return acc;
  }

  Degree push_along(const Degree& q, const Face& tau) const {
    Degree out = box_.clamp(q);
    for (int i : tau) out[i] = box_.hi[i];
    return out;
  }

 private:
  void check_squares() const {
    for (std::int64_t c = 0; c < box_.cell_count(); ++c) {
      Degree q = box_.degree(c);
      for (int i = 0; i < box_.n(); ++i)
        for (int j = i + 1; j < box_.n(); ++j) {
          if (q[i] >= box_.hi[i] || q[j] >= box_.hi[j]) continue;
          Degree qi = q, qj = q;
          ++qi[i];
          ++qj[j];
          if (step(qi, j) * step(q, i) != step(qj, i) * step(q, j))
            throw ModuleError("grid square does not commute");
        }
    }
  }

  Box box_;
  std::vector<int> dims_;
  std::vector<std::vector<Matrix<S>>> maps_;
};

template <class S>
using FinDetPtr = std::shared_ptr<const FinDetModule<S>>;

template <class S>
struct FinDetMorphism {
  FinDetPtr<S> source, target;
  std::vector<Matrix<S>> blocks;  // per cell; both modules share a box

  FinDetMorphism() = default;
  FinDetMorphism(FinDetPtr<S> src, FinDetPtr<S> tgt, std::vector<Matrix<S>> blk, bool check = true)
      : source(std::move(src)), target(std::move(tgt)), blocks(std::move(blk)) {
    const Box& box = source->box();
    if (!(target->box() == box)) throw ModuleError("morphism boxes differ");
    if (std::int64_t(blocks.size()) != box.cell_count())
      throw ModuleError("morphism block count mismatch");
    for (std::int64_t c = 0; c < box.cell_count(); ++c)
      if (blocks[c].rows() != target->dim_cell(c) || blocks[c].cols() != source->dim_cell(c))
        throw ModuleError("morphism block shape mismatch");
    if (!check) return;
    for (std::int64_t c = 0; c < box.cell_count(); ++c) {
      Degree q = box.degree(c);
      for (int i = 0; i < box.n(); ++i) {
        if (q[i] >= box.hi[i]) continue;
        Degree q2 = q;
        ++q2[i];
        if (target->step(q, i) * blocks[c] != blocks[box.index(q2)] * source->step(q, i))
          throw ModuleError("morphism does not commute with step maps");
      }
    }
  }

  Matrix<S> block_at(const Degree& q) const {
    return blocks[source->box().index(source->box().clamp(q))];
  }

  static FinDetMorphism identity(const FinDetPtr<S>& m) {
    std::vector<Matrix<S>> blk;
    for (std::int64_t c = 0; c < m->box().cell_count(); ++c)
      blk.push_back(Matrix<S>::identity(m->dim_cell(c)));
    return FinDetMorphism(m, m, std::move(blk), false);
  }

  FinDetMorphism compose(const FinDetMorphism& inner) const {
    if (inner.target.get() != source.get()) throw ModuleError("composition mismatch");
    std::vector<Matrix<S>> blk;
    for (size_t c = 0; c < blocks.size(); ++c) blk.push_back(blocks[c] * inner.blocks[c]);
    return FinDetMorphism(inner.source, target, std::move(blk), false);
  }

  bool injective_everywhere() const {
    for (std::int64_t c = 0; c < source->box().cell_count(); ++c)
      if (blocks[c].rank() < source->dim_cell(c)) return false;
    return true;
  }

  bool surjective_everywhere() const {
    for (std::int64_t c = 0; c < source->box().cell_count(); ++c)
      if (blocks[c].rank() < target->dim_cell(c)) return false;
    return true;
  }
};

template <class S>
bool verify_isomorphism(const FinDetMorphism<S>& phi) {
  for (const Matrix<S>& b : phi.blocks)
    if (!b.invertible()) return false;
  return true;
}

// Same module on a larger box; new cells copy the clamped data.
template <class S>
FinDetPtr<S> ensure_margin(const FinDetPtr<S>& m, std::int64_t margin) {
  if (margin == 0) return m;
  Box nb = m->box().grown(margin);
  std::vector<int> dims(size_t(nb.cell_count()));
  std::vector<std::vector<Matrix<S>>> maps(nb.n(), std::vector<Matrix<S>>(size_t(nb.cell_count())));
  for (std::int64_t c = 0; c < nb.cell_count(); ++c) {
    Degree q = nb.degree(c);
    dims[c] = m->dim_at(q);
    for (int i = 0; i < nb.n(); ++i)
      if (q[i] < nb.hi[i]) maps[i][c] = m->step(q, i);
  }
  return FinDetModule<S>::make(nb, std::move(dims), std::move(maps));
}

template <class S>
FinDetPtr<S> rebox(const FinDetPtr<S>& m, const Box& nb) {
  std::vector<int> dims(size_t(nb.cell_count()));
  std::vector<std::vector<Matrix<S>>> maps(nb.n(), std::vector<Matrix<S>>(size_t(nb.cell_count())));
  for (std::int64_t c = 0; c < nb.cell_count(); ++c) {
    Degree q = nb.degree(c);
    dims[c] = m->dim_at(q);
    for (int i = 0; i < nb.n(); ++i)
      if (q[i] < nb.hi[i]) maps[i][c] = m->step(q, i);
  }
  return FinDetModule<S>::make(nb, std::move(dims), std::move(maps));
}

// Matlis dual: dims reflected through negation, maps transposed.
template <class S>
FinDetPtr<S> matlis_dual(const FinDetPtr<S>& m) {
  const Box& b = m->box();
  Degree lo(b.hi), hi(b.lo);
  for (int i = 0; i < b.n(); ++i) {
    lo[i] = -b.hi[i];
    hi[i] = -b.lo[i];
  }
  Box nb(lo, hi);
  std::vector<int> dims(size_t(nb.cell_count()));
  std::vector<std::vector<Matrix<S>>> maps(nb.n(), std::vector<Matrix<S>>(size_t(nb.cell_count())));
  for (std::int64_t c = 0; c < nb.cell_count(); ++c) {
    Degree q = nb.degree(c);
    Degree neg(q);
    for (int i = 0; i < nb.n(); ++i) neg[i] = -q[i];
    dims[c] = m->dim_at(neg);
    for (int i = 0; i < nb.n(); ++i) {
      if (q[i] >= nb.hi[i]) continue;
      Degree src = neg;
      --src[i];  // dual of M_{-q-e_i} -> M_{-q}
      maps[i][c] = m->step(src, i).transpose();
    }
  }
  return FinDetModule<S>::make(nb, std::move(dims), std::move(maps));
}

// Localization along a face: every tau coordinate is pushed to the
// stabilization horizon (the box top), where clamp-determinacy makes the
// directed colimit an equality.
template <class S>
struct LocalizationResult {
  FinDetPtr<S> module;
  FinDetMorphism<S> map;  // M -> M_tau
};

template <class S>
LocalizationResult<S> localize(const FinDetPtr<S>& m, const Face& tau) {
  const Box& box = m->box();
  std::vector<int> dims(size_t(box.cell_count()));
  std::vector<std::vector<Matrix<S>>> maps(box.n(), std::vector<Matrix<S>>(size_t(box.cell_count())));
  std::vector<Matrix<S>> blocks(size_t(box.cell_count()));
  for (std::int64_t c = 0; c < box.cell_count(); ++c) {
    Degree q = box.degree(c);
    Degree pq = m->push_along(q, tau);
    dims[c] = m->dim_at(pq);
    blocks[c] = m->path_map(q, pq);
    for (int i = 0; i < box.n(); ++i) {
      if (q[i] >= box.hi[i]) continue;
      if (tau.count(i))
        maps[i][c] = Matrix<S>::identity(dims[c]);
      else
        maps[i][c] = m->step(pq, i);
    }
  }
  auto loc = FinDetModule<S>::make(box, std::move(dims), std::move(maps));
  return {loc, FinDetMorphism<S>(m, loc, std::move(blocks), false)};
}

template <class S>
struct FinDetSub {
  FinDetPtr<S> module;
  FinDetMorphism<S> inclusion;
};

// Submodule spanned degreewise by given bases (must be closed under steps).
template <class S>
FinDetSub<S> findet_submodule(const FinDetPtr<S>& m, std::vector<Matrix<S>> bases) {
  const Box& box = m->box();
  std::vector<int> dims(size_t(box.cell_count()));
  for (std::int64_t c = 0; c < box.cell_count(); ++c) dims[c] = bases[c].cols();
  std::vector<std::vector<Matrix<S>>> maps(box.n(), std::vector<Matrix<S>>(size_t(box.cell_count())));
  for (std::int64_t c = 0; c < box.cell_count(); ++c) {
    Degree q = box.degree(c);
    for (int i = 0; i < box.n(); ++i) {
      if (q[i] >= box.hi[i]) continue;
      Degree q2 = q;
      ++q2[i];
      auto x = bases[box.index(q2)].solve(m->step(q, i) * bases[c]);
      if (!x) throw ModuleError("subspaces not closed under structure maps");
      maps[i][c] = *x;
    }
  }
  auto sub = FinDetModule<S>::make(box, std::move(dims), std::move(maps));
  return {sub, FinDetMorphism<S>(sub, m, std::move(bases), false)};
}

// Gamma_tau M: joint kernel of the localization maps along rays off tau.
template <class S>
FinDetSub<S> global_support(const FinDetPtr<S>& m, const Face& tau) {
  const Box& box = m->box();
  std::vector<Matrix<S>> bases(size_t(box.cell_count()));
  for (std::int64_t c = 0; c < box.cell_count(); ++c) {
    Degree q = box.degree(c);
    Matrix<S> basis = Matrix<S>::identity(m->dim_cell(c));
    for (int i = 0; i < box.n(); ++i) {
      if (tau.count(i)) continue;
      Degree h = q;
      h[i] = box.hi[i];
      Matrix<S> k = (m->path_map(q, h) * basis).kernel_basis();
      basis = basis * k;
    }
    bases[c] = std::move(basis);
  }
  return findet_submodule(m, std::move(bases));
}

template <class S>
struct FinDetSes {
  FinDetPtr<S> module;
  FinDetMorphism<S> map;
};

template <class S>
FinDetSes<S> kernel(const FinDetMorphism<S>& phi) {
  const Box& box = phi.source->box();
  std::vector<Matrix<S>> bases(size_t(box.cell_count()));
  for (std::int64_t c = 0; c < box.cell_count(); ++c) bases[c] = phi.blocks[c].kernel_basis();
  FinDetSub<S> sub = findet_submodule(phi.source, std::move(bases));
  return {sub.module, sub.inclusion};
}

template <class S>
FinDetSes<S> cokernel(const FinDetMorphism<S>& phi) {
  const Box& box = phi.target->box();
  std::vector<int> dims(size_t(box.cell_count()));
  std::vector<Matrix<S>> proj(size_t(box.cell_count())), sect(size_t(box.cell_count()));
  for (std::int64_t c = 0; c < box.cell_count(); ++c) {
    int d = phi.target->dim_cell(c);
    Matrix<S> img = phi.blocks[c].columns(phi.blocks[c].independent_columns());
    Matrix<S> comp = standard_complement(img, d);
    dims[c] = comp.cols();
    sect[c] = comp;
    if (dims[c] == 0) {
      proj[c] = Matrix<S>(0, d);
      continue;
    }
    auto inv = Matrix<S>::hstack(img, comp).inverse();
    if (!inv) throw ModuleError("internal: cokernel basis not invertible");
    Matrix<S> pr(dims[c], d);
    for (int i = 0; i < dims[c]; ++i)
      for (int j = 0; j < d; ++j) pr(i, j) = (*inv)(img.cols() + i, j);
    proj[c] = std::move(pr);
  }
  std::vector<std::vector<Matrix<S>>> maps(box.n(), std::vector<Matrix<S>>(size_t(box.cell_count())));
  for (std::int64_t c = 0; c < box.cell_count(); ++c) {
    Degree q = box.degree(c);
    for (int i = 0; i < box.n(); ++i) {
      if (q[i] >= box.hi[i]) continue;
      Degree q2 = q;
      ++q2[i];
      maps[i][c] = proj[box.index(q2)] * (phi.target->step(q, i) * sect[c]);
    }
  }
  auto coker = FinDetModule<S>::make(box, std::move(dims), std::move(maps));
  return {coker, FinDetMorphism<S>(phi.target, coker, std::move(proj), false)};
}

template <class S>
FinDetMorphism<S> findet_dual_morphism(const FinDetMorphism<S>& phi, const FinDetPtr<S>& dual_src,
                                       const FinDetPtr<S>& dual_tgt) {
  // dual of phi: M -> N becomes N^vee -> M^vee with transposed blocks at
  // negated degrees.
  const Box& box = dual_src->box();
  std::vector<Matrix<S>> blocks(size_t(box.cell_count()));
  for (std::int64_t c = 0; c < box.cell_count(); ++c) {
    Degree q = box.degree(c);
    Degree neg(q);
    for (int i = 0; i < box.n(); ++i) neg[i] = -q[i];
    blocks[c] = phi.block_at(neg).transpose();
  }
  return FinDetMorphism<S>(dual_src, dual_tgt, std::move(blocks));
}

template <class S>
std::vector<std::pair<Degree, int>> generators(const FinDetPtr<S>& m) {
  const Box& box = m->box();
  std::vector<std::pair<Degree, int>> out;
  for (std::int64_t c = 0; c < box.cell_count(); ++c) {
    Degree q = box.degree(c);
    int d = m->dim_cell(c);
    if (d == 0) continue;
    Matrix<S> in(d, 0);
    for (int i = 0; i < box.n(); ++i) {
      Degree prev = q;
      --prev[i];
      in = Matrix<S>::hstack(in, m->step(prev, i));
    }
    int corank = d - in.rank();
    if (corank > 0) out.emplace_back(q, corank);
  }
  return out;
}

template <class S>
struct Cogenerator {
  Degree degree;           // tau coordinates sit at the box top (stable slice)
  Face tau;
  Matrix<S> socle_basis;   // inside M_degree
};

// Candidate injective-hull summands: for each face, the socle of the local
// tau-support along the off-tau directions, recorded on the stable slice.
template <class S>
std::vector<Cogenerator<S>> cogenerators(const FinDetPtr<S>& m) {
  const Box& box = m->box();
  std::vector<Cogenerator<S>> out;
  for (const Face& tau : all_faces(box.n())) {
    LocalizationResult<S> loc = localize(m, tau);
    FinDetSub<S> supp = global_support(loc.module, tau);
    for (std::int64_t c = 0; c < box.cell_count(); ++c) {
      Degree q = box.degree(c);
      bool on_slice = true;
      for (int i : tau)
        if (q[i] != box.hi[i]) { on_slice = false; break; }
      if (!on_slice || supp.module->dim_cell(c) == 0) continue;
      Matrix<S> basis = Matrix<S>::identity(supp.module->dim_cell(c));
      for (int i = 0; i < box.n(); ++i) {
        if (tau.count(i)) continue;
        Matrix<S> k = (supp.module->step(q, i) * basis).kernel_basis();
        basis = basis * k;
        if (basis.cols() == 0) break;
      }
      if (basis.cols() == 0) continue;
      // On the stable slice (M_tau)_q = M_q, so the inclusion lands in M_q.
      out.push_back({q, tau, supp.inclusion.blocks[c] * basis});
    }
  }
  return out;
}

// Hom basis between finitely determined modules over the same box.
template <class S>
std::vector<FinDetMorphism<S>> hom_space_findet(const FinDetPtr<S>& m, const FinDetPtr<S>& n) {
  const Box& box = m->box();
  std::vector<std::int64_t> var_off(size_t(box.cell_count()) + 1, 0);
  for (std::int64_t c = 0; c < box.cell_count(); ++c)
    var_off[c + 1] = var_off[c] + std::int64_t(m->dim_cell(c)) * n->dim_cell(c);
  int nvars = int(var_off[box.cell_count()]);
  int nrows = 0;
  for (std::int64_t c = 0; c < box.cell_count(); ++c) {
    Degree q = box.degree(c);
    for (int i = 0; i < box.n(); ++i) {
      if (q[i] >= box.hi[i]) continue;
      Degree q2 = q;
      ++q2[i];
      nrows += m->dim_cell(c) * n->dim_cell(box.index(q2));
    }
  }
  Matrix<S> sys(nrows, nvars);
  int row = 0;
  for (std::int64_t c = 0; c < box.cell_count(); ++c) {
    Degree q = box.degree(c);
    for (int i = 0; i < box.n(); ++i) {
      if (q[i] >= box.hi[i]) continue;
      Degree q2 = q;
      ++q2[i];
      std::int64_t c2 = box.index(q2);
      Matrix<S> ms = m->step(q, i), ns = n->step(q, i);
      for (int r = 0; r < n->dim_cell(c2); ++r)
        for (int j = 0; j < m->dim_cell(c); ++j) {
          for (int k = 0; k < n->dim_cell(c); ++k)
            sys(row, int(var_off[c]) + k * m->dim_cell(c) + j) += ns(r, k);
          for (int k = 0; k < m->dim_cell(c2); ++k)
            sys(row, int(var_off[c2]) + r * m->dim_cell(c2) + k) -= ms(k, j);
          ++row;
        }
    }
  }
  Matrix<S> basis = sys.kernel_basis();
  std::vector<FinDetMorphism<S>> out;
  for (int col = 0; col < basis.cols(); ++col) {
    std::vector<Matrix<S>> blocks(size_t(box.cell_count()));
    for (std::int64_t c = 0; c < box.cell_count(); ++c) {
      Matrix<S> blk(n->dim_cell(c), m->dim_cell(c));
      for (int i = 0; i < n->dim_cell(c); ++i)
        for (int j = 0; j < m->dim_cell(c); ++j)
          blk(i, j) = basis(int(var_off[c]) + i * m->dim_cell(c) + j, col);
      blocks[c] = std::move(blk);
    }
    out.emplace_back(m, n, std::move(blocks));
  }
  return out;
}

// View a box module as a module over the box poset (for encoding machinery).
template <class S>
ModulePtr<S> to_encoded(const FinDetPtr<S>& m) {
  const Box& b = m->box();
  PosetPtr p = box_poset(b.lo, b.hi);
  std::vector<int> dims(p->size());
  for (std::int64_t c = 0; c < b.cell_count(); ++c) dims[size_t(c)] = m->dim_cell(c);
  std::map<std::pair<int, int>, Matrix<S>> maps;
  for (std::int64_t c = 0; c < b.cell_count(); ++c) {
    Degree q = b.degree(c);
    for (int i = 0; i < b.n(); ++i) {
      if (q[i] >= b.hi[i]) continue;
      Degree q2 = q;
      ++q2[i];
      maps[{int(c), int(b.index(q2))}] = m->step(q, i);
    }
  }
  return EncodedModule<S>::make(std::move(p), std::move(dims), std::move(maps));
}

// tau-coprimary test in the sense of: every nonzero element of the standard
// spanning set divides, inside the determinacy box, an element that survives
// the push to the tau horizon and dies at every off-tau horizon.
template <class S>
bool coprimary_test(const FinDetPtr<S>& m0, const Face& tau) {
  FinDetPtr<S> m = ensure_margin(m0, 1);
  const Box& box = m->box();
  const std::int64_t cells = box.cell_count();
  std::vector<Matrix<S>> transient;  // basis of off-tau transient subspace per cell
  transient.resize(size_t(cells));
  for (std::int64_t c = 0; c < cells; ++c) {
    Degree q = box.degree(c);
    Matrix<S> basis = Matrix<S>::identity(m->dim_cell(c));
    for (int i = 0; i < box.n(); ++i) {
      if (tau.count(i)) continue;
      Degree h = q;
      h[i] = box.hi[i];
      basis = basis * (m->path_map(q, h) * basis).kernel_basis();
    }
    transient[c] = std::move(basis);
  }
  for (std::int64_t c = 0; c < cells; ++c) {
    Degree q = box.degree(c);
    int d = m->dim_cell(c);
    for (int k = 0; k < d; ++k) {
      Matrix<S> y(d, 1);
      y(k, 0) = S(1);
      bool found = false;
      for (std::int64_t c2 = 0; c2 < cells && !found; ++c2) {
        Degree q2 = box.degree(c2);
        if (!degree_leq(q, q2)) continue;
        Matrix<S> v = m->path_map(q, q2) * y;
        if (v.is_zero()) continue;
        if (!columns_contained(transient[c2], v)) continue;
        Degree h = m->push_along(q2, tau);
        if ((m->path_map(q2, h) * v).is_zero()) continue;
        found = true;
      }
      if (!found) return false;
    }
  }
  return true;
}

}  // namespace pomod
