#pragma once

#include <map>
#include <memory>
#include <optional>

#include "pomod/matrix.hpp"
#include "pomod/poset.hpp"

namespace pomod {

struct ModuleError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A poset module presented by finite data: a dimension per element and a
// matrix per cover. Commutativity of all cover-path composites is checked at
// construction, so a live instance is always a genuine module.
template <class S>
class EncodedModule {
 public:
  EncodedModule(PosetPtr poset, std::vector<int> dims,
                std::map<std::pair<int, int>, Matrix<S>> cover_maps)
      : poset_(std::move(poset)), dims_(std::move(dims)), cover_(std::move(cover_maps)) {
    const FinitePoset& p = *poset_;
    if (int(dims_.size()) != p.size()) throw ModuleError("dims size mismatch");
    for (int d : dims_)
      if (d < 0) throw ModuleError("negative dimension");
    for (auto& [ab, m] : cover_) {
      auto [a, b] = ab;
      if (m.rows() != dims_[b] || m.cols() != dims_[a])
        throw ModuleError("cover map shape mismatch at " + p.id(a) + " <= " + p.id(b));
    }
    for (auto& [a, b] : p.covers())
      if (!cover_.count({a, b})) throw ModuleError("missing cover map " + p.id(a) + " -> " + p.id(b));
    build_path_maps();
  }

  static std::shared_ptr<const EncodedModule> make(
      PosetPtr poset, std::vector<int> dims, std::map<std::pair<int, int>, Matrix<S>> cover_maps) {
    return std::make_shared<const EncodedModule>(std::move(poset), std::move(dims),
                                                 std::move(cover_maps));
  }

  static std::shared_ptr<const EncodedModule> zero(PosetPtr poset) {
    std::vector<int> dims(poset->size(), 0);
    std::map<std::pair<int, int>, Matrix<S>> maps;
    for (auto& [a, b] : poset->covers()) maps[{a, b}] = Matrix<S>(0, 0);
    return make(std::move(poset), std::move(dims), std::move(maps));
  }

  // Indicator module of a region (upset or downset or interval subquotient).
  static std::shared_ptr<const EncodedModule> indicator(const PosetRegion& r) {
    PosetPtr p = r.carrier;
    std::vector<int> dims(p->size());
    for (int i = 0; i < p->size(); ++i) dims[i] = r.contains(i) ? 1 : 0;
    std::map<std::pair<int, int>, Matrix<S>> maps;
    for (auto& [a, b] : p->covers()) {
      Matrix<S> m(dims[b], dims[a]);
      if (dims[a] == 1 && dims[b] == 1) m(0, 0) = S(1);
      maps[{a, b}] = m;
    }
    return make(p, std::move(dims), std::move(maps));
  }

  const PosetPtr& poset() const { return poset_; }
  int dim(int q) const { return dims_[q]; }
  const std::vector<int>& dims() const { return dims_; }
  int total_dim() const {
    int t = 0;
    for (int d : dims_) t += d;
    return t;
  }

  const Matrix<S>& cover_map(int a, int b) const { return cover_.at({a, b}); }

  // Composite structure map for any pair a <= b.
  const Matrix<S>& map(int a, int b) const {
    if (!poset_->leq(a, b)) throw ModuleError("map requested for incomparable pair");
    return path_.at({a, b});
  }

 private:
  void build_path_maps() {
    const FinitePoset& p = *poset_;
    for (int a = 0; a < p.size(); ++a) {
      path_[{a, a}] = Matrix<S>::identity(dims_[a]);
      for (int b : p.topo_order()) {
        if (!p.less(a, b)) continue;
        std::optional<Matrix<S>> canon;
        for (int r : p.covers_down()[b]) {
          if (!p.leq(a, r)) continue;
          Matrix<S> via = cover_.at({r, b}) * path_.at({a, r});
          if (!canon) {
            canon = via;
          } else if (*canon != via) {
            throw ModuleError("structure maps do not commute between " + p.id(a) + " and " +
                              p.id(b));
          }
        }
        path_[{a, b}] = std::move(*canon);
      }
    }
  }

  PosetPtr poset_;
  std::vector<int> dims_;
  std::map<std::pair<int, int>, Matrix<S>> cover_;
  std::map<std::pair<int, int>, Matrix<S>> path_;
};

template <class S>
using ModulePtr = std::shared_ptr<const EncodedModule<S>>;

template <class S>
struct ModuleMorphism {
  ModulePtr<S> source, target;
  std::vector<Matrix<S>> blocks;  // one per element

  ModuleMorphism() = default;
  ModuleMorphism(ModulePtr<S> src, ModulePtr<S> tgt, std::vector<Matrix<S>> blk, bool check = true)
      : source(std::move(src)), target(std::move(tgt)), blocks(std::move(blk)) {
    const FinitePoset& p = *source->poset();
    if (target->poset().get() != &p) throw ModuleError("morphism carriers differ");
    if (int(blocks.size()) != p.size()) throw ModuleError("morphism block count mismatch");
    for (int q = 0; q < p.size(); ++q)
      if (blocks[q].rows() != target->dim(q) || blocks[q].cols() != source->dim(q))
        throw ModuleError("morphism block shape mismatch at " + p.id(q));
    if (!check) return;
    for (auto& [a, b] : p.covers())
      if (target->cover_map(a, b) * blocks[a] != blocks[b] * source->cover_map(a, b))
        throw ModuleError("morphism does not commute over cover " + p.id(a) + " -> " + p.id(b));
  }

  static ModuleMorphism identity(const ModulePtr<S>& m) {
    std::vector<Matrix<S>> blk;
    for (int q = 0; q < m->poset()->size(); ++q) blk.push_back(Matrix<S>::identity(m->dim(q)));
    return ModuleMorphism(m, m, std::move(blk), false);
  }

  static ModuleMorphism zero(const ModulePtr<S>& src, const ModulePtr<S>& tgt) {
    std::vector<Matrix<S>> blk;
    for (int q = 0; q < src->poset()->size(); ++q)
      blk.emplace_back(tgt->dim(q), src->dim(q));
    return ModuleMorphism(src, tgt, std::move(blk), false);
  }

  ModuleMorphism compose(const ModuleMorphism& inner) const {
    // (*this) o inner
    if (inner.target.get() != source.get()) throw ModuleError("composition mismatch");
    std::vector<Matrix<S>> blk;
    for (size_t q = 0; q < blocks.size(); ++q) blk.push_back(blocks[q] * inner.blocks[q]);
    return ModuleMorphism(inner.source, target, std::move(blk), false);
  }
};

// True iff every block is square and invertible.
template <class S>
bool verify_isomorphism(const ModuleMorphism<S>& phi) {
  for (const Matrix<S>& b : phi.blocks)
    if (!b.invertible()) return false;
  return true;
}

template <class S>
ModulePtr<S> pullback(const ModulePtr<S>& h, const PosetMorphism& pi) {
  if (pi.target.get() != h->poset().get()) throw ModuleError("pullback target mismatch");
  const FinitePoset& q = *pi.source;
  std::vector<int> dims(q.size());
  for (int i = 0; i < q.size(); ++i) dims[i] = h->dim(pi(i));
  std::map<std::pair<int, int>, Matrix<S>> maps;
  for (auto& [a, b] : q.covers()) maps[{a, b}] = h->map(pi(a), pi(b));
  return EncodedModule<S>::make(pi.source, std::move(dims), std::move(maps));
}

template <class S>
struct SubquotientResult {
  ModulePtr<S> module;
  ModuleMorphism<S> map;  // inclusion (kernel/image) or projection (cokernel)
};

template <class S>
SubquotientResult<S> kernel(const ModuleMorphism<S>& phi) {
  const FinitePoset& p = *phi.source->poset();
  std::vector<int> dims(p.size());
  std::vector<Matrix<S>> incl(p.size());
  for (int q = 0; q < p.size(); ++q) {
    incl[q] = phi.blocks[q].kernel_basis();
    dims[q] = incl[q].cols();
  }
  std::map<std::pair<int, int>, Matrix<S>> maps;
  for (auto& [a, b] : p.covers()) {
    auto x = incl[b].solve(phi.source->cover_map(a, b) * incl[a]);
    if (!x) throw ModuleError("internal: kernel not closed under structure maps");
    maps[{a, b}] = *x;
  }
  auto k = EncodedModule<S>::make(phi.source->poset(), std::move(dims), std::move(maps));
  return {k, ModuleMorphism<S>(k, phi.source, std::move(incl))};
}

// Complement of the span of `basis` inside k^d, chosen greedily from standard
// basis vectors in index order.
template <class S>
Matrix<S> standard_complement(const Matrix<S>& basis, int d) {
  Matrix<S> cur = basis;
  int rank = cur.rank();
  std::vector<int> chosen;
  for (int i = 0; i < d && rank + int(chosen.size()) < d; ++i) {
    Matrix<S> e(d, 1);
    e(i, 0) = S(1);
    Matrix<S> cand = Matrix<S>::hstack(cur, e);
    if (cand.rank() > cur.rank()) {
      cur = cand;
      chosen.push_back(i);
    }
  }
  Matrix<S> out(d, int(chosen.size()));
  for (int j = 0; j < int(chosen.size()); ++j) out(chosen[j], j) = S(1);
  return out;
}

template <class S>
SubquotientResult<S> cokernel(const ModuleMorphism<S>& phi) {
  const FinitePoset& p = *phi.target->poset();
  std::vector<int> dims(p.size());
  std::vector<Matrix<S>> proj(p.size());  // N_q -> C_q
  std::vector<Matrix<S>> sect(p.size());  // C_q -> N_q, the chosen complement
  for (int q = 0; q < p.size(); ++q) {
    int d = phi.target->dim(q);
    Matrix<S> img = phi.blocks[q].columns(phi.blocks[q].independent_columns());
    Matrix<S> comp = standard_complement(img, d);
    dims[q] = comp.cols();
    sect[q] = comp;
    Matrix<S> full = Matrix<S>::hstack(img, comp);
    if (dims[q] == 0) {
      proj[q] = Matrix<S>(0, d);
      continue;
    }
    auto inv = full.inverse();
    if (!inv) throw ModuleError("internal: cokernel basis not invertible");
    Matrix<S> coords = *inv;  // rows: coordinates in [img|comp]
    Matrix<S> pr(dims[q], d);
    for (int i = 0; i < dims[q]; ++i)
      for (int j = 0; j < d; ++j) pr(i, j) = coords(img.cols() + i, j);
    proj[q] = pr;
  }
  std::map<std::pair<int, int>, Matrix<S>> maps;
  for (auto& [a, b] : p.covers())
    maps[{a, b}] = proj[b] * (phi.target->cover_map(a, b) * sect[a]);
  auto c = EncodedModule<S>::make(phi.target->poset(), std::move(dims), std::move(maps));
  return {c, ModuleMorphism<S>(phi.target, c, std::move(proj))};
}

template <class S>
struct ImageResult {
  ModulePtr<S> module;
  ModuleMorphism<S> inclusion;   // image -> target
  ModuleMorphism<S> projection;  // source -> image
};

template <class S>
ImageResult<S> image(const ModuleMorphism<S>& phi) {
  const FinitePoset& p = *phi.source->poset();
  std::vector<int> dims(p.size());
  std::vector<Matrix<S>> incl(p.size()), proj(p.size());
  for (int q = 0; q < p.size(); ++q) {
    incl[q] = phi.blocks[q].columns(phi.blocks[q].independent_columns());
    dims[q] = incl[q].cols();
    auto x = incl[q].solve(phi.blocks[q]);
    if (!x) throw ModuleError("internal: image coordinates failed");
    proj[q] = *x;
  }
  std::map<std::pair<int, int>, Matrix<S>> maps;
  for (auto& [a, b] : p.covers()) {
    auto x = incl[b].solve(phi.target->cover_map(a, b) * incl[a]);
    if (!x) throw ModuleError("internal: image not closed under structure maps");
    maps[{a, b}] = *x;
  }
  auto m = EncodedModule<S>::make(phi.source->poset(), std::move(dims), std::move(maps));
  return {m, ModuleMorphism<S>(m, phi.target, std::move(incl)),
          ModuleMorphism<S>(phi.source, m, std::move(proj))};
}

template <class S>
struct DirectSumResult {
  ModulePtr<S> module;
  std::vector<ModuleMorphism<S>> injections;
  std::vector<ModuleMorphism<S>> projections;
};

template <class S>
DirectSumResult<S> direct_sum(const std::vector<ModulePtr<S>>& parts, PosetPtr carrier) {
  const FinitePoset& p = *carrier;
  std::vector<int> dims(p.size(), 0);
  for (auto& m : parts) {
    if (m->poset().get() != carrier.get()) throw ModuleError("direct sum carriers differ");
    for (int q = 0; q < p.size(); ++q) dims[q] += m->dim(q);
  }
  std::map<std::pair<int, int>, Matrix<S>> maps;
  for (auto& [a, b] : p.covers()) {
    Matrix<S> blk(dims[b], dims[a]);
    int ro = 0, co = 0;
    for (auto& m : parts) {
      const Matrix<S>& c = m->cover_map(a, b);
      for (int i = 0; i < c.rows(); ++i)
        for (int j = 0; j < c.cols(); ++j) blk(ro + i, co + j) = c(i, j);
      ro += c.rows();
      co += c.cols();
    }
    maps[{a, b}] = std::move(blk);
  }
  DirectSumResult<S> out;
  out.module = EncodedModule<S>::make(carrier, dims, std::move(maps));
  int off_count = int(parts.size());
  std::vector<int> offset(p.size(), 0);
  for (int k = 0; k < off_count; ++k) {
    std::vector<Matrix<S>> inj(p.size()), prj(p.size());
    for (int q = 0; q < p.size(); ++q) {
      int d = parts[k]->dim(q);
      Matrix<S> in(dims[q], d), pr(d, dims[q]);
      for (int i = 0; i < d; ++i) {
        in(offset[q] + i, i) = S(1);
        pr(i, offset[q] + i) = S(1);
      }
      inj[q] = std::move(in);
      prj[q] = std::move(pr);
    }
    out.injections.emplace_back(parts[k], out.module, std::move(inj), false);
    out.projections.emplace_back(out.module, parts[k], std::move(prj), false);
    for (int q = 0; q < p.size(); ++q) offset[q] += parts[k]->dim(q);
  }
  return out;
}

// Basis of Hom(M, N) by direct linear solve of all commutation constraints.
// This is the reference oracle for the indicator Hom formulas.
template <class S>
std::vector<ModuleMorphism<S>> hom_space(const ModulePtr<S>& m, const ModulePtr<S>& n,
                                         int total_dim_cap = 4096) {
  const FinitePoset& p = *m->poset();
  if (n->poset().get() != &p) throw ModuleError("hom carriers differ");
  if (m->total_dim() * n->total_dim() > total_dim_cap * total_dim_cap)
    throw ModuleError("hom solve cap exceeded");
  std::vector<int> var_off(p.size() + 1, 0);
  for (int q = 0; q < p.size(); ++q)
    var_off[q + 1] = var_off[q] + m->dim(q) * n->dim(q);
  int nvars = var_off[p.size()];
  int nrows = 0;
  for (auto& [a, b] : p.covers()) nrows += m->dim(a) * n->dim(b);
  Matrix<S> sys(nrows, nvars);
  int row = 0;
  for (auto& [a, b] : p.covers()) {
    const Matrix<S>& ma = m->cover_map(a, b);  // M_a -> M_b
    const Matrix<S>& nb = n->cover_map(a, b);  // N_a -> N_b
    // constraint: N(a,b) phi_a - phi_b M(a,b) = 0, entry (i, j): i in N_b, j in M_a
    for (int i = 0; i < n->dim(b); ++i)
      for (int j = 0; j < m->dim(a); ++j) {
        for (int k = 0; k < n->dim(a); ++k)
          sys(row, var_off[a] + k * m->dim(a) + j) += nb(i, k);
        for (int k = 0; k < m->dim(b); ++k)
          sys(row, var_off[b] + i * m->dim(b) + k) -= ma(k, j);
        ++row;
      }
  }
  Matrix<S> basis = sys.kernel_basis();
  std::vector<ModuleMorphism<S>> out;
  for (int c = 0; c < basis.cols(); ++c) {
    std::vector<Matrix<S>> blocks;
    for (int q = 0; q < p.size(); ++q) {
      Matrix<S> blk(n->dim(q), m->dim(q));
      for (int i = 0; i < n->dim(q); ++i)
        for (int j = 0; j < m->dim(q); ++j)
          blk(i, j) = basis(var_off[q] + i * m->dim(q) + j, c);
      blocks.push_back(std::move(blk));
    }
    out.emplace_back(m, n, std::move(blocks));
  }
  return out;
}

}  // namespace pomod
