#pragma once

#include <variant>

#include "pomod/module.hpp"

namespace pomod {

// Certified constant subdivision: a partition of the carrier together with an
// explicit trivialization psi_q of the module over each region. The
// certificate is what downstream constructions consume, so certification is
// constructive rather than existential.
template <class S>
struct ConstantSubdivision {
  ModulePtr<S> module;
  std::vector<std::vector<int>> regions;  // blocks, each sorted, ordered by least element
  std::vector<int> region_of;             // element -> block index
  std::vector<Matrix<S>> psi;             // M_{base(region(q))} -> M_q, iso; psi[base] = id

  int base(int region) const { return regions[size_t(region)].front(); }
};

struct SubdivisionViolation {
  std::string reason;
  std::vector<std::string> witness;  // element ids involved
};

// Checks the certificate axioms for given trivializations: region fibers all
// isomorphic through psi, in-region maps carried to the identity, and one
// transition per ordered region pair (no monodromy).
template <class S>
std::optional<SubdivisionViolation> check_certificate(const ConstantSubdivision<S>& cs) {
  const FinitePoset& p = *cs.module->poset();
  for (int q = 0; q < p.size(); ++q) {
    int b = cs.base(cs.region_of[q]);
    if (cs.psi[q].rows() != cs.module->dim(q) || cs.psi[q].cols() != cs.module->dim(b) ||
        !cs.psi[q].invertible())
      return SubdivisionViolation{"region fiber not isomorphic to its base", {p.id(q), p.id(b)}};
  }
  std::map<std::pair<int, int>, Matrix<S>> transition;
  std::map<std::pair<int, int>, std::pair<int, int>> first_pair;
  for (int q = 0; q < p.size(); ++q)
    for (int r = 0; r < p.size(); ++r) {
      if (!p.leq(q, r)) continue;
      int rq = cs.region_of[q], rr = cs.region_of[r];
      Matrix<S> comp = *cs.psi[r].inverse() * (cs.module->map(q, r) * cs.psi[q]);
      if (rq == rr) {
        if (comp != Matrix<S>::identity(comp.rows()))
          return SubdivisionViolation{"structure map not constant inside a region",
                                      {p.id(q), p.id(r)}};
      } else {
        auto key = std::make_pair(rq, rr);
        auto it = transition.find(key);
        if (it == transition.end()) {
          transition.emplace(key, comp);
          first_pair.emplace(key, std::make_pair(q, r));
        } else if (it->second != comp) {
          auto [q0, r0] = first_pair[key];
          return SubdivisionViolation{
              "monodromy between regions",
              {p.id(q0), p.id(r0), p.id(q), p.id(r)}};
        }
      }
    }
  return std::nullopt;
}

// Builds trivializations by propagating structure maps inside each region
// (components rooted at their least element get the identity gauge), then
// checks every comparable pair against the resulting certificate.
template <class S>
std::variant<ConstantSubdivision<S>, SubdivisionViolation> verify_constant_subdivision(
    const ModulePtr<S>& m, const std::vector<std::vector<int>>& partition) {
  const FinitePoset& p = *m->poset();
  ConstantSubdivision<S> cs;
  cs.module = m;
  cs.regions = partition;
  for (auto& r : cs.regions) {
    if (r.empty()) return SubdivisionViolation{"empty region", {}};
    std::sort(r.begin(), r.end());
  }
  std::sort(cs.regions.begin(), cs.regions.end());
  cs.region_of.assign(p.size(), -1);
  for (int b = 0; b < int(cs.regions.size()); ++b)
    for (int q : cs.regions[size_t(b)]) {
      if (q < 0 || q >= p.size() || cs.region_of[q] != -1)
        return SubdivisionViolation{"partition does not cover the carrier exactly once", {}};
      cs.region_of[q] = b;
    }
  for (int q = 0; q < p.size(); ++q)
    if (cs.region_of[q] == -1)
      return SubdivisionViolation{"partition does not cover the carrier exactly once", {p.id(q)}};

  for (auto& region : cs.regions) {
    int d = m->dim(region.front());
    for (int q : region)
      if (m->dim(q) != d)
        return SubdivisionViolation{"region has fibers of different dimension",
                                    {p.id(region.front()), p.id(q)}};
  }

  cs.psi.assign(size_t(p.size()), Matrix<S>());
  std::vector<char> assigned(size_t(p.size()), 0);
  for (auto& region : cs.regions) {
    // components of the in-region comparability graph, seeded in index order
    for (int seed : region) {
      if (assigned[size_t(seed)]) continue;
      cs.psi[size_t(seed)] = Matrix<S>::identity(m->dim(seed));
      assigned[size_t(seed)] = 1;
      std::vector<int> queue{seed};
      while (!queue.empty()) {
        int q = queue.back();
        queue.pop_back();
        for (int r : region) {
          if (assigned[size_t(r)] || !p.comparable(q, r)) continue;
          Matrix<S> step = p.leq(q, r) ? m->map(q, r) : m->map(r, q);
          if (!step.invertible())
            return SubdivisionViolation{"in-region structure map not invertible",
                                        {p.id(std::min(q, r)), p.id(std::max(q, r))}};
          cs.psi[size_t(r)] =
              p.leq(q, r) ? step * cs.psi[size_t(q)] : *step.inverse() * cs.psi[size_t(q)];
          assigned[size_t(r)] = 1;
          queue.push_back(r);
        }
      }
    }
  }
  if (auto bad = check_certificate(cs)) return *bad;
  return cs;
}

// The canonical family of constant upsets of a subdivision: for each region,
// the upset it generates and the complement of the downset it cogenerates.
// Deduplicated and ordered by membership pattern.
template <class S>
std::vector<PosetRegion> constant_upsets(const ConstantSubdivision<S>& cs) {
  PosetPtr p = cs.module->poset();
  std::vector<PosetRegion> out;
  auto push_unique = [&](PosetRegion r) {
    for (auto& seen : out)
      if (seen.members == r.members) return;
    out.push_back(std::move(r));
  };
  for (auto& region : cs.regions) {
    push_unique(upset_generated(p, region));
    push_unique(region_complement(downset_cogenerated(p, region)));
  }
  std::sort(out.begin(), out.end(),
            [](const PosetRegion& a, const PosetRegion& b) { return a.members > b.members; });
  return out;
}

// Fibers of a |-> {U in Upsilon : a in U}, ordered by least element.
inline std::vector<std::vector<int>> uptight_regions(const PosetPtr& p,
                                                     const std::vector<PosetRegion>& upsilon) {
  std::map<std::vector<char>, std::vector<int>> fibers;
  for (int a = 0; a < p->size(); ++a) {
    std::vector<char> print(upsilon.size());
    for (size_t u = 0; u < upsilon.size(); ++u) print[u] = upsilon[u].contains(a);
    fibers[print].push_back(a);
  }
  std::vector<std::vector<int>> blocks;
  for (auto& [print, elems] : fibers) blocks.push_back(elems);
  std::sort(blocks.begin(), blocks.end());
  return blocks;
}

struct UptightPoset {
  PosetPtr poset;                                // transitive closure
  std::vector<std::vector<int>> blocks;          // block k <-> poset element k (by id order)
  std::vector<std::pair<int, int>> witness_dag;  // pre-closure arcs between blocks
  std::vector<int> block_of;                     // carrier element -> block

  bool dag_has_arc(int a, int b) const {
    for (auto& [x, y] : witness_dag)
      if (x == a && y == b) return true;
    return false;
  }
};

// Witness relation A <= B iff some a in A, b in B has a <= b; acyclic by the
// fingerprint argument, closed transitively to give the uptight poset.
inline UptightPoset uptight_poset(const PosetPtr& carrier,
                                  const std::vector<std::vector<int>>& blocks) {
  UptightPoset out;
  out.blocks = blocks;
  out.block_of.assign(carrier->size(), -1);
  for (int k = 0; k < int(blocks.size()); ++k)
    for (int e : blocks[size_t(k)]) out.block_of[e] = k;
  int digits = 1;
  for (size_t w = blocks.size(); w > 10; w /= 10) ++digits;
  auto block_id = [&](int k) {
    std::string d = std::to_string(k);
    return "r" + std::string(size_t(digits - int(d.size())), '0') + d;
  };
  std::vector<std::string> ids;
  for (int k = 0; k < int(blocks.size()); ++k) ids.push_back(block_id(k));
  for (int a = 0; a < carrier->size(); ++a)
    for (int b = 0; b < carrier->size(); ++b) {
      if (!carrier->leq(a, b)) continue;
      int ba = out.block_of[a], bb = out.block_of[b];
      if (ba != bb && !out.dag_has_arc(ba, bb)) out.witness_dag.emplace_back(ba, bb);
    }
  std::vector<std::pair<std::string, std::string>> arcs;
  for (auto& [a, b] : out.witness_dag) arcs.emplace_back(block_id(a), block_id(b));
  out.poset = transitive_closure(std::move(ids), arcs);  // CycleError here is impossible
  return out;
}

// A finite encoding with an explicit round-trip witness.
template <class S>
struct Encoding {
  PosetMorphism pi;
  ModulePtr<S> h;
  ModuleMorphism<S> witness;  // pullback(h, pi) -> M, invertible blocks
};

template <class S>
Encoding<S> identity_encoding(const ModulePtr<S>& m) {
  std::vector<int> idmap(m->poset()->size());
  for (int i = 0; i < m->poset()->size(); ++i) idmap[i] = i;
  PosetMorphism pi(m->poset(), m->poset(), idmap);
  return {pi, m, ModuleMorphism<S>::identity(m)};
}

// Uptight encoding of a module from a certified constant subdivision:
// regions of the common refinement by constant upsets become the encoding
// poset, and the certificate's trivializations assemble both H and the
// round-trip isomorphism. The sandwich gauge transports base spaces between
// original regions met by one uptight block.
template <class S>
Encoding<S> uptight_encoding(const ModulePtr<S>& m, const ConstantSubdivision<S>& cs) {
  PosetPtr carrier = m->poset();
  if (cs.module.get() != m.get()) throw ModuleError("subdivision certifies a different module");
  UptightPoset up = uptight_poset(carrier, uptight_regions(carrier, constant_upsets(cs)));
  const int nb = int(up.blocks.size());

  // Gauge per element: M_{space of block} -> M_q where the block space is the
  // base space of the subdivision region owning the block's least element.
  std::vector<Matrix<S>> gauge(size_t(carrier->size()));
  for (int k = 0; k < nb; ++k) {
    int lead = up.blocks[size_t(k)].front();
    int home = cs.region_of[lead];
    for (int q : up.blocks[size_t(k)]) {
      int rq = cs.region_of[q];
      if (rq == home) {
        gauge[size_t(q)] = cs.psi[size_t(q)];
        continue;
      }
      // sandwich: some element of the home region sits below q because the
      // block lies inside the upset generated by that region
      int below = -1;
      for (int i : cs.regions[size_t(home)])
        if (carrier->leq(i, q)) { below = i; break; }
      if (below < 0) throw ModuleError("internal: uptight block escapes its sandwich upset");
      gauge[size_t(q)] = m->map(below, q) * cs.psi[size_t(below)];
      if (!gauge[size_t(q)].invertible())
        throw ModuleError("internal: sandwich transport not invertible");
    }
  }

  // H on the uptight poset
  std::vector<int> dims(size_t(nb), 0);
  for (int k = 0; k < nb; ++k) dims[size_t(k)] = m->dim(up.blocks[size_t(k)].front());
  std::map<std::pair<int, int>, Matrix<S>> hmaps;
  for (auto& [a, b] : up.poset->covers()) {
    // least witness pair; independence of the choice is re-checked below
    std::optional<Matrix<S>> tr;
    for (int qa : up.blocks[size_t(a)])
      for (int qb : up.blocks[size_t(b)]) {
        if (!carrier->leq(qa, qb)) continue;
        Matrix<S> cand = *gauge[size_t(qb)].inverse() * (m->map(qa, qb) * gauge[size_t(qa)]);
        if (!tr)
          tr = cand;
        else if (*tr != cand)
          throw ModuleError("internal: uptight transition depends on the witness pair");
      }
    // a cover of the closure is always a witnessed arc, so tr is set
    if (!tr) throw ModuleError("internal: uptight cover without witness pair");
    hmaps[{a, b}] = *tr;
  }
  ModulePtr<S> h = EncodedModule<S>::make(up.poset, dims, std::move(hmaps));

  std::vector<int> pimap(size_t(carrier->size()));
  for (int q = 0; q < carrier->size(); ++q) pimap[size_t(q)] = up.block_of[q];
  PosetMorphism pi(carrier, up.poset, pimap);

  ModulePtr<S> pulled = pullback(h, pi);
  std::vector<Matrix<S>> wit(size_t(carrier->size()));
  for (int q = 0; q < carrier->size(); ++q) wit[size_t(q)] = gauge[size_t(q)];
  ModuleMorphism<S> witness(pulled, m, std::move(wit));
  if (!verify_isomorphism(witness)) throw ModuleError("internal: uptight round trip failed");
  return {pi, h, witness};
}

}  // namespace pomod
