#include "pomod/poset.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>

namespace pomod {

namespace {

std::vector<int> sort_permutation(std::vector<std::string>& ids) {
  std::vector<int> perm(ids.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::sort(perm.begin(), perm.end(),
            [&](int a, int b) { return ids[a] < ids[b]; });
  std::vector<std::string> sorted;
  sorted.reserve(ids.size());
  for (int i : perm) sorted.push_back(ids[i]);
  for (size_t i = 0; i + 1 < sorted.size(); ++i)
    if (sorted[i] == sorted[i + 1]) throw PosetError("duplicate element id: " + sorted[i]);
  ids = std::move(sorted);
  return perm;  // perm[new] = old
}

void warshall(std::vector<char>& leq, int n) {
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i) {
      if (!leq[size_t(i) * n + k]) continue;
      for (int j = 0; j < n; ++j)
        if (leq[size_t(k) * n + j]) leq[size_t(i) * n + j] = 1;
    }
}

std::vector<std::string> find_cycle(const std::vector<std::string>& ids,
                                    const std::vector<char>& leq, int n, int a, int b) {
  // leq is already closed and a <-> b with a != b; recover an arc path a..b..a
  // via BFS on the closed relation restricted to the strongly connected part.
  auto reach = [&](int x, int y) { return leq[size_t(x) * n + y] != 0; };
  std::vector<std::string> cyc{ids[a]};
  // Components of the cycle through intermediate witnesses are not needed for
  // diagnostics; a <= b <= a is already a faithful witness.
  cyc.push_back(ids[b]);
  cyc.push_back(ids[a]);
  (void)reach;
  return cyc;
}

}  // namespace

int FinitePoset::index_of(const std::string& id) const {
  auto it = std::lower_bound(ids_.begin(), ids_.end(), id);
  if (it == ids_.end() || *it != id) throw PosetError("unknown element id: " + id);
  return int(it - ids_.begin());
}

void FinitePoset::finish() {
  const int n = n_;
  for (int i = 0; i < n; ++i)
    if (!leq_[size_t(i) * n + i]) throw PosetError("relation not reflexive");
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (leq_[size_t(i) * n + j] && leq_[size_t(j) * n + i])
        throw CycleError(find_cycle(ids_, leq_, n, i, j));
  // transitivity
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      if (!leq_[size_t(i) * n + k]) continue;
      for (int j = 0; j < n; ++j)
        if (leq_[size_t(k) * n + j] && !leq_[size_t(i) * n + j])
          throw PosetError("relation not transitive at " + ids_[i] + " <= " + ids_[k] +
                           " <= " + ids_[j]);
    }
  // transitive reduction
  up_.assign(n, {});
  down_.assign(n, {});
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (a == b || !leq(a, b)) continue;
      bool cover = true;
      for (int c = 0; c < n && cover; ++c)
        if (c != a && c != b && leq(a, c) && leq(c, b)) cover = false;
      if (cover) {
        covers_.emplace_back(a, b);
        up_[a].push_back(b);
        down_[b].push_back(a);
      }
    }
  // linear extension: count strict predecessors, Kahn by index order
  std::vector<int> indeg(n, 0);
  for (auto& [a, b] : covers_) ++indeg[b];
  std::vector<int> ready;
  for (int i = 0; i < n; ++i)
    if (indeg[i] == 0) ready.push_back(i);
  while (!ready.empty()) {
    int v = *std::min_element(ready.begin(), ready.end());
    ready.erase(std::find(ready.begin(), ready.end(), v));
    topo_.push_back(v);
    for (int w : up_[v])
      if (--indeg[w] == 0) ready.push_back(w);
  }
  if (int(topo_.size()) != n) throw PosetError("internal: topological sort failed");
}

std::shared_ptr<const FinitePoset> FinitePoset::from_covers(
    std::vector<std::string> elements,
    const std::vector<std::pair<std::string, std::string>>& covers) {
  return transitive_closure(std::move(elements), covers);
}

std::shared_ptr<const FinitePoset> FinitePoset::from_relation(
    std::vector<std::string> elements,
    const std::vector<std::pair<std::string, std::string>>& leq_pairs) {
  auto p = std::shared_ptr<FinitePoset>(new FinitePoset());
  sort_permutation(elements);
  p->ids_ = elements;
  p->n_ = int(elements.size());
  p->leq_.assign(size_t(p->n_) * p->n_, 0);
  for (int i = 0; i < p->n_; ++i) p->leq_[size_t(i) * p->n_ + i] = 1;
  for (auto& [a, b] : leq_pairs)
    p->leq_[size_t(p->index_of(a)) * p->n_ + p->index_of(b)] = 1;
  p->finish();
  return p;
}

std::shared_ptr<const FinitePoset> transitive_closure(
    std::vector<std::string> elements,
                            const std::vector<std::pair<std::string, std::string>>& arcs) {
  auto p = std::shared_ptr<FinitePoset>(new FinitePoset());
  sort_permutation(elements);
  p->ids_ = elements;
  const int n = int(elements.size());
  p->n_ = n;
  p->leq_.assign(size_t(n) * n, 0);
  for (int i = 0; i < n; ++i) p->leq_[size_t(i) * n + i] = 1;
  for (auto& [a, b] : arcs)
    p->leq_[size_t(p->index_of(a)) * n + p->index_of(b)] = 1;
  warshall(p->leq_, n);
  p->finish();
  return p;
}

PosetRegion::PosetRegion(PosetPtr p, RegionKind k, std::vector<char> m, bool check)
    : carrier(std::move(p)), kind(k), members(std::move(m)) {
  if (int(members.size()) != carrier->size()) throw PosetError("region size mismatch");
  if (!check) return;
  switch (kind) {
    case RegionKind::Upset:
      if (!is_upset(*carrier, members)) throw PosetError("not an upset");
      break;
    case RegionKind::Downset:
      if (!is_downset(*carrier, members)) throw PosetError("not a downset");
      break;
    case RegionKind::Interval: {
      // must equal up(R) /\ down(R)
      std::vector<int> seed;
      for (int i = 0; i < carrier->size(); ++i)
        if (members[i]) seed.push_back(i);
      PosetRegion u = upset_generated(carrier, seed);
      PosetRegion d = downset_cogenerated(carrier, seed);
      for (int i = 0; i < carrier->size(); ++i)
        if ((u.members[i] && d.members[i]) != (members[i] != 0))
          throw PosetError("not an interval (upset/downset intersection)");
      break;
    }
  }
}

int PosetRegion::count() const {
  int c = 0;
  for (char m : members) c += (m != 0);
  return c;
}

std::vector<int> PosetRegion::member_indices() const {
  std::vector<int> out;
  for (int i = 0; i < int(members.size()); ++i)
    if (members[i]) out.push_back(i);
  return out;
}

std::vector<std::string> PosetRegion::member_ids() const {
  std::vector<std::string> out;
  for (int i : member_indices()) out.push_back(carrier->id(i));
  return out;
}

PosetMorphism::PosetMorphism(PosetPtr s, PosetPtr t, std::vector<int> m)
    : source(std::move(s)), target(std::move(t)), map(std::move(m)) {
  if (int(map.size()) != source->size()) throw PosetError("morphism size mismatch");
  for (auto& [a, b] : source->covers())
    if (!target->leq(map[a], map[b]))
      throw PosetError("map not order-preserving at " + source->id(a) + " <= " + source->id(b));
}

bool is_upset(const FinitePoset& p, const std::vector<char>& members) {
  for (auto& [a, b] : p.covers())
    if (members[a] && !members[b]) return false;
  return true;
}

bool is_downset(const FinitePoset& p, const std::vector<char>& members) {
  for (auto& [a, b] : p.covers())
    if (members[b] && !members[a]) return false;
  return true;
}

PosetRegion upset_generated(const PosetPtr& p, const std::vector<int>& seed) {
  std::vector<char> m(p->size(), 0);
  for (int s : seed)
    for (int i = 0; i < p->size(); ++i)
      if (p->leq(s, i)) m[i] = 1;
  return PosetRegion(p, RegionKind::Upset, std::move(m));
}

PosetRegion downset_cogenerated(const PosetPtr& p, const std::vector<int>& seed) {
  std::vector<char> m(p->size(), 0);
  for (int s : seed)
    for (int i = 0; i < p->size(); ++i)
      if (p->leq(i, s)) m[i] = 1;
  return PosetRegion(p, RegionKind::Downset, std::move(m));
}

PosetRegion region_complement(const PosetRegion& r) {
  std::vector<char> m(r.members.size());
  for (size_t i = 0; i < m.size(); ++i) m[i] = !r.members[i];
  RegionKind k = r.kind == RegionKind::Upset ? RegionKind::Downset
               : r.kind == RegionKind::Downset ? RegionKind::Upset
                                               : RegionKind::Interval;
  if (k == RegionKind::Interval) throw PosetError("complement of an interval is not supported");
  return PosetRegion(r.carrier, k, std::move(m));
}

PosetRegion region_intersection(const PosetRegion& a, const PosetRegion& b) {
  if (a.carrier.get() != b.carrier.get()) throw PosetError("regions on different carriers");
  std::vector<char> m(a.members.size());
  for (size_t i = 0; i < m.size(); ++i) m[i] = a.members[i] && b.members[i];
  RegionKind k = a.kind == b.kind ? a.kind : RegionKind::Interval;
  return PosetRegion(a.carrier, k, std::move(m), /*check=*/false);
}

std::vector<PosetRegion> pi0(const PosetRegion& r) {
  const FinitePoset& p = *r.carrier;
  const int n = p.size();
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int a = 0; a < n; ++a) {
    if (!r.members[a]) continue;
    for (int b = a + 1; b < n; ++b) {
      if (!r.members[b] || !p.comparable(a, b)) continue;
      int ra = find(a), rb = find(b);
      if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);
    }
  }
  std::map<int, std::vector<char>> comps;  // root -> members, ordered by root
  for (int i = 0; i < n; ++i)
    if (r.members[i]) {
      auto& v = comps[find(i)];
      v.resize(n, 0);
      v[i] = 1;
    }
  std::vector<PosetRegion> out;
  for (auto& [root, m] : comps)
    out.emplace_back(r.carrier, RegionKind::Interval, std::move(m), /*check=*/false);
  return out;
}

GridEmbedding embed_into_grid(const FinitePoset& p) {
  const int n = p.size();
  std::vector<char> used(n, 0);
  std::vector<std::vector<int>> chains;
  for (int start = 0; start < n; ++start) {
    if (used[start]) continue;
    std::vector<int> chain{start};
    used[start] = 1;
    for (;;) {
      int next = -1;
      for (int cand = 0; cand < n; ++cand)
        if (!used[cand] && p.less(chain.back(), cand)) { next = cand; break; }
      if (next < 0) break;
      chain.push_back(next);
      used[next] = 1;
    }
    chains.push_back(std::move(chain));
  }
  GridEmbedding e;
  e.n = int(chains.size());
  e.coords.assign(n, std::vector<std::int64_t>(e.n, 0));
  for (int q = 0; q < n; ++q)
    for (int j = 0; j < e.n; ++j) {
      std::int64_t c = 0;
      for (int elt : chains[j])
        if (p.leq(elt, q)) ++c;
      e.coords[q][j] = c;
    }
  return e;
}

PosetPtr box_poset(const std::vector<std::int64_t>& lo, const std::vector<std::int64_t>& hi) {
  const int n = int(lo.size());
  std::vector<std::int64_t> width(n);
  std::int64_t cells = 1;
  for (int i = 0; i < n; ++i) {
    width[i] = hi[i] - lo[i] + 1;
    if (width[i] <= 0) throw PosetError("empty box");
    cells *= width[i];
  }
  int digits = 1;
  for (std::int64_t w : width) {
    int d = 1;
    while (w > 10) { w /= 10; ++d; }
    digits = std::max(digits, d);
  }
  std::vector<std::string> ids;
  std::vector<std::pair<std::string, std::string>> covers;
  std::vector<std::int64_t> q(n);
  auto id_of = [&](const std::vector<std::int64_t>& v) {
    std::string s;
    for (int i = 0; i < n; ++i) {
      std::string d = std::to_string(v[i] - lo[i]);
      s += std::string(size_t(digits - int(d.size())), '0') + d;
      if (i + 1 < n) s += ",";
    }
    return s;
  };
  for (std::int64_t idx = 0; idx < cells; ++idx) {
    std::int64_t rest = idx;
    for (int i = n - 1; i >= 0; --i) {
      q[i] = lo[i] + rest % width[i];
      rest /= width[i];
    }
    ids.push_back(id_of(q));
    for (int i = 0; i < n; ++i)
      if (q[i] < hi[i]) {
        auto q2 = q;
        ++q2[i];
        covers.emplace_back(id_of(q), id_of(q2));
      }
  }
  return FinitePoset::from_covers(std::move(ids), covers);
}

int box_poset_index(const std::vector<std::int64_t>& lo, const std::vector<std::int64_t>& hi,
                    const std::vector<std::int64_t>& q) {
  const int n = int(lo.size());
  std::int64_t idx = 0;
  for (int i = 0; i < n; ++i) {
    if (q[i] < lo[i] || q[i] > hi[i]) throw PosetError("degree outside box");
    idx = idx * (hi[i] - lo[i] + 1) + (q[i] - lo[i]);
  }
  return int(idx);
}

}  // namespace pomod
