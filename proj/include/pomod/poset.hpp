#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace pomod {

struct PosetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Raised by transitive_closure on cyclic input; carries a witness cycle.
struct CycleError : PosetError {
  std::vector<std::string> cycle;
  explicit CycleError(std::vector<std::string> c)
      : PosetError("relation has a cycle"), cycle(std::move(c)) {}
};

// A finite poset over opaque string ids. Ids are sorted lexicographically at
// construction and all derived data (regions, components, embeddings) follows
// that order, which keeps serialized output stable.
class FinitePoset {
 public:
  // Relation given as a list of pairs (a <= b); must already be a partial
  // order after adding reflexive pairs, otherwise constructs from covers.
  static std::shared_ptr<const FinitePoset> from_covers(
      std::vector<std::string> elements,
      const std::vector<std::pair<std::string, std::string>>& covers);

  // Full relation matrix input; checked reflexive, antisymmetric, transitive.
  static std::shared_ptr<const FinitePoset> from_relation(
      std::vector<std::string> elements,
      const std::vector<std::pair<std::string, std::string>>& leq_pairs);

  int size() const { return n_; }
  const std::vector<std::string>& ids() const { return ids_; }
  int index_of(const std::string& id) const;
  const std::string& id(int i) const { return ids_[i]; }

  bool leq(int a, int b) const { return leq_[size_t(a) * n_ + b]; }
  bool less(int a, int b) const { return a != b && leq(a, b); }
  bool comparable(int a, int b) const { return leq(a, b) || leq(b, a); }

  // Transitive reduction, pairs (a, b) with a covered by b.
  const std::vector<std::pair<int, int>>& covers() const { return covers_; }
  const std::vector<std::vector<int>>& covers_up() const { return up_; }
  const std::vector<std::vector<int>>& covers_down() const { return down_; }

  // Elements in a fixed linear extension (ids broken by index).
  const std::vector<int>& topo_order() const { return topo_; }

 private:
  friend std::shared_ptr<const FinitePoset> transitive_closure(
      std::vector<std::string>, const std::vector<std::pair<std::string, std::string>>&);
  FinitePoset() = default;
  void finish();  // covers, topo order; checks antisymmetry

  int n_ = 0;
  std::vector<std::string> ids_;
  std::vector<char> leq_;
  std::vector<std::pair<int, int>> covers_;
  std::vector<std::vector<int>> up_, down_;
  std::vector<int> topo_;
};

using PosetPtr = std::shared_ptr<const FinitePoset>;

enum class RegionKind { Upset, Downset, Interval };

// Subset of a poset together with the closure flavor it claims; validity is
// checked on construction.
struct PosetRegion {
  PosetPtr carrier;
  RegionKind kind = RegionKind::Interval;
  std::vector<char> members;

  PosetRegion() = default;
  PosetRegion(PosetPtr p, RegionKind k, std::vector<char> m, bool check = true);

  bool contains(int i) const { return members[i]; }
  int count() const;
  bool empty() const { return count() == 0; }
  std::vector<int> member_indices() const;
  std::vector<std::string> member_ids() const;

  friend bool operator==(const PosetRegion& a, const PosetRegion& b) {
    return a.kind == b.kind && a.members == b.members;
  }
};

struct PosetMorphism {
  PosetPtr source;
  PosetPtr target;
  std::vector<int> map;  // source index -> target index

  PosetMorphism() = default;
  PosetMorphism(PosetPtr s, PosetPtr t, std::vector<int> m);  // checks monotone

  int operator()(int i) const { return map[i]; }
};

// --- poset_core operations ---

// Smallest reflexive-transitive superset of an acyclic relation.
std::shared_ptr<const FinitePoset> transitive_closure(
    std::vector<std::string> elements,
    const std::vector<std::pair<std::string, std::string>>& arcs);

bool is_upset(const FinitePoset& p, const std::vector<char>& members);
bool is_downset(const FinitePoset& p, const std::vector<char>& members);

PosetRegion upset_generated(const PosetPtr& p, const std::vector<int>& seed);
PosetRegion downset_cogenerated(const PosetPtr& p, const std::vector<int>& seed);
PosetRegion region_complement(const PosetRegion& r);
PosetRegion region_intersection(const PosetRegion& a, const PosetRegion& b);

// Connected components of a region under zig-zag comparability inside the
// region, ordered by least member index.
std::vector<PosetRegion> pi0(const PosetRegion& r);

// Order embedding into Z^n built from a greedy chain partition: coordinate j
// of an element counts the chain-j elements below it. Chain prefixes make the
// comparison biconditional. The chain count is a heuristic bound on the
// dimension, not the order dimension.
struct GridEmbedding {
  int n = 0;
  std::vector<std::vector<std::int64_t>> coords;  // per element index
};
GridEmbedding embed_into_grid(const FinitePoset& p);

// The grid [lo, hi] in Z^n as a poset; ids are zero-padded coordinate tuples,
// cell order is lexicographic in coordinates.
PosetPtr box_poset(const std::vector<std::int64_t>& lo, const std::vector<std::int64_t>& hi);
int box_poset_index(const std::vector<std::int64_t>& lo, const std::vector<std::int64_t>& hi,
                    const std::vector<std::int64_t>& q);

}  // namespace pomod
