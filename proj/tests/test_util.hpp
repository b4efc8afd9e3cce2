#pragma once

// Shared helpers for unit and acceptance tests.

#include <functional>

#include "pomod/homalg.hpp"

namespace pomod::testutil {

inline FinDetRegion region_of(const Box& box, RegionKind k,
                              const std::function<bool(const Degree&)>& pred) {
  std::vector<char> cells(size_t(box.cell_count()), 0);
  for (std::int64_t c = 0; c < box.cell_count(); ++c)
    cells[size_t(c)] = pred(box.degree(c)) ? 1 : 0;
  return FinDetRegion(box, k, std::move(cells));
}

// Degreewise exactness of 0 -> M -> E^0 -> E^1 -> ... (injective side) or
// ... -> F_1 -> F_0 -> M -> 0 (flat side).
template <class S>
bool resolution_exact(const ZnResolution<S>& res) {
  const Box& box = res.source->box();
  for (std::int64_t c = 0; c < box.cell_count(); ++c) {
    if (res.side == ResolutionSide::Injective) {
      const Matrix<S>& aug = res.augmentation.blocks[size_t(c)];
      if (aug.rank() != res.source->dim_cell(c)) return false;  // M into E^0
      Matrix<S> prev = aug;
      for (size_t i = 0; i < res.differentials.size(); ++i) {
        const Matrix<S>& d = res.differentials[i].blocks[size_t(c)];
        if (!(d * prev).is_zero()) return false;
        // ker d = im prev
        int dim = d.cols();
        if (dim - d.rank() != prev.rank()) return false;
        prev = d;
      }
      // surjectivity onto the last term
      if (!res.differentials.empty()) {
        const Matrix<S>& last = res.differentials.back().blocks[size_t(c)];
        if (last.rank() != res.terms.back()->dim_cell(c)) return false;
      } else {
        if (aug.rank() != res.terms.back()->dim_cell(c)) return false;
      }
    } else {
      const Matrix<S>& aug = res.augmentation.blocks[size_t(c)];
      if (aug.rank() != res.source->dim_cell(c)) return false;  // F_0 onto M
      Matrix<S> prev = aug;
      for (size_t i = 0; i < res.differentials.size(); ++i) {
        const Matrix<S>& d = res.differentials[i].blocks[size_t(c)];
        if (!(prev * d).is_zero()) return false;
        if (prev.cols() - prev.rank() != d.rank()) return false;  // ker prev = im d
        prev = d;
      }
      if (!res.differentials.empty()) {
        const Matrix<S>& top = res.differentials.back().blocks[size_t(c)];
        if (top.rank() != top.cols()) return false;  // deepest map injective
      } else {
        if (aug.rank() != aug.cols()) return false;
      }
    }
  }
  return true;
}

// Every single summand of the hull is necessary: dropping it breaks
// injectivity somewhere.
template <class S>
bool hull_is_minimal(const InjectiveHull<S>& h) {
  const Box& box = h.source->box();
  for (size_t drop = 0; drop < h.labels.size(); ++drop) {
    bool still_injective = true;
    for (std::int64_t c = 0; c < box.cell_count() && still_injective; ++c) {
      const Matrix<S>& blk = h.inclusion.blocks[size_t(c)];
      std::vector<int> rows;
      const auto& act = h.sum.active[size_t(c)];
      for (int r = 0; r < int(act.size()); ++r)
        if (act[r] != int(drop)) rows.push_back(r);
      Matrix<S> sub(int(rows.size()), blk.cols());
      for (int r = 0; r < int(rows.size()); ++r)
        for (int j = 0; j < blk.cols(); ++j) sub(r, j) = blk(rows[size_t(r)], j);
      if (sub.rank() < h.source->dim_cell(c)) still_injective = false;
    }
    if (still_injective) return false;
  }
  return true;
}

}  // namespace pomod::testutil
