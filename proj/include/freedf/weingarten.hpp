#pragma once

#include <filesystem>
#include <memory>
#include <optional>
#include <vector>

#include "freedf/category.hpp"
#include "freedf/matrix.hpp"
#include "freedf/partition.hpp"
#include "freedf/rational.hpp"

namespace freedf {

/// A square matrix indexed by C(m) in RGS-lexicographic order.
struct CategoryMatrix {
  CategoryId category = CategoryId::SPlus;
  int m = 0;
  int n = 0;
  std::vector<Partition> basis;
  RationalMatrix entries;

  std::optional<std::size_t> index_of(const Partition& p) const;
};

/// G(p, q) = n^{#(p v q)}, the join taken in P(m).
using GramTable = CategoryMatrix;
/// Exact inverse of the Gram matrix.
using WeingartenTable = CategoryMatrix;

GramTable gram(CategoryId cat, int m, int n);

/// Memoised per (cat, m, n); tables are immutable once built and shared.
/// Throws SingularGram when the Gram matrix has no inverse.
std::shared_ptr<const WeingartenTable> weingarten(CategoryId cat, int m, int n);

/// Haar-state moment h(u_{i1 j1} ... u_{im jm}) by the Weingarten formula.
Rational haar_moment(CategoryId cat, int n, const IndexTuple& i, const IndexTuple& j);

/// Wg_{2k,n}(p, q) * n^k.
Rational wg_scaled(CategoryId cat, int k, int n, const Partition& p, const Partition& q);

/// Persist Weingarten tables as "<cat>_<m>_<n>.json" under `dir`; an empty
/// path switches persistence off.
void set_weingarten_cache_dir(const std::filesystem::path& dir);

/// Drops the in-memory table cache.
void clear_weingarten_cache();

}  // namespace freedf
