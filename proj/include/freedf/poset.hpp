#pragma once

#include <cstddef>
#include <memory>
#include <mutex>
#include <optional>
#include <unordered_map>
#include <vector>

#include "freedf/category.hpp"
#include "freedf/partition.hpp"
#include "freedf/rational.hpp"

namespace freedf {

/// A finite set of partitions of a common [m] under the refinement order.
/// Möbius values are computed column by column, mu(., p), and memoised.
class FinitePoset {
 public:
  explicit FinitePoset(std::vector<Partition> elements);

  FinitePoset(const FinitePoset&) = delete;
  FinitePoset& operator=(const FinitePoset&) = delete;

  const std::vector<Partition>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  std::optional<std::size_t> index_of(const Partition& p) const;

  /// mu(s, p). Throws NotInPoset, NotComparable.
  Rational mobius(const Partition& s, const Partition& p) const;

  /// mu(s, p) for every element s, indexed like elements(); zero where s is not below p.
  const std::vector<Rational>& mobius_column(std::size_t p) const;

  /// Indices of elements s with s <= p.
  const std::vector<std::size_t>& down_set(std::size_t p) const;

 private:
  std::vector<Partition> elements_;
  std::unordered_map<Partition, std::size_t> index_;

  struct Column {
    std::vector<std::size_t> below;
    std::vector<Rational> mu;
  };
  const Column& column(std::size_t p) const;

  mutable std::mutex mutex_;
  mutable std::unordered_map<std::size_t, std::unique_ptr<const Column>> columns_;
};

/// Shared poset on C(m) with the order induced from P(m).
const FinitePoset& category_poset(CategoryId cat, int m);

/// mu_{P(m)}(p, 1_m) = (-1)^{#p-1} (#p-1)!.
Rational mobius_to_top_full_lattice(const Partition& p);

/// Kreweras complement of a non-crossing partition.
Partition kreweras_complement(const Partition& p);

/// mu_{NC(m)}(p, 1_m) = prod over blocks V of K(p) of (-1)^{|V|-1} Cat(|V|-1).
/// Throws NotInCategory for crossing p.
Rational mobius_to_top_noncrossing(const Partition& p);

Integer catalan(unsigned k);

}  // namespace freedf
