#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace freedf {

/// Largest order accepted anywhere in the library.
inline constexpr int kMaxOrder = 16;

/// Default bound for full enumeration of P(m).
inline constexpr int kDefaultPartitionCap = 10;

/// A set partition of [m] stored as a restricted-growth string: position k
/// carries the index of its block, blocks numbered by first occurrence from 0.
/// Positions are 0-based here; every external text form is 1-based.
class Partition {
 public:
  /// The empty partition of [0].
  Partition() = default;

  /// Relabels arbitrary non-negative block labels by first occurrence.
  static Partition from_labels(std::span<const int> labels);
  static Partition singletons(int m);
  static Partition one(int m);

  int size() const { return static_cast<int>(labels_.size()); }
  int num_blocks() const { return blocks_; }
  int label(int position) const { return labels_[static_cast<std::size_t>(position)]; }
  std::span<const std::uint8_t> labels() const { return labels_; }

  /// Blocks as increasing lists of 0-based positions, ordered by first element.
  std::vector<std::vector<int>> blocks() const;
  std::vector<int> block_sizes() const;

  /// RGS text, e.g. "0,0,1,0". The empty partition renders as "".
  std::string to_string() const;
  /// Block notation with 1-based elements, e.g. "{{1,2,4},{3}}".
  std::string to_block_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition& a, const Partition& b) {
    return a.labels_ <=> b.labels_;
  }

 private:
  std::vector<std::uint8_t> labels_;
  int blocks_ = 0;
};

/// A word index i = (i_1, ..., i_m) with 1 <= i_k <= n.
class IndexTuple {
 public:
  IndexTuple() = default;
  /// Throws BadTuple unless every entry lies in [1, n].
  IndexTuple(std::vector<int> entries, int n);
  /// Alphabet bound taken as the largest entry (tuples over the naturals).
  explicit IndexTuple(std::vector<int> entries);

  int size() const { return static_cast<int>(entries_.size()); }
  int alphabet() const { return n_; }
  int operator[](int k) const { return entries_[static_cast<std::size_t>(k)]; }
  const std::vector<int>& entries() const { return entries_; }

  /// i|_V for increasing 0-based positions V.
  IndexTuple restrict(std::span<const int> positions) const;

  std::string to_string() const;

  friend bool operator==(const IndexTuple& a, const IndexTuple& b) { return a.entries_ == b.entries_; }

 private:
  std::vector<int> entries_;
  int n_ = 0;
};

/// "5,5,2,5" -> "0,0,1,0". Throws EmptyInput / BadSyntax.
Partition parse_partition(std::string_view text);

/// "1,3,1,2" with entries in [1, n]; n = 0 means unbounded.
IndexTuple parse_tuple(std::string_view text, int n = 0);

bool is_noncrossing(const Partition& p);

/// Smallest common coarsening. Throws SizeMismatch.
Partition join(const Partition& p, const Partition& q);

/// Refinement order: every block of p lies inside a block of q. Throws SizeMismatch.
bool leq(const Partition& p, const Partition& q);

Partition kernel(const IndexTuple& i);

/// Induced partition on increasing 0-based positions, relabelled to [|V|].
Partition restrict(const Partition& p, std::span<const int> positions);

/// Same with 1-based positions as in the external format; throws BadSubset
/// unless V is nonempty, strictly increasing and inside [m].
Partition restrict_one_based(const Partition& p, std::span<const int> positions);

/// All of P(m) in RGS-lexicographic order. Throws OrderTooLarge above cap.
std::vector<Partition> enumerate_partitions(int m, int cap = kDefaultPartitionCap);

/// Partitions of [m] with at most `max_blocks` blocks (the kernels realisable
/// over an alphabet of that size), RGS-lexicographic.
std::vector<Partition> enumerate_partitions_with_at_most(int m, int max_blocks,
                                                         int cap = kDefaultPartitionCap);

/// Concatenation p ⊔ q as a partition of [m1 + m2].
Partition concatenate(const Partition& p, const Partition& q);

/// Smallest-lex tuple with the given kernel: labels + 1.
IndexTuple canonical_tuple(const Partition& p);

}  // namespace freedf

template <>
struct std::hash<freedf::Partition> {
  std::size_t operator()(const freedf::Partition& p) const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (auto l : p.labels()) {
      h ^= l + 1;
      h *= 1099511628211ULL;
    }
    return h ^ static_cast<std::size_t>(p.size());
  }
};
