#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "freedf/partition.hpp"
#include "freedf/rational.hpp"

namespace freedf {

enum class TableKind { Moments, Cumulants };
enum class Representation { Dense, Kernel };

std::string_view kind_name(TableKind kind);
std::string_view representation_name(Representation repr);

/// Largest number of dense entries a single table may hold.
inline constexpr long long kDenseEntryLimit = 10'000'000;

/// D_n(m): the partitions of [m] with at most n blocks, in RGS-lex order,
/// together with a reverse index. Shared and immutable.
struct KernelClasses {
  std::vector<Partition> classes;
  std::unordered_map<Partition, std::size_t> index;
};
const KernelClasses& kernel_classes(int m, int n);

/// For each dense slot of [n]^m, the index of its kernel in kernel_classes(m, n).
const std::vector<std::uint32_t>& dense_kernel_slots(int m, int n);

/// Values of a functional on words x_{i1} ... x_{im} over n variables, for
/// every order 1..max_order. Dense tables hold one value per tuple in [n]^m
/// (tuples in lexicographic order); kernel tables hold one value per kernel
/// class and are only meaningful when values depend on ker(i) alone.
/// Order 0 is implicit: 1 for moments, 0 for cumulants.
class FunctionalTable {
 public:
  FunctionalTable() = default;
  /// Zero-filled table. Throws DenseTooLarge for dense tables past the limit.
  FunctionalTable(TableKind kind, Representation repr, int n, int max_order);

  TableKind kind() const { return kind_; }
  Representation representation() const { return repr_; }
  int n() const { return n_; }
  int max_order() const { return max_order_; }

  /// Number of stored entries at order m.
  std::size_t entry_count(int m) const;
  /// The tuple stored at slot `slot` of order m (dense: lexicographic tuple;
  /// kernel: canonical representative of the class).
  IndexTuple tuple_at(int m, std::size_t slot) const;
  std::size_t slot_of(const IndexTuple& i) const;

  const Rational& at_slot(int m, std::size_t slot) const;
  Rational& at_slot(int m, std::size_t slot);

  /// Throws OrderExceeded past max_order and BadTuple for entries above n.
  Rational value(const IndexTuple& i) const;
  void set(const IndexTuple& i, Rational v);

  /// Value at the canonical representative of `p`; requires #p <= n.
  Rational kernel_value(const Partition& p) const;

  /// True when every dense value depends on its tuple only through the kernel.
  bool kernel_representable() const;
  /// Throws NotKernelRepresentable if the values are not kernel-constant.
  FunctionalTable to_kernel() const;
  FunctionalTable to_dense() const;

  /// Same kind, n, order and value on every tuple, whatever the representation.
  bool same_values(const FunctionalTable& other) const;

  friend bool operator==(const FunctionalTable&, const FunctionalTable&) = default;

 private:
  void check_order(int m) const;

  TableKind kind_ = TableKind::Moments;
  Representation repr_ = Representation::Dense;
  int n_ = 0;
  int max_order_ = 0;
  std::vector<std::vector<Rational>> values_;  // index 0 unused
};

using MomentTable = FunctionalTable;
using CumulantTable = FunctionalTable;

/// Lexicographic position of a tuple in [n]^m.
std::size_t dense_slot(const IndexTuple& i, int n);

}  // namespace freedf
