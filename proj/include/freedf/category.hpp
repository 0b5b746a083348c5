#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "freedf/partition.hpp"

namespace freedf {

/// The categories of non-crossing partitions behind O_n^+, S_n^+, H_n^+, B_n^+.
enum class CategoryId { OPlus, SPlus, HPlus, BPlus };

inline constexpr CategoryId kAllCategories[] = {CategoryId::OPlus, CategoryId::SPlus,
                                                CategoryId::HPlus, CategoryId::BPlus};

/// "o+", "s+", "h+", "b+", case-insensitive. Throws UnknownCategory.
CategoryId parse_category(std::string_view name);
std::string_view category_name(CategoryId cat);

/// Enumeration cap for the category: pairings go further than the rest.
int category_cap(CategoryId cat);

/// O+: non-crossing pairings. S+: all non-crossing. H+: non-crossing with
/// even blocks. B+: non-crossing with blocks of size at most two.
bool category_contains(CategoryId cat, const Partition& p);

/// C(m) in RGS-lexicographic order. C(0) is the single empty partition.
/// Results are memoised; the returned list is shared and immutable.
const std::vector<Partition>& enumerate_category(CategoryId cat, int m);

/// NC(m), identical to the S+ category.
inline const std::vector<Partition>& enumerate_noncrossing(int m) {
  return enumerate_category(CategoryId::SPlus, m);
}

/// C_<=(i) = { p in C(m) : p <= ker(i) }, RGS-lexicographic.
std::vector<Partition> c_leq(CategoryId cat, const IndexTuple& i);

/// Same, for a kernel given directly.
std::vector<Partition> c_leq(CategoryId cat, const Partition& kernel);

}  // namespace freedf
