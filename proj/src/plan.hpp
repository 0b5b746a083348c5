#pragma once

#include <vector>

#include "freedf/category.hpp"
#include "freedf/rational.hpp"
#include "freedf/table.hpp"

namespace freedf::detail {

// Incidence between C(m) and the kernel classes D_n(m) at one order.
struct OrderPlan {
  const std::vector<Partition>* basis = nullptr;    // C(m)
  const std::vector<Partition>* classes = nullptr;  // D_n(m)
  std::vector<std::vector<std::size_t>> above;      // per basis element: classes t >= it
  std::vector<std::vector<std::size_t>> below;      // per class: basis elements <= it
};

const OrderPlan& order_plan(CategoryId cat, int m, int n);

// Sum of the table over each kernel class of order m.
std::vector<Rational> class_sums(const FunctionalTable& table, int m);

std::vector<Rational> averaged_from_class_sums(const OrderPlan& plan, CategoryId cat, int m, int n,
                                               const std::vector<Rational>& sums);

}  // namespace freedf::detail
