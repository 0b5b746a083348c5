#include <random>

#include "freedf/cumulants.hpp"
#include "freedf/definetti.hpp"
#include "freedf/error.hpp"
#include "freedf/poset.hpp"

namespace freedf {

InvariantModel model_from_cumulant_coefficients(const CoefficientFamily& cumulant_coeffs, int n, int max_order) {
  if (cumulant_coeffs.kind != CoefficientKind::CumulantCoefficients) {
    throw Error(ErrorCode::KindMismatch, "expected cumulant coefficients C");
  }
  InvariantModel model;
  model.cumulant_coefficients = cumulant_coeffs;
  model.cumulants = CumulantTable(TableKind::Cumulants, Representation::Kernel, n, max_order);
  for (int m = 1; m <= max_order; ++m) {
    auto it = cumulant_coeffs.orders.find(m);
    if (it == cumulant_coeffs.orders.end()) continue;
    const auto& classes = kernel_classes(m, n).classes;
    for (std::size_t t = 0; t < classes.size(); ++t) {
      model.cumulants.at_slot(m, t) = sum_over_c_leq(it->second, classes[t]);
    }
  }
  model.moments = moments_from_cumulants(model.cumulants);
  return model;
}

InvariantModel generate_invariant_model(CategoryId cat, int n, int max_order, std::uint64_t seed) {
  const int min_n = cat == CategoryId::OPlus ? 2 : 4;
  if (n < min_n) {
    throw Error(ErrorCode::InvalidDimension, "generated models for " + std::string(category_name(cat)) +
                                                 " need n >= " + std::to_string(min_n));
  }
  std::mt19937_64 rng(seed);
  CoefficientFamily family;
  family.category = cat;
  family.kind = CoefficientKind::CumulantCoefficients;
  for (int m = 1; m <= max_order; ++m) {
    auto& slice = family.orders[m];
    for (const auto& p : enumerate_category(cat, m)) {
      const long a = static_cast<long>(rng() % 19) - 9;
      const long b = static_cast<long>(rng() % 4) + 1;
      Rational value(a, b);
      value.canonicalize();
      slice.emplace_hint(slice.end(), p, value);
    }
  }
  return model_from_cumulant_coefficients(family, n, max_order);
}

MomentTable semicircular_model(int n, int max_order) {
  MomentTable table(TableKind::Moments, Representation::Kernel, n, max_order);
  for (int m = 2; m <= max_order; m += 2) {
    const auto& pairings = enumerate_category(CategoryId::OPlus, m);
    const auto& classes = kernel_classes(m, n).classes;
    for (std::size_t t = 0; t < classes.size(); ++t) {
      long count = 0;
      for (const auto& p : pairings) count += leq(p, classes[t]) ? 1 : 0;
      table.at_slot(m, t) = count;
    }
  }
  return table;
}

Rational normalized_block_sum(const MomentTable& table, const Partition& p, int n) {
  if (table.kind() != TableKind::Moments) throw Error(ErrorCode::KindMismatch, "expected a moment table");
  if (n < 1) throw Error(ErrorCode::InvalidDimension, "dimension n must be at least 1");
  if (!category_contains(CategoryId::OPlus, p)) {
    throw Error(ErrorCode::NotInCategory, p.to_string() + " is not a non-crossing pairing");
  }
  const int m = p.size();
  if (m > table.max_order()) {
    throw Error(ErrorCode::OrderExceeded, "order " + std::to_string(m) + " exceeds table max_order");
  }
  if (table.representation() == Representation::Dense && !table.kernel_representable()) {
    throw Error(ErrorCode::NotKernelRepresentable, "block sums need a kernel-representable table");
  }
  Rational sum = 0;
  for (const auto& tau : kernel_classes(m, n).classes) {
    if (!leq(p, tau)) continue;
    if (tau.num_blocks() > table.n()) {
      throw Error(ErrorCode::IncompleteTable, "kernel " + tau.to_string() + " needs more than n = " +
                                                  std::to_string(table.n()) + " variables");
    }
    sum += Rational(falling_factorial(n, tau.num_blocks())) * table.kernel_value(tau);
  }
  return sum / Rational(power(static_cast<long>(n), static_cast<unsigned>(m / 2)));
}

CoefficientFamily restrict_to_category(const FunctionalTable& table, CategoryId cat) {
  CoefficientFamily family;
  family.category = cat;
  family.kind = table.kind() == TableKind::Moments ? CoefficientKind::RestrictedMoments
                                                   : CoefficientKind::RestrictedCumulants;
  for (int m = 1; m <= table.max_order(); ++m) {
    const auto& basis = enumerate_category(cat, m);
    bool realisable = true;
    for (const auto& p : basis) realisable = realisable && p.num_blocks() <= table.n();
    if (!realisable) break;
    auto& slice = family.orders[m];
    for (const auto& p : basis) slice.emplace_hint(slice.end(), p, table.kernel_value(p));
  }
  return family;
}

Rational reconstruct_infinite(const CoefficientFamily& restricted, CategoryId cat, const IndexTuple& i) {
  const bool moments = restricted.kind == CoefficientKind::RestrictedMoments;
  if (!moments && restricted.kind != CoefficientKind::RestrictedCumulants) {
    throw Error(ErrorCode::KindMismatch, "reconstruction needs restricted moments or cumulants");
  }
  if (restricted.category != cat) {
    throw Error(ErrorCode::KindMismatch, "restriction was taken for " + std::string(category_name(restricted.category)));
  }
  const int m = i.size();
  if (m == 0) return moments ? 1 : 0;
  auto it = restricted.orders.find(m);
  if (it == restricted.orders.end()) {
    throw Error(ErrorCode::IncompleteRestriction, "no restricted values at order " + std::to_string(m));
  }
  const auto& slice = it->second;
  const auto& basis = enumerate_category(cat, m);
  if (slice.size() != basis.size()) {
    throw Error(ErrorCode::IncompleteRestriction, "restricted values at order " + std::to_string(m) +
                                                      " do not cover the category");
  }
  std::vector<const Rational*> values(basis.size());
  for (std::size_t s = 0; s < basis.size(); ++s) {
    auto found = slice.find(basis[s]);
    if (found == slice.end()) {
      throw Error(ErrorCode::IncompleteRestriction, "missing restricted value for " + basis[s].to_string());
    }
    values[s] = &found->second;
  }
  const Partition ker = kernel(i);
  const auto& poset = category_poset(cat, m);
  Rational sum = 0;
  for (std::size_t p = 0; p < basis.size(); ++p) {
    if (!leq(basis[p], ker)) continue;
    const auto& mu = poset.mobius_column(p);
    for (std::size_t s : poset.down_set(p)) sum += *values[s] * mu[s];
  }
  return sum;
}

}  // namespace freedf
