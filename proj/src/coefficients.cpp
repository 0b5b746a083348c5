#include <algorithm>

#include "freedf/definetti.hpp"
#include "freedf/error.hpp"
#include "freedf/matrix.hpp"
#include "freedf/poset.hpp"
#include "plan.hpp"

namespace freedf {

std::string_view coefficient_kind_name(CoefficientKind kind) {
  switch (kind) {
    case CoefficientKind::MomentCoefficients: return "c";
    case CoefficientKind::CumulantCoefficients: return "C";
    case CoefficientKind::RestrictedMoments: return "phi_tilde";
    case CoefficientKind::RestrictedCumulants: return "kappa_tilde";
  }
  return "?";
}

CoefficientKind parse_coefficient_kind(std::string_view name) {
  if (name == "c") return CoefficientKind::MomentCoefficients;
  if (name == "C") return CoefficientKind::CumulantCoefficients;
  if (name == "phi_tilde") return CoefficientKind::RestrictedMoments;
  if (name == "kappa_tilde") return CoefficientKind::RestrictedCumulants;
  throw Error(ErrorCode::SchemaError, "unknown coefficient kind \"" + std::string(name) + "\"");
}

Rational sum_over_c_leq(const CoefficientSlice& slice, const Partition& kernel) {
  Rational sum = 0;
  for (const auto& [p, value] : slice) {
    if (leq(p, kernel)) sum += value;
  }
  return sum;
}

namespace {

// Kernel values of one order, checked for kernel dependence.
std::vector<Rational> kernel_values(const FunctionalTable& table, int m) {
  const auto& classes = kernel_classes(m, table.n()).classes;
  std::vector<Rational> out(classes.size());
  if (table.representation() == Representation::Kernel) {
    for (std::size_t t = 0; t < classes.size(); ++t) out[t] = table.at_slot(m, t);
    return out;
  }
  const auto& slots = dense_kernel_slots(m, table.n());
  std::vector<bool> seen(classes.size(), false);
  for (std::size_t s = 0; s < slots.size(); ++s) {
    const Rational& v = table.at_slot(m, s);
    if (!seen[slots[s]]) {
      out[slots[s]] = v;
      seen[slots[s]] = true;
    } else if (out[slots[s]] != v) {
      throw Error(ErrorCode::NotInvariant, "order " + std::to_string(m) + ": values differ within kernel class " +
                                               classes[slots[s]].to_string());
    }
  }
  return out;
}

SolveResult solve_coefficients(const FunctionalTable& table, CategoryId cat, int m) {
  if (m < 1 || m > table.max_order()) {
    throw Error(ErrorCode::IncompleteTable, "table has no order " + std::to_string(m));
  }
  const int n = table.n();
  const auto& plan = detail::order_plan(cat, m, n);
  const auto& basis = *plan.basis;
  const auto& classes = *plan.classes;
  const auto values = kernel_values(table, m);

  SolveResult result;
  result.unknowns = basis.size();
  std::vector<Rational> coeffs(basis.size());
  const bool basis_realisable =
      std::all_of(basis.begin(), basis.end(), [n](const Partition& p) { return p.num_blocks() <= n; });

  if (basis_realisable) {
    const auto& index = kernel_classes(m, n).index;
    const auto& poset = category_poset(cat, m);
    for (std::size_t p = 0; p < basis.size(); ++p) {
      const auto& mu = poset.mobius_column(p);
      for (std::size_t s : poset.down_set(p)) {
        coeffs[p] += values[index.at(basis[s])] * mu[s];
      }
    }
    result.rank = basis.size();
  } else {
    RationalMatrix a(classes.size(), basis.size());
    for (std::size_t t = 0; t < classes.size(); ++t) {
      for (std::size_t s : plan.below[t]) a(t, s) = 1;
    }
    auto solved = solve_exact(a, values);
    if (!solved.consistent) {
      throw Error(ErrorCode::NotInvariant,
                  "order " + std::to_string(m) + ": no coefficients reproduce the kernel values");
    }
    coeffs = std::move(solved.solution);
    result.rank = solved.rank;
    result.unique = solved.rank == basis.size();
    result.by_mobius = false;
  }

  for (std::size_t t = 0; t < classes.size(); ++t) {
    Rational predicted = 0;
    for (std::size_t s : plan.below[t]) predicted += coeffs[s];
    if (predicted != values[t]) {
      throw Error(ErrorCode::NotInvariant, "order " + std::to_string(m) + ": kernel class " +
                                               classes[t].to_string() + " is not reproduced");
    }
  }
  for (std::size_t s = 0; s < basis.size(); ++s) {
    result.coefficients.emplace_hint(result.coefficients.end(), basis[s], coeffs[s]);
  }
  return result;
}

const CoefficientSlice& lower_slice(const CoefficientFamily& family, int order) {
  auto it = family.orders.find(order);
  if (it == family.orders.end()) {
    throw Error(ErrorCode::MissingLowerOrder, "coefficient family lacks order " + std::to_string(order));
  }
  return it->second;
}

const Rational& lookup(const CoefficientSlice& slice, const Partition& p) {
  auto it = slice.find(p);
  if (it == slice.end()) {
    throw Error(ErrorCode::MissingLowerOrder, "coefficient family lacks partition " + p.to_string());
  }
  return it->second;
}

template <typename Weight>
CoefficientSlice convert_slice(const CoefficientFamily& family, int m, Weight weight) {
  CoefficientSlice out;
  const auto& nc = enumerate_noncrossing(m);
  for (const auto& sigma : enumerate_category(family.category, m)) {
    Rational sum = 0;
    for (const auto& pi : nc) {
      if (!leq(sigma, pi)) continue;
      Rational product = weight(pi);
      for (const auto& block : pi.blocks()) {
        product *= lookup(lower_slice(family, static_cast<int>(block.size())), restrict(sigma, block));
        if (product == 0) break;
      }
      sum += product;
    }
    out.emplace_hint(out.end(), sigma, sum);
  }
  return out;
}

}  // namespace

SolveResult solve_moment_coefficients(const MomentTable& moments, CategoryId cat, int m) {
  if (moments.kind() != TableKind::Moments) throw Error(ErrorCode::KindMismatch, "expected a moment table");
  return solve_coefficients(moments, cat, m);
}

SolveResult solve_cumulant_coefficients(const CumulantTable& cumulants, CategoryId cat, int m) {
  if (cumulants.kind() != TableKind::Cumulants) throw Error(ErrorCode::KindMismatch, "expected a cumulant table");
  return solve_coefficients(cumulants, cat, m);
}

CoefficientFamily solve_all(const FunctionalTable& table, CategoryId cat) {
  CoefficientFamily family;
  family.category = cat;
  family.kind = table.kind() == TableKind::Moments ? CoefficientKind::MomentCoefficients
                                                   : CoefficientKind::CumulantCoefficients;
  for (int m = 1; m <= table.max_order(); ++m) family.orders[m] = solve_coefficients(table, cat, m).coefficients;
  return family;
}

CoefficientSlice moment_coeffs_from_cumulant_coeffs(const CoefficientFamily& cumulant_coeffs, int m) {
  if (cumulant_coeffs.kind != CoefficientKind::CumulantCoefficients) {
    throw Error(ErrorCode::KindMismatch, "expected cumulant coefficients C");
  }
  return convert_slice(cumulant_coeffs, m, [](const Partition&) { return Rational(1); });
}

CoefficientSlice cumulant_coeffs_from_moment_coeffs(const CoefficientFamily& moment_coeffs, int m) {
  if (moment_coeffs.kind != CoefficientKind::MomentCoefficients) {
    throw Error(ErrorCode::KindMismatch, "expected moment coefficients c");
  }
  return convert_slice(moment_coeffs, m, [](const Partition& pi) { return mobius_to_top_noncrossing(pi); });
}

CoefficientFamily convert_coefficients(const CoefficientFamily& family) {
  CoefficientFamily out;
  out.category = family.category;
  const bool to_moments = family.kind == CoefficientKind::CumulantCoefficients;
  if (!to_moments && family.kind != CoefficientKind::MomentCoefficients) {
    throw Error(ErrorCode::KindMismatch, "only c and C families convert");
  }
  out.kind = to_moments ? CoefficientKind::MomentCoefficients : CoefficientKind::CumulantCoefficients;
  for (const auto& [m, slice] : family.orders) {
    out.orders[m] = to_moments ? moment_coeffs_from_cumulant_coeffs(family, m)
                               : cumulant_coeffs_from_moment_coeffs(family, m);
  }
  return out;
}

}  // namespace freedf
