#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <tuple>

#include "freedf/definetti.hpp"
#include "freedf/error.hpp"
#include "freedf/weingarten.hpp"
#include "plan.hpp"

namespace freedf {

std::string_view verdict_name(Verdict v) { return v == Verdict::Pass ? "PASS" : "FAIL"; }

namespace detail {

const OrderPlan& order_plan(CategoryId cat, int m, int n) {
  static std::mutex mutex;
  static std::map<std::tuple<CategoryId, int, int>, std::unique_ptr<const OrderPlan>> cache;
  const auto& basis = enumerate_category(cat, m);
  const auto& kc = kernel_classes(m, n);
  std::lock_guard lock(mutex);
  auto& slot = cache[{cat, m, std::min(n, std::max(m, 1))}];
  if (!slot) {
    auto plan = std::make_unique<OrderPlan>();
    plan->basis = &basis;
    plan->classes = &kc.classes;
    plan->above.resize(basis.size());
    plan->below.resize(kc.classes.size());
    for (std::size_t t = 0; t < kc.classes.size(); ++t) {
      for (std::size_t s = 0; s < basis.size(); ++s) {
        if (leq(basis[s], kc.classes[t])) {
          plan->below[t].push_back(s);
          plan->above[s].push_back(t);
        }
      }
    }
    slot = std::move(plan);
  }
  return *slot;
}

std::vector<Rational> class_sums(const FunctionalTable& table, int m) {
  const int n = table.n();
  const auto& classes = kernel_classes(m, n).classes;
  std::vector<Rational> sums(classes.size());
  if (table.representation() == Representation::Kernel) {
    for (std::size_t t = 0; t < classes.size(); ++t) {
      sums[t] = table.at_slot(m, t) * Rational(falling_factorial(n, classes[t].num_blocks()));
    }
  } else {
    const auto& slots = dense_kernel_slots(m, n);
    for (std::size_t s = 0; s < slots.size(); ++s) sums[slots[s]] += table.at_slot(m, s);
  }
  return sums;
}

std::vector<Rational> averaged_from_class_sums(const OrderPlan& plan, CategoryId cat, int m, int n,
                                               const std::vector<Rational>& sums) {
  const std::size_t size = plan.basis->size();
  std::vector<Rational> coeffs(size);
  if (size == 0) return coeffs;
  auto wg = weingarten(cat, m, n);
  std::vector<Rational> s_pi(size);
  for (std::size_t p = 0; p < size; ++p) {
    for (std::size_t t : plan.above[p]) s_pi[p] += sums[t];
  }
  for (std::size_t p = 0; p < size; ++p) {
    if (s_pi[p] == 0) continue;
    for (std::size_t s = 0; s < size; ++s) coeffs[s] += wg->entries(p, s) * s_pi[p];
  }
  return coeffs;
}

}  // namespace detail

CoefficientSlice zero_slice(CategoryId cat, int m) {
  CoefficientSlice slice;
  for (const auto& p : enumerate_category(cat, m)) slice.emplace_hint(slice.end(), p, Rational(0));
  return slice;
}

CoefficientSlice averaged_coefficients(const FunctionalTable& table, CategoryId cat, int m) {
  if (m < 1 || m > table.max_order()) {
    throw Error(ErrorCode::IncompleteTable, "table has no order " + std::to_string(m));
  }
  const auto& plan = detail::order_plan(cat, m, table.n());
  auto coeffs = detail::averaged_from_class_sums(plan, cat, m, table.n(), detail::class_sums(table, m));
  CoefficientSlice slice;
  for (std::size_t s = 0; s < coeffs.size(); ++s) slice.emplace_hint(slice.end(), (*plan.basis)[s], coeffs[s]);
  return slice;
}

namespace {

bool within(const Rational& residual, const Rational& actual, const CheckOptions& options) {
  if (options.mode == ScalarMode::Rational) return residual == 0;
  const double scale = std::max(1.0, std::fabs(actual.get_d()));
  return std::fabs(residual.get_d()) <= options.tolerance * scale;
}

}  // namespace

InvarianceReport check_invariance(const MomentTable& table, CategoryId cat, const CheckOptions& options) {
  if (table.kind() != TableKind::Moments) {
    throw Error(ErrorCode::KindMismatch, "invariance is checked on moment tables");
  }
  InvarianceReport report;
  report.category = cat;
  report.n = table.n();
  report.max_order = table.max_order();
  report.mode = options.mode;
  report.coefficients.category = cat;
  report.coefficients.kind = CoefficientKind::MomentCoefficients;

  std::vector<int> orders = options.orders;
  if (orders.empty()) {
    for (int m = 1; m <= table.max_order(); ++m) orders.push_back(m);
  }
  const int n = table.n();
  for (int m : orders) {
    if (m < 1 || m > table.max_order()) {
      throw Error(ErrorCode::IncompleteTable, "table has no order " + std::to_string(m));
    }
    const auto& plan = detail::order_plan(cat, m, n);
    auto coeffs = detail::averaged_from_class_sums(plan, cat, m, n, detail::class_sums(table, m));
    auto& slice = report.coefficients.orders[m];
    for (std::size_t s = 0; s < coeffs.size(); ++s) slice.emplace_hint(slice.end(), (*plan.basis)[s], coeffs[s]);

    std::vector<Rational> predicted(plan.classes->size());
    for (std::size_t t = 0; t < predicted.size(); ++t) {
      for (std::size_t s : plan.below[t]) predicted[t] += coeffs[s];
    }
    const bool dense = table.representation() == Representation::Dense;
    const std::vector<std::uint32_t>* slots = dense ? &dense_kernel_slots(m, n) : nullptr;
    const std::size_t count = table.entry_count(m);
    Rational residual;
    for (std::size_t s = 0; s < count; ++s) {
      const Rational& actual = table.at_slot(m, s);
      const Rational& expected = predicted[dense ? (*slots)[s] : s];
      residual = actual - expected;
      const bool ok = within(residual, actual, options);
      if (options.record_residuals) report.residuals.push_back({m, table.tuple_at(m, s), residual});
      if (!ok) {
        ++report.failure_count;
        if (report.witnesses.size() < options.max_witnesses) {
          report.witnesses.push_back({m, table.tuple_at(m, s), expected, actual});
        }
        if (options.fail_fast) break;
      }
    }
  }
  report.verdict = report.failure_count == 0 ? Verdict::Pass : Verdict::Fail;
  return report;
}

}  // namespace freedf
