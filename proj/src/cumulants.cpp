#include "freedf/cumulants.hpp"

#include <map>
#include <memory>
#include <mutex>

#include "freedf/category.hpp"
#include "freedf/error.hpp"
#include "freedf/poset.hpp"

namespace freedf {

namespace {

// NC(m) with its blocks and mu_{NC(m)}(p, 1_m), shared by every tuple.
struct NoncrossingPlan {
  struct Entry {
    std::vector<std::vector<int>> blocks;
    Rational mobius_to_top;
  };
  std::vector<Entry> entries;
};

const NoncrossingPlan& noncrossing_plan(int m) {
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<const NoncrossingPlan>> cache;
  const auto& nc = enumerate_noncrossing(m);
  std::lock_guard lock(mutex);
  auto& slot = cache[m];
  if (!slot) {
    auto plan = std::make_unique<NoncrossingPlan>();
    for (const auto& p : nc) plan->entries.push_back({p.blocks(), mobius_to_top_noncrossing(p)});
    slot = std::move(plan);
  }
  return *slot;
}

void require_order(const FunctionalTable& t, int m) {
  if (m > t.max_order()) {
    throw Error(ErrorCode::OrderExceeded,
                "order " + std::to_string(m) + " exceeds table max_order " + std::to_string(t.max_order()));
  }
}

void require_kind(const FunctionalTable& t, TableKind kind) {
  if (t.kind() != kind) {
    throw Error(ErrorCode::KindMismatch, "expected a " + std::string(kind_name(kind)) + " table, got " +
                                             std::string(kind_name(t.kind())));
  }
}

Rational block_product(const FunctionalTable& t, const std::vector<std::vector<int>>& blocks,
                       const IndexTuple& i) {
  Rational product = 1;
  for (const auto& block : blocks) {
    product *= t.value(i.restrict(block));
    if (product == 0) break;
  }
  return product;
}

Rational moment_from_cumulants(const CumulantTable& c, const IndexTuple& i) {
  Rational sum = 0;
  for (const auto& e : noncrossing_plan(i.size()).entries) sum += block_product(c, e.blocks, i);
  return sum;
}

Rational cumulant_from_moments(const MomentTable& mt, const IndexTuple& i) {
  Rational sum = 0;
  for (const auto& e : noncrossing_plan(i.size()).entries) {
    sum += block_product(mt, e.blocks, i) * e.mobius_to_top;
  }
  return sum;
}

template <typename F>
FunctionalTable transform(const FunctionalTable& in, TableKind out_kind, F per_tuple) {
  FunctionalTable out(out_kind, in.representation(), in.n(), in.max_order());
  for (int m = 1; m <= in.max_order(); ++m) {
    const std::size_t count = in.entry_count(m);
    for (std::size_t s = 0; s < count; ++s) out.at_slot(m, s) = per_tuple(in, in.tuple_at(m, s));
  }
  return out;
}

}  // namespace

Rational kappa_pi(const CumulantTable& cumulants, const Partition& p, const IndexTuple& i) {
  if (p.size() != i.size()) throw Error(ErrorCode::SizeMismatch, "partition and tuple sizes differ");
  require_order(cumulants, p.size());
  return block_product(cumulants, p.blocks(), i);
}

Rational phi_pi(const MomentTable& moments, const Partition& p, const IndexTuple& i) {
  if (p.size() != i.size()) throw Error(ErrorCode::SizeMismatch, "partition and tuple sizes differ");
  require_order(moments, p.size());
  return block_product(moments, p.blocks(), i);
}

MomentTable moments_from_cumulants(const CumulantTable& cumulants) {
  require_kind(cumulants, TableKind::Cumulants);
  return transform(cumulants, TableKind::Moments, moment_from_cumulants);
}

CumulantTable cumulants_from_moments(const MomentTable& moments) {
  require_kind(moments, TableKind::Moments);
  return transform(moments, TableKind::Cumulants, cumulant_from_moments);
}

Rational cumulant_at(const MomentTable& moments, const IndexTuple& i) {
  require_kind(moments, TableKind::Moments);
  require_order(moments, i.size());
  if (i.size() == 0) return 0;
  return cumulant_from_moments(moments, i);
}

}  // namespace freedf
