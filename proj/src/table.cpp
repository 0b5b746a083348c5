#include "freedf/table.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>

#include "freedf/error.hpp"

namespace freedf {

std::string_view kind_name(TableKind kind) {
  return kind == TableKind::Moments ? "moments" : "cumulants";
}

std::string_view representation_name(Representation repr) {
  return repr == Representation::Dense ? "dense" : "kernel";
}

const KernelClasses& kernel_classes(int m, int n) {
  static std::mutex mutex;
  static std::map<std::pair<int, int>, std::unique_ptr<const KernelClasses>> cache;
  const int bound = std::min(n, std::max(m, 1));
  std::lock_guard lock(mutex);
  auto& slot = cache[{m, bound}];
  if (!slot) {
    auto kc = std::make_unique<KernelClasses>();
    kc->classes = enumerate_partitions_with_at_most(m, bound);
    for (std::size_t k = 0; k < kc->classes.size(); ++k) kc->index.emplace(kc->classes[k], k);
    slot = std::move(kc);
  }
  return *slot;
}

const std::vector<std::uint32_t>& dense_kernel_slots(int m, int n) {
  static std::mutex mutex;
  static std::map<std::pair<int, int>, std::unique_ptr<const std::vector<std::uint32_t>>> cache;
  const auto& kc = kernel_classes(m, n);
  std::lock_guard lock(mutex);
  auto& slot = cache[{m, n}];
  if (!slot) {
    std::vector<std::uint32_t> out;
    std::vector<int> digits(static_cast<std::size_t>(m), 1);
    long long total = 1;
    for (int k = 0; k < m; ++k) total *= n;
    out.reserve(static_cast<std::size_t>(total));
    for (long long s = 0; s < total; ++s) {
      out.push_back(static_cast<std::uint32_t>(kc.index.at(Partition::from_labels(digits))));
      for (int k = m - 1; k >= 0; --k) {
        if (++digits[static_cast<std::size_t>(k)] <= n) break;
        digits[static_cast<std::size_t>(k)] = 1;
      }
    }
    slot = std::make_unique<const std::vector<std::uint32_t>>(std::move(out));
  }
  return *slot;
}

std::size_t dense_slot(const IndexTuple& i, int n) {
  std::size_t slot = 0;
  for (int e : i.entries()) slot = slot * static_cast<std::size_t>(n) + static_cast<std::size_t>(e - 1);
  return slot;
}

FunctionalTable::FunctionalTable(TableKind kind, Representation repr, int n, int max_order)
    : kind_(kind), repr_(repr), n_(n), max_order_(max_order) {
  if (n < 1) throw Error(ErrorCode::InvalidDimension, "table needs n >= 1");
  if (max_order < 0 || max_order > kMaxOrder) {
    throw Error(ErrorCode::OrderTooLarge, "max_order " + std::to_string(max_order) + " out of range");
  }
  values_.resize(static_cast<std::size_t>(max_order) + 1);
  for (int m = 1; m <= max_order; ++m) {
    std::size_t count = 0;
    if (repr == Representation::Dense) {
      long double total = 1;
      for (int k = 0; k < m; ++k) total *= n;
      if (total > static_cast<long double>(kDenseEntryLimit)) {
        throw Error(ErrorCode::DenseTooLarge, "dense table with n^" + std::to_string(m) +
                                                  " entries exceeds the limit; use the kernel representation");
      }
      count = static_cast<std::size_t>(total);
    } else {
      count = kernel_classes(m, n).classes.size();
    }
    values_[static_cast<std::size_t>(m)].assign(count, Rational(0));
  }
}

void FunctionalTable::check_order(int m) const {
  if (m < 1 || m > max_order_) {
    throw Error(ErrorCode::OrderExceeded,
                "order " + std::to_string(m) + " outside table range 1.." + std::to_string(max_order_));
  }
}

std::size_t FunctionalTable::entry_count(int m) const {
  check_order(m);
  return values_[static_cast<std::size_t>(m)].size();
}

IndexTuple FunctionalTable::tuple_at(int m, std::size_t slot) const {
  check_order(m);
  if (repr_ == Representation::Kernel) {
    const Partition& p = kernel_classes(m, n_).classes.at(slot);
    std::vector<int> entries;
    for (int k = 0; k < m; ++k) entries.push_back(p.label(k) + 1);
    return IndexTuple(std::move(entries), n_);
  }
  std::vector<int> entries(static_cast<std::size_t>(m));
  for (int k = m - 1; k >= 0; --k) {
    entries[static_cast<std::size_t>(k)] = static_cast<int>(slot % static_cast<std::size_t>(n_)) + 1;
    slot /= static_cast<std::size_t>(n_);
  }
  return IndexTuple(std::move(entries), n_);
}

std::size_t FunctionalTable::slot_of(const IndexTuple& i) const {
  check_order(i.size());
  for (int e : i.entries()) {
    if (e < 1 || e > n_) {
      throw Error(ErrorCode::BadTuple, "tuple " + i.to_string() + " has entries outside [1," + std::to_string(n_) + "]");
    }
  }
  if (repr_ == Representation::Dense) return dense_slot(i, n_);
  return kernel_classes(i.size(), n_).index.at(kernel(i));
}

const Rational& FunctionalTable::at_slot(int m, std::size_t slot) const {
  check_order(m);
  return values_[static_cast<std::size_t>(m)].at(slot);
}

Rational& FunctionalTable::at_slot(int m, std::size_t slot) {
  check_order(m);
  return values_[static_cast<std::size_t>(m)].at(slot);
}

Rational FunctionalTable::value(const IndexTuple& i) const {
  if (i.size() == 0) return kind_ == TableKind::Moments ? 1 : 0;
  return at_slot(i.size(), slot_of(i));
}

void FunctionalTable::set(const IndexTuple& i, Rational v) {
  if (i.size() == 0) throw Error(ErrorCode::OrderExceeded, "order 0 is fixed");
  at_slot(i.size(), slot_of(i)) = std::move(v);
}

Rational FunctionalTable::kernel_value(const Partition& p) const {
  if (p.size() == 0) return kind_ == TableKind::Moments ? 1 : 0;
  if (p.num_blocks() > n_) {
    throw Error(ErrorCode::BadTuple, "kernel " + p.to_string() + " needs more than n=" +
                                         std::to_string(n_) + " distinct indices");
  }
  return value(IndexTuple(std::vector<int>(canonical_tuple(p).entries()), n_));
}

bool FunctionalTable::kernel_representable() const {
  if (repr_ == Representation::Kernel) return true;
  for (int m = 1; m <= max_order_; ++m) {
    const auto& slots = dense_kernel_slots(m, n_);
    const auto& kc = kernel_classes(m, n_);
    std::vector<const Rational*> seen(kc.classes.size(), nullptr);
    const auto& vals = values_[static_cast<std::size_t>(m)];
    for (std::size_t s = 0; s < vals.size(); ++s) {
      auto& ref = seen[slots[s]];
      if (!ref) ref = &vals[s];
      else if (*ref != vals[s]) return false;
    }
  }
  return true;
}

FunctionalTable FunctionalTable::to_kernel() const {
  if (repr_ == Representation::Kernel) return *this;
  if (!kernel_representable()) {
    throw Error(ErrorCode::NotKernelRepresentable, "table values are not constant on kernel classes");
  }
  FunctionalTable out(kind_, Representation::Kernel, n_, max_order_);
  for (int m = 1; m <= max_order_; ++m) {
    const auto& slots = dense_kernel_slots(m, n_);
    const auto& vals = values_[static_cast<std::size_t>(m)];
    for (std::size_t s = 0; s < vals.size(); ++s) out.values_[static_cast<std::size_t>(m)][slots[s]] = vals[s];
  }
  return out;
}

FunctionalTable FunctionalTable::to_dense() const {
  if (repr_ == Representation::Dense) return *this;
  FunctionalTable out(kind_, Representation::Dense, n_, max_order_);
  for (int m = 1; m <= max_order_; ++m) {
    const auto& slots = dense_kernel_slots(m, n_);
    auto& dst = out.values_[static_cast<std::size_t>(m)];
    for (std::size_t s = 0; s < dst.size(); ++s) dst[s] = values_[static_cast<std::size_t>(m)][slots[s]];
  }
  return out;
}

bool FunctionalTable::same_values(const FunctionalTable& other) const {
  if (kind_ != other.kind_ || n_ != other.n_ || max_order_ != other.max_order_) return false;
  if (repr_ == other.repr_) return values_ == other.values_;
  const FunctionalTable& dense = repr_ == Representation::Dense ? *this : other;
  const FunctionalTable& kern = repr_ == Representation::Dense ? other : *this;
  for (int m = 1; m <= max_order_; ++m) {
    const auto& slots = dense_kernel_slots(m, n_);
    const auto& dv = dense.values_[static_cast<std::size_t>(m)];
    const auto& kv = kern.values_[static_cast<std::size_t>(m)];
    for (std::size_t s = 0; s < dv.size(); ++s) {
      if (dv[s] != kv[slots[s]]) return false;
    }
  }
  return true;
}

}  // namespace freedf
