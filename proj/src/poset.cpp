#include "freedf/poset.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "freedf/error.hpp"

namespace freedf {

FinitePoset::FinitePoset(std::vector<Partition> elements) : elements_(std::move(elements)) {
  for (std::size_t k = 0; k < elements_.size(); ++k) {
    if (k && elements_[k].size() != elements_[0].size()) {
      throw Error(ErrorCode::SizeMismatch, "poset elements must partition the same set");
    }
    index_.emplace(elements_[k], k);
  }
}

std::optional<std::size_t> FinitePoset::index_of(const Partition& p) const {
  if (auto it = index_.find(p); it != index_.end()) return it->second;
  return std::nullopt;
}

const FinitePoset::Column& FinitePoset::column(std::size_t p) const {
  {
    std::lock_guard lock(mutex_);
    if (auto it = columns_.find(p); it != columns_.end()) return *it->second;
  }
  auto col = std::make_unique<Column>();
  col->mu.assign(elements_.size(), Rational(0));
  const Partition& top = elements_[p];
  for (std::size_t s = 0; s < elements_.size(); ++s) {
    if (leq(elements_[s], top)) col->below.push_back(s);
  }
  // Coarser elements first: t > s forces #t < #s, so a stable sort by block
  // count is a linear extension of the reversed order.
  std::vector<std::size_t> order = col->below;
  std::stable_sort(order.begin(), order.end(), [this](std::size_t a, std::size_t b) {
    return elements_[a].num_blocks() < elements_[b].num_blocks();
  });
  // mu(s, p) = -sum_{s < t <= p} mu(t, p)
  for (std::size_t a = 0; a < order.size(); ++a) {
    const std::size_t s = order[a];
    if (s == p) {
      col->mu[s] = 1;
      continue;
    }
    Rational acc = 0;
    for (std::size_t b = 0; b < a; ++b) {
      const std::size_t t = order[b];
      if (elements_[t].num_blocks() < elements_[s].num_blocks() && leq(elements_[s], elements_[t])) {
        acc += col->mu[t];
      }
    }
    col->mu[s] = -acc;
  }
  std::lock_guard lock(mutex_);
  auto [it, inserted] = columns_.try_emplace(p, std::move(col));
  return *it->second;
}

const std::vector<Rational>& FinitePoset::mobius_column(std::size_t p) const { return column(p).mu; }

const std::vector<std::size_t>& FinitePoset::down_set(std::size_t p) const { return column(p).below; }

Rational FinitePoset::mobius(const Partition& s, const Partition& p) const {
  auto si = index_of(s);
  auto pi = index_of(p);
  if (!si || !pi) {
    throw Error(ErrorCode::NotInPoset, "partition " + (si ? p : s).to_string() + " is not in the poset");
  }
  if (!leq(s, p)) {
    throw Error(ErrorCode::NotComparable, s.to_string() + " is not below " + p.to_string());
  }
  return column(*pi).mu[*si];
}

const FinitePoset& category_poset(CategoryId cat, int m) {
  static std::mutex mutex;
  static std::map<std::pair<CategoryId, int>, std::unique_ptr<const FinitePoset>> cache;
  const auto& elements = enumerate_category(cat, m);
  std::lock_guard lock(mutex);
  auto& slot = cache[{cat, m}];
  if (!slot) slot = std::make_unique<const FinitePoset>(elements);
  return *slot;
}

Rational mobius_to_top_full_lattice(const Partition& p) {
  const long b = p.num_blocks();
  if (b == 0) return 1;
  Integer f = factorial(b - 1);
  return Rational((b - 1) % 2 == 0 ? f : Integer(-f));
}

Integer catalan(unsigned k) {
  Integer binom;
  mpz_bin_uiui(binom.get_mpz_t(), 2 * k, k);
  return binom / (k + 1);
}

Partition kreweras_complement(const Partition& p) {
  // Gap k sits just after element k (0-based). Gaps a < b share a block of
  // K(p) exactly when the elements a+1..b form a union of blocks of p.
  const int m = p.size();
  if (m == 0) return Partition();
  std::vector<int> first(static_cast<std::size_t>(p.num_blocks()), m);
  std::vector<int> last(static_cast<std::size_t>(p.num_blocks()), -1);
  for (int k = 0; k < m; ++k) {
    auto b = static_cast<std::size_t>(p.label(k));
    first[b] = std::min(first[b], k);
    last[b] = std::max(last[b], k);
  }
  std::vector<int> labels(static_cast<std::size_t>(m), -1);
  int next = 0;
  for (int a = 0; a < m; ++a) {
    if (labels[static_cast<std::size_t>(a)] >= 0) continue;
    labels[static_cast<std::size_t>(a)] = next;
    for (int b = a + 1; b < m; ++b) {
      bool closed = true;
      for (int k = a + 1; k <= b && closed; ++k) {
        auto blk = static_cast<std::size_t>(p.label(k));
        closed = first[blk] > a && last[blk] <= b;
      }
      if (closed) labels[static_cast<std::size_t>(b)] = next;
    }
    ++next;
  }
  return Partition::from_labels(labels);
}

Rational mobius_to_top_noncrossing(const Partition& p) {
  if (!is_noncrossing(p)) {
    throw Error(ErrorCode::NotInCategory, p.to_string() + " is crossing");
  }
  Rational result = 1;
  for (int size : kreweras_complement(p).block_sizes()) {
    Integer c = catalan(static_cast<unsigned>(size - 1));
    result *= (size - 1) % 2 == 0 ? c : Integer(-c);
  }
  return result;
}

}  // namespace freedf
