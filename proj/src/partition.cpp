#include "freedf/partition.hpp"

#include <algorithm>
#include <numeric>

#include "freedf/error.hpp"

namespace freedf {

namespace {

std::vector<int> split_ints(std::string_view text, std::string_view what) {
  std::vector<int> out;
  if (text.find_first_not_of(" \t\r\n") == std::string_view::npos) {
    throw Error(ErrorCode::EmptyInput, std::string(what) + " is empty");
  }
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view field = text.substr(start, comma - start);
    while (!field.empty() && field.front() == ' ') field.remove_prefix(1);
    while (!field.empty() && field.back() == ' ') field.remove_suffix(1);
    if (field.empty() || field.size() > 6 ||
        !std::all_of(field.begin(), field.end(), [](char c) { return c >= '0' && c <= '9'; })) {
      throw Error(ErrorCode::BadSyntax,
                  "bad " + std::string(what) + " field \"" + std::string(field) + "\"");
    }
    out.push_back(std::stoi(std::string(field)));
    start = comma + 1;
  }
  return out;
}

void check_order(int m, int cap) {
  if (m < 0) throw Error(ErrorCode::OrderTooLarge, "negative order");
  if (m > cap || m > kMaxOrder) {
    throw Error(ErrorCode::OrderTooLarge,
                "order " + std::to_string(m) + " exceeds cap " + std::to_string(std::min(cap, kMaxOrder)));
  }
}

}  // namespace

Partition Partition::from_labels(std::span<const int> labels) {
  if (labels.size() > static_cast<std::size_t>(kMaxOrder)) {
    throw Error(ErrorCode::OrderTooLarge, "partition size exceeds " + std::to_string(kMaxOrder));
  }
  Partition p;
  p.labels_.reserve(labels.size());
  std::vector<std::pair<int, int>> seen;  // raw label -> canonical label
  for (int raw : labels) {
    if (raw < 0) throw Error(ErrorCode::BadSyntax, "negative block label");
    auto it = std::find_if(seen.begin(), seen.end(), [raw](const auto& e) { return e.first == raw; });
    if (it == seen.end()) {
      seen.emplace_back(raw, static_cast<int>(seen.size()));
      p.labels_.push_back(static_cast<std::uint8_t>(seen.size() - 1));
    } else {
      p.labels_.push_back(static_cast<std::uint8_t>(it->second));
    }
  }
  p.blocks_ = static_cast<int>(seen.size());
  return p;
}

Partition Partition::singletons(int m) {
  std::vector<int> labels(static_cast<std::size_t>(m));
  std::iota(labels.begin(), labels.end(), 0);
  return from_labels(labels);
}

Partition Partition::one(int m) {
  std::vector<int> labels(static_cast<std::size_t>(m), 0);
  return from_labels(labels);
}

std::vector<std::vector<int>> Partition::blocks() const {
  std::vector<std::vector<int>> out(static_cast<std::size_t>(blocks_));
  for (int k = 0; k < size(); ++k) out[labels_[static_cast<std::size_t>(k)]].push_back(k);
  return out;
}

std::vector<int> Partition::block_sizes() const {
  std::vector<int> sizes(static_cast<std::size_t>(blocks_), 0);
  for (auto l : labels_) ++sizes[l];
  return sizes;
}

std::string Partition::to_string() const {
  std::string s;
  for (std::size_t k = 0; k < labels_.size(); ++k) {
    if (k) s += ',';
    s += std::to_string(labels_[k]);
  }
  return s;
}

std::string Partition::to_block_string() const {
  std::string s = "{";
  auto bs = blocks();
  for (std::size_t b = 0; b < bs.size(); ++b) {
    if (b) s += ',';
    s += '{';
    for (std::size_t k = 0; k < bs[b].size(); ++k) {
      if (k) s += ',';
      s += std::to_string(bs[b][k] + 1);
    }
    s += '}';
  }
  return s + "}";
}

IndexTuple::IndexTuple(std::vector<int> entries, int n) : entries_(std::move(entries)), n_(n) {
  if (entries_.size() > static_cast<std::size_t>(kMaxOrder)) {
    throw Error(ErrorCode::OrderTooLarge, "tuple length exceeds " + std::to_string(kMaxOrder));
  }
  for (int e : entries_) {
    if (e < 1 || e > n_) {
      throw Error(ErrorCode::BadTuple,
                  "tuple entry " + std::to_string(e) + " outside [1," + std::to_string(n_) + "]");
    }
  }
}

IndexTuple::IndexTuple(std::vector<int> entries)
    : IndexTuple(entries, entries.empty() ? 0 : std::max(1, *std::max_element(entries.begin(), entries.end()))) {}

IndexTuple IndexTuple::restrict(std::span<const int> positions) const {
  std::vector<int> out;
  out.reserve(positions.size());
  for (int k : positions) out.push_back(entries_[static_cast<std::size_t>(k)]);
  return IndexTuple(std::move(out), n_);
}

std::string IndexTuple::to_string() const {
  std::string s;
  for (std::size_t k = 0; k < entries_.size(); ++k) {
    if (k) s += ',';
    s += std::to_string(entries_[k]);
  }
  return s;
}

Partition parse_partition(std::string_view text) {
  return Partition::from_labels(split_ints(text, "partition"));
}

IndexTuple parse_tuple(std::string_view text, int n) {
  auto entries = split_ints(text, "tuple");
  if (n == 0) return IndexTuple(std::move(entries));
  return IndexTuple(std::move(entries), n);
}

bool is_noncrossing(const Partition& p) {
  // Each block is "open" from its first to its last element; revisiting a
  // block that is not on top of the stack of open blocks is a crossing.
  const int m = p.size();
  std::vector<int> last(static_cast<std::size_t>(p.num_blocks()), -1);
  for (int k = 0; k < m; ++k) last[static_cast<std::size_t>(p.label(k))] = k;
  std::vector<int> open;
  std::vector<bool> started(static_cast<std::size_t>(p.num_blocks()), false);
  for (int k = 0; k < m; ++k) {
    int b = p.label(k);
    if (!started[static_cast<std::size_t>(b)]) {
      started[static_cast<std::size_t>(b)] = true;
      open.push_back(b);
    } else if (open.back() != b) {
      return false;
    }
    if (last[static_cast<std::size_t>(b)] == k) open.pop_back();
  }
  return true;
}

Partition join(const Partition& p, const Partition& q) {
  if (p.size() != q.size()) {
    throw Error(ErrorCode::SizeMismatch, "join of partitions of different sizes");
  }
  const int m = p.size();
  std::vector<int> parent(static_cast<std::size_t>(m));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&parent](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  };
  auto unite = [&](int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
  };
  for (const Partition* r : {&p, &q}) {
    std::vector<int> first(static_cast<std::size_t>(r->num_blocks()), -1);
    for (int k = 0; k < m; ++k) {
      int& f = first[static_cast<std::size_t>(r->label(k))];
      if (f < 0) f = k; else unite(f, k);
    }
  }
  std::vector<int> roots(static_cast<std::size_t>(m));
  for (int k = 0; k < m; ++k) roots[static_cast<std::size_t>(k)] = find(k);
  return Partition::from_labels(roots);
}

bool leq(const Partition& p, const Partition& q) {
  if (p.size() != q.size()) {
    throw Error(ErrorCode::SizeMismatch, "comparison of partitions of different sizes");
  }
  // p <= q iff the q-label is constant on each p-block.
  std::uint8_t image[kMaxOrder];
  std::fill(std::begin(image), std::end(image), std::uint8_t{0xFF});
  for (int k = 0; k < p.size(); ++k) {
    auto& slot = image[p.label(k)];
    auto target = static_cast<std::uint8_t>(q.label(k));
    if (slot == 0xFF) slot = target;
    else if (slot != target) return false;
  }
  return true;
}

Partition kernel(const IndexTuple& i) {
  return Partition::from_labels(i.entries());
}

Partition restrict(const Partition& p, std::span<const int> positions) {
  std::vector<int> labels;
  labels.reserve(positions.size());
  for (int k : positions) labels.push_back(p.label(k));
  return Partition::from_labels(labels);
}

Partition restrict_one_based(const Partition& p, std::span<const int> positions) {
  if (positions.empty()) throw Error(ErrorCode::BadSubset, "empty subset");
  std::vector<int> zero_based;
  int previous = 0;
  for (int v : positions) {
    if (v <= previous || v > p.size()) {
      throw Error(ErrorCode::BadSubset, "subset must be strictly increasing inside [1," +
                                            std::to_string(p.size()) + "]");
    }
    zero_based.push_back(v - 1);
    previous = v;
  }
  return restrict(p, zero_based);
}

namespace {

void rgs_walk(int m, int max_blocks, std::vector<int>& labels, int used, std::vector<Partition>& out) {
  const auto k = labels.size();
  if (static_cast<int>(k) == m) {
    out.push_back(Partition::from_labels(labels));
    return;
  }
  const int limit = std::min(used + 1, max_blocks);
  for (int l = 0; l < limit; ++l) {
    labels.push_back(l);
    rgs_walk(m, max_blocks, labels, std::max(used, l + 1), out);
    labels.pop_back();
  }
}

}  // namespace

std::vector<Partition> enumerate_partitions(int m, int cap) {
  return enumerate_partitions_with_at_most(m, std::max(m, 1), cap);
}

std::vector<Partition> enumerate_partitions_with_at_most(int m, int max_blocks, int cap) {
  check_order(m, cap);
  std::vector<Partition> out;
  if (m == 0) {
    out.emplace_back();
    return out;
  }
  if (max_blocks < 1) return out;
  std::vector<int> labels;
  labels.reserve(static_cast<std::size_t>(m));
  rgs_walk(m, max_blocks, labels, 0, out);
  return out;
}

Partition concatenate(const Partition& p, const Partition& q) {
  std::vector<int> labels;
  for (int k = 0; k < p.size(); ++k) labels.push_back(p.label(k));
  for (int k = 0; k < q.size(); ++k) labels.push_back(q.label(k) + p.num_blocks());
  return Partition::from_labels(labels);
}

IndexTuple canonical_tuple(const Partition& p) {
  std::vector<int> entries;
  entries.reserve(static_cast<std::size_t>(p.size()));
  for (int k = 0; k < p.size(); ++k) entries.push_back(p.label(k) + 1);
  return IndexTuple(std::move(entries), std::max(1, p.num_blocks()));
}

}  // namespace freedf
