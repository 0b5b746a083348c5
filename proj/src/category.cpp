#include "freedf/category.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <mutex>

#include "freedf/error.hpp"

namespace freedf {

CategoryId parse_category(std::string_view name) {
  std::string lower;
  for (char c : name) lower += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (lower == "o+") return CategoryId::OPlus;
  if (lower == "s+") return CategoryId::SPlus;
  if (lower == "h+") return CategoryId::HPlus;
  if (lower == "b+") return CategoryId::BPlus;
  if (lower == "s'+" || lower == "b'+" || lower == "b#") {
    throw Error(ErrorCode::UnknownCategory,
                "category \"" + std::string(name) +
                    "\" is not supported: its partition category is only given in the "
                    "classification of free easy quantum groups (Weber 2013) and is not built in");
  }
  throw Error(ErrorCode::UnknownCategory,
              "unknown category \"" + std::string(name) + "\" (expected o+, s+, h+ or b+)");
}

std::string_view category_name(CategoryId cat) {
  switch (cat) {
    case CategoryId::OPlus: return "o+";
    case CategoryId::SPlus: return "s+";
    case CategoryId::HPlus: return "h+";
    case CategoryId::BPlus: return "b+";
  }
  return "?";
}

int category_cap(CategoryId cat) { return cat == CategoryId::OPlus ? 12 : 10; }

namespace {

bool sizes_allowed(CategoryId cat, const std::vector<int>& sizes) {
  switch (cat) {
    case CategoryId::OPlus:
      return std::all_of(sizes.begin(), sizes.end(), [](int s) { return s == 2; });
    case CategoryId::SPlus:
      return true;
    case CategoryId::HPlus:
      return std::all_of(sizes.begin(), sizes.end(), [](int s) { return s % 2 == 0; });
    case CategoryId::BPlus:
      return std::all_of(sizes.begin(), sizes.end(), [](int s) { return s <= 2; });
  }
  return false;
}

// Depth-first RGS generation restricted to non-crossing prefixes. A block can
// only receive a new element while it is on the stack of open blocks;
// extending a block closes every block opened after its previous element.
struct NoncrossingWalker {
  CategoryId cat;
  int m;
  std::vector<int> labels;
  std::vector<int> sizes;
  std::vector<int> open;
  std::vector<Partition> out;

  void walk() {
    const int k = static_cast<int>(labels.size());
    if (k == m) {
      if (sizes_allowed(cat, sizes)) out.push_back(Partition::from_labels(labels));
      return;
    }
    const int fresh = static_cast<int>(sizes.size());
    const bool capped = cat == CategoryId::OPlus || cat == CategoryId::BPlus;
    // Labels increase in the loop, which keeps the output lexicographic.
    for (int l = 0; l <= fresh; ++l) {
      if (l < fresh) {
        auto pos = std::find(open.begin(), open.end(), l);
        if (pos == open.end()) continue;
        if (capped && sizes[static_cast<std::size_t>(l)] >= 2) continue;
        std::vector<int> closed(pos + 1, open.end());
        open.erase(pos + 1, open.end());
        ++sizes[static_cast<std::size_t>(l)];
        labels.push_back(l);
        walk();
        labels.pop_back();
        --sizes[static_cast<std::size_t>(l)];
        open.insert(open.end(), closed.begin(), closed.end());
      } else {
        if (cat == CategoryId::OPlus) {
          // Every open singleton still needs a partner.
          int pending = 0;
          for (int b : open) pending += sizes[static_cast<std::size_t>(b)] == 1;
          if (pending + 1 > m - k - 1) continue;
        }
        sizes.push_back(1);
        open.push_back(l);
        labels.push_back(l);
        walk();
        labels.pop_back();
        open.pop_back();
        sizes.pop_back();
      }
    }
  }
};

std::vector<Partition> build_category(CategoryId cat, int m) {
  if (m == 0) return {Partition()};
  NoncrossingWalker w{cat, m, {}, {}, {}, {}};
  w.walk();
  return std::move(w.out);
}

}  // namespace

bool category_contains(CategoryId cat, const Partition& p) {
  return is_noncrossing(p) && sizes_allowed(cat, p.block_sizes());
}

const std::vector<Partition>& enumerate_category(CategoryId cat, int m) {
  if (m < 0 || m > category_cap(cat)) {
    throw Error(ErrorCode::OrderTooLarge, "order " + std::to_string(m) + " exceeds the " +
                                              std::string(category_name(cat)) + " cap " +
                                              std::to_string(category_cap(cat)));
  }
  static std::mutex mutex;
  static std::map<std::pair<CategoryId, int>, std::unique_ptr<const std::vector<Partition>>> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find({cat, m}); it != cache.end()) return *it->second;
  }
  auto built = std::make_unique<const std::vector<Partition>>(build_category(cat, m));
  std::lock_guard lock(mutex);
  // First writer wins; a racing duplicate is identical and simply dropped.
  auto [it, inserted] = cache.try_emplace({cat, m}, std::move(built));
  return *it->second;
}

std::vector<Partition> c_leq(CategoryId cat, const Partition& kernel) {
  std::vector<Partition> out;
  for (const auto& p : enumerate_category(cat, kernel.size())) {
    if (leq(p, kernel)) out.push_back(p);
  }
  return out;
}

std::vector<Partition> c_leq(CategoryId cat, const IndexTuple& i) {
  return c_leq(cat, kernel(i));
}

}  // namespace freedf
