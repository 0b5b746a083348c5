#include "freedf/weingarten.hpp"

#include <fstream>
#include <future>
#include <map>
#include <mutex>
#include <tuple>

#include "freedf/error.hpp"
#include "freedf/io.hpp"

namespace freedf {

std::optional<std::size_t> CategoryMatrix::index_of(const Partition& p) const {
  auto it = std::lower_bound(basis.begin(), basis.end(), p);
  if (it == basis.end() || *it != p) return std::nullopt;
  return static_cast<std::size_t>(it - basis.begin());
}

namespace {

void check_dimension(int n) {
  if (n < 1) throw Error(ErrorCode::InvalidDimension, "dimension n must be at least 1");
}

// #(p v q) over C(m); independent of n, so shared across dimensions.
const std::vector<int>& join_block_counts(CategoryId cat, int m) {
  static std::mutex mutex;
  static std::map<std::pair<CategoryId, int>, std::unique_ptr<const std::vector<int>>> cache;
  const auto& basis = enumerate_category(cat, m);
  std::lock_guard lock(mutex);
  auto& slot = cache[{cat, m}];
  if (!slot) {
    const std::size_t size = basis.size();
    std::vector<int> counts(size * size);
    for (std::size_t a = 0; a < size; ++a) {
      for (std::size_t b = a; b < size; ++b) {
        int c = join(basis[a], basis[b]).num_blocks();
        counts[a * size + b] = c;
        counts[b * size + a] = c;
      }
    }
    slot = std::make_unique<const std::vector<int>>(std::move(counts));
  }
  return *slot;
}

using Key = std::tuple<CategoryId, int, int>;

struct WeingartenCache {
  std::mutex mutex;
  std::map<Key, std::shared_future<std::shared_ptr<const WeingartenTable>>> tables;
  std::filesystem::path dir;
};

WeingartenCache& cache() {
  static WeingartenCache instance;
  return instance;
}

std::filesystem::path cache_file(const std::filesystem::path& dir, CategoryId cat, int m, int n) {
  return dir / (std::string(category_name(cat)) + "_" + std::to_string(m) + "_" + std::to_string(n) + ".json");
}

std::shared_ptr<const WeingartenTable> try_load(const std::filesystem::path& dir, CategoryId cat, int m, int n) {
  if (dir.empty()) return nullptr;
  std::ifstream in(cache_file(dir, cat, m, n));
  if (!in) return nullptr;
  try {
    auto table = category_matrix_from_json(nlohmann::ordered_json::parse(in));
    if (table.category != cat || table.m != m || table.n != n ||
        table.basis != enumerate_category(cat, m)) {
      return nullptr;
    }
    // A stale or hand-edited file must not leak into results.
    if (!(gram(cat, m, n).entries * table.entries == RationalMatrix::identity(table.basis.size()))) {
      return nullptr;
    }
    return std::make_shared<const WeingartenTable>(std::move(table));
  } catch (const std::exception&) {
    return nullptr;
  }
}

void try_store(const std::filesystem::path& dir, const WeingartenTable& table) {
  if (dir.empty()) return;
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  auto target = cache_file(dir, table.category, table.m, table.n);
  auto tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) return;
    out << to_json(table).dump(2) << '\n';
  }
  std::filesystem::rename(tmp, target, ec);
}

std::shared_ptr<const WeingartenTable> build(CategoryId cat, int m, int n, const std::filesystem::path& dir) {
  if (auto loaded = try_load(dir, cat, m, n)) return loaded;
  GramTable g = gram(cat, m, n);
  auto inverse = invert_exact(g.entries);
  if (!inverse) {
    throw Error(ErrorCode::SingularGram, "Gram matrix for " + std::string(category_name(cat)) +
                                             " at m=" + std::to_string(m) + ", n=" + std::to_string(n) +
                                             " is singular");
  }
  auto table = std::make_shared<WeingartenTable>();
  table->category = cat;
  table->m = m;
  table->n = n;
  table->basis = std::move(g.basis);
  table->entries = std::move(*inverse);
  try_store(dir, *table);
  return table;
}

}  // namespace

GramTable gram(CategoryId cat, int m, int n) {
  check_dimension(n);
  GramTable g;
  g.category = cat;
  g.m = m;
  g.n = n;
  g.basis = enumerate_category(cat, m);
  const std::size_t size = g.basis.size();
  const auto& counts = join_block_counts(cat, m);
  std::vector<Rational> powers(static_cast<std::size_t>(m) + 1);
  for (int e = 0; e <= m; ++e) powers[static_cast<std::size_t>(e)] = Rational(power(n, static_cast<unsigned>(e)));
  g.entries = RationalMatrix(size, size);
  for (std::size_t a = 0; a < size; ++a) {
    for (std::size_t b = 0; b < size; ++b) {
      g.entries(a, b) = powers[static_cast<std::size_t>(counts[a * size + b])];
    }
  }
  return g;
}

std::shared_ptr<const WeingartenTable> weingarten(CategoryId cat, int m, int n) {
  check_dimension(n);
  enumerate_category(cat, m);  // validates the order before anything is cached
  auto& c = cache();
  std::promise<std::shared_ptr<const WeingartenTable>> promise;
  std::shared_future<std::shared_ptr<const WeingartenTable>> future;
  std::filesystem::path dir;
  bool owner = false;
  {
    std::lock_guard lock(c.mutex);
    auto it = c.tables.find({cat, m, n});
    if (it == c.tables.end()) {
      future = promise.get_future().share();
      c.tables.emplace(Key{cat, m, n}, future);
      dir = c.dir;
      owner = true;
    } else {
      future = it->second;
    }
  }
  if (owner) {
    try {
      promise.set_value(build(cat, m, n, dir));
    } catch (...) {
      promise.set_exception(std::current_exception());
    }
  }
  return future.get();
}

Rational haar_moment(CategoryId cat, int n, const IndexTuple& i, const IndexTuple& j) {
  if (i.size() != j.size()) throw Error(ErrorCode::SizeMismatch, "haar_moment: tuples of different lengths");
  for (const IndexTuple* t : {&i, &j}) {
    for (int e : t->entries()) {
      if (e < 1 || e > n) throw Error(ErrorCode::BadTuple, "tuple entry outside [1,n]");
    }
  }
  const int m = i.size();
  const auto& basis = enumerate_category(cat, m);
  if (basis.empty()) return 0;
  auto wg = weingarten(cat, m, n);
  const Partition ki = kernel(i);
  const Partition kj = kernel(j);
  std::vector<std::size_t> rows, cols;
  for (std::size_t a = 0; a < basis.size(); ++a) {
    if (leq(basis[a], ki)) rows.push_back(a);
    if (leq(basis[a], kj)) cols.push_back(a);
  }
  Rational sum = 0;
  for (auto a : rows) {
    for (auto b : cols) sum += wg->entries(a, b);
  }
  return sum;
}

Rational wg_scaled(CategoryId cat, int k, int n, const Partition& p, const Partition& q) {
  if (k < 0) throw Error(ErrorCode::OrderTooLarge, "negative half-order");
  auto wg = weingarten(cat, 2 * k, n);
  auto a = wg->index_of(p);
  auto b = wg->index_of(q);
  if (!a || !b) {
    throw Error(ErrorCode::NotInCategory,
                "partition not in " + std::string(category_name(cat)) + "(" + std::to_string(2 * k) + ")");
  }
  return wg->entries(*a, *b) * Rational(power(n, static_cast<unsigned>(k)));
}

void set_weingarten_cache_dir(const std::filesystem::path& dir) {
  std::lock_guard lock(cache().mutex);
  cache().dir = dir;
}

void clear_weingarten_cache() {
  std::lock_guard lock(cache().mutex);
  cache().tables.clear();
}

}  // namespace freedf
