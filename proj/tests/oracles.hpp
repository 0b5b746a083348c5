#pragma once

// Brute-force reference implementations. They share nothing with the library
// beyond the Rational type: partitions are plain block lists here.

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "freedf/partition.hpp"
#include "freedf/rational.hpp"
#include "freedf/table.hpp"

namespace oracle {

using freedf::Rational;
using Blocks = std::vector<std::vector<int>>;  // 0-based, blocks sorted by min, elements ascending

inline Blocks normalize(Blocks b) {
  for (auto& v : b) std::sort(v.begin(), v.end());
  b.erase(std::remove_if(b.begin(), b.end(), [](const auto& v) { return v.empty(); }), b.end());
  std::sort(b.begin(), b.end());
  return b;
}

// Every set partition of {0..m-1}, built by inserting element k into an
// existing block or a new one.
inline std::vector<Blocks> all_partitions(int m) {
  std::vector<Blocks> out{{}};
  for (int k = 0; k < m; ++k) {
    std::vector<Blocks> next;
    for (const auto& b : out) {
      for (std::size_t j = 0; j < b.size(); ++j) {
        Blocks c = b;
        c[j].push_back(k);
        next.push_back(c);
      }
      Blocks c = b;
      c.push_back({k});
      next.push_back(c);
    }
    out = std::move(next);
  }
  for (auto& b : out) b = normalize(b);
  return out;
}

inline int block_of(const Blocks& b, int x) {
  for (std::size_t j = 0; j < b.size(); ++j) {
    if (std::find(b[j].begin(), b[j].end(), x) != b[j].end()) return static_cast<int>(j);
  }
  return -1;
}

inline int size_of(const Blocks& b) {
  int m = 0;
  for (const auto& v : b) m += static_cast<int>(v.size());
  return m;
}

inline bool crossing_free(const Blocks& b) {
  const int m = size_of(b);
  for (int a = 0; a < m; ++a)
    for (int c = a + 1; c < m; ++c)
      for (int d = c + 1; d < m; ++d)
        for (int e = d + 1; e < m; ++e)
          if (block_of(b, a) == block_of(b, d) && block_of(b, c) == block_of(b, e) &&
              block_of(b, a) != block_of(b, c))
            return false;
  return true;
}

inline bool finer(const Blocks& p, const Blocks& q) {
  const int m = size_of(p);
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y)
      if (block_of(p, x) == block_of(p, y) && block_of(q, x) != block_of(q, y)) return false;
  return true;
}

// Join by transitive closure of the "same block in p or q" relation.
inline Blocks join(const Blocks& p, const Blocks& q) {
  const int m = size_of(p);
  std::vector<std::vector<bool>> r(m, std::vector<bool>(m));
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y) r[x][y] = block_of(p, x) == block_of(p, y) || block_of(q, x) == block_of(q, y);
  for (int k = 0; k < m; ++k)
    for (int x = 0; x < m; ++x)
      for (int y = 0; y < m; ++y) r[x][y] = r[x][y] || (r[x][k] && r[k][y]);
  Blocks out;
  std::vector<bool> used(m);
  for (int x = 0; x < m; ++x) {
    if (used[x]) continue;
    std::vector<int> v;
    for (int y = 0; y < m; ++y)
      if (r[x][y]) {
        v.push_back(y);
        used[y] = true;
      }
    out.push_back(v);
  }
  return normalize(out);
}

inline Blocks from(const freedf::Partition& p) { return normalize(p.blocks()); }

inline freedf::Partition to(const Blocks& b) {
  std::vector<int> labels(size_of(b));
  for (std::size_t j = 0; j < b.size(); ++j)
    for (int x : b[j]) labels[x] = static_cast<int>(j);
  return freedf::Partition::from_labels(labels);
}

inline Blocks kernel(const std::vector<int>& i) {
  std::map<int, std::vector<int>> level;
  for (std::size_t k = 0; k < i.size(); ++k) level[i[k]].push_back(static_cast<int>(k));
  Blocks b;
  for (auto& [v, pos] : level) b.push_back(pos);
  return normalize(b);
}

inline bool in_category(char cat, const Blocks& b) {
  if (!crossing_free(b)) return false;
  for (const auto& v : b) {
    const auto s = v.size();
    if (cat == 'o' && s != 2) return false;
    if (cat == 'h' && s % 2) return false;
    if (cat == 'b' && s > 2) return false;
  }
  return true;
}

inline std::vector<Blocks> category(char cat, int m) {
  std::vector<Blocks> out;
  for (auto& b : all_partitions(m))
    if (in_category(cat, b)) out.push_back(b);
  return out;
}

// Möbius function of an explicit poset by the defining double recursion
// mu(s,s) = 1, mu(s,p) = -sum_{s <= t < p} mu(s,t).
inline Rational mobius(const std::vector<Blocks>& poset, std::size_t s, std::size_t p) {
  std::map<std::size_t, Rational> memo;
  std::function<Rational(std::size_t)> mu = [&](std::size_t t) -> Rational {
    if (t == s) return 1;
    if (auto it = memo.find(t); it != memo.end()) return it->second;
    Rational acc = 0;
    for (std::size_t u = 0; u < poset.size(); ++u)
      if (u != t && finer(poset[s], poset[u]) && finer(poset[u], poset[t])) acc += mu(u);
    return memo[t] = -acc;
  };
  return finer(poset[s], poset[p]) ? mu(p) : Rational(0);
}

// Gauss-Jordan inverse with rational pivots; empty result when singular.
inline std::vector<std::vector<Rational>> inverse(std::vector<std::vector<Rational>> a) {
  const std::size_t n = a.size();
  std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n));
  for (std::size_t k = 0; k < n; ++k) inv[k][k] = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && a[piv][c] == 0) ++piv;
    if (piv == n) return {};
    std::swap(a[piv], a[c]);
    std::swap(inv[piv], inv[c]);
    const Rational d = a[c][c];
    for (std::size_t k = 0; k < n; ++k) {
      a[c][k] /= d;
      inv[c][k] /= d;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a[r][c] == 0) continue;
      const Rational f = a[r][c];
      for (std::size_t k = 0; k < n; ++k) {
        a[r][k] -= f * a[c][k];
        inv[r][k] -= f * inv[c][k];
      }
    }
  }
  return inv;
}

inline std::size_t rank(std::vector<std::vector<Rational>> a) {
  std::size_t r = 0;
  const std::size_t cols = a.empty() ? 0 : a[0].size();
  for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
    std::size_t piv = r;
    while (piv < a.size() && a[piv][c] == 0) ++piv;
    if (piv == a.size()) continue;
    std::swap(a[piv], a[r]);
    for (std::size_t k = r + 1; k < a.size(); ++k) {
      if (a[k][c] == 0) continue;
      const Rational f = a[k][c] / a[r][c];
      for (std::size_t j = c; j < cols; ++j) a[k][j] -= f * a[r][j];
    }
    ++r;
  }
  return r;
}

// Every tuple in [n]^m, lexicographic, entries 1-based.
inline std::vector<std::vector<int>> tuples(int m, int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> t(m, 1);
  while (true) {
    out.push_back(t);
    int k = m - 1;
    while (k >= 0 && t[k] == n) t[k--] = 1;
    if (k < 0) break;
    ++t[k];
  }
  return out;
}

// Number of non-crossing pairings of the word that only pair equal letters:
// the first letter is matched with a later equal letter, splitting the word
// into an inside and an outside part.
inline long pairing_count(const std::vector<int>& w) {
  if (w.empty()) return 1;
  if (w.size() % 2) return 0;
  long total = 0;
  for (std::size_t k = 1; k < w.size(); k += 2) {
    if (w[k] != w[0]) continue;
    std::vector<int> inside(w.begin() + 1, w.begin() + static_cast<long>(k));
    std::vector<int> outside(w.begin() + static_cast<long>(k) + 1, w.end());
    total += pairing_count(inside) * pairing_count(outside);
  }
  return total;
}

// Free cumulants of a dense functional by the recursive definition
// phi(w) = sum over NC(m) of prod kappa, solved for kappa at the top block.
class RecursiveCumulants {
 public:
  explicit RecursiveCumulants(std::function<Rational(const std::vector<int>&)> phi) : phi_(std::move(phi)) {}

  Rational operator()(const std::vector<int>& w) {
    if (auto it = memo_.find(w); it != memo_.end()) return it->second;
    const int m = static_cast<int>(w.size());
    Rational rest = 0;
    for (const auto& b : all_partitions(m)) {
      if (b.size() == 1 || !crossing_free(b)) continue;
      Rational prod = 1;
      for (const auto& v : b) {
        std::vector<int> sub;
        for (int x : v) sub.push_back(w[x]);
        prod *= (*this)(sub);
      }
      rest += prod;
    }
    return memo_[w] = phi_(w) - rest;
  }

 private:
  std::function<Rational(const std::vector<int>&)> phi_;
  std::map<std::vector<int>, Rational> memo_;
};

inline long catalan(int k) {
  long c = 1;
  for (int j = 0; j < k; ++j) c = c * 2 * (2 * j + 1) / (j + 2);
  return c;
}

inline long bell(int m) {
  std::vector<std::vector<long>> tri{{1}};
  for (int r = 1; r <= m; ++r) {
    std::vector<long> row{tri.back().back()};
    for (long v : tri.back()) row.push_back(row.back() + v);
    tri.push_back(row);
  }
  return tri[m][0];
}

inline Rational random_rational(std::mt19937_64& rng) {
  Rational r(static_cast<long>(rng() % 19) - 9, static_cast<long>(rng() % 4) + 1);
  r.canonicalize();
  return r;
}

inline freedf::FunctionalTable random_dense(freedf::TableKind kind, int n, int max_order, std::mt19937_64& rng) {
  freedf::FunctionalTable t(kind, freedf::Representation::Dense, n, max_order);
  for (int m = 1; m <= max_order; ++m)
    for (std::size_t s = 0; s < t.entry_count(m); ++s) t.at_slot(m, s) = random_rational(rng);
  return t;
}

}  // namespace oracle
