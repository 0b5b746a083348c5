#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "freedf/error.hpp"
#include "freedf/poset.hpp"
#include "oracles.hpp"

using namespace freedf;

namespace {

Partition P(const char* text) { return parse_partition(text); }

}  // namespace

TEST_CASE("small Möbius values") {
  const auto& c2 = category_poset(CategoryId::SPlus, 2);
  CHECK(c2.mobius(P("0,1"), P("0,0")) == -1);
  for (const auto& p : c2.elements()) CHECK(c2.mobius(p, p) == 1);
  CHECK(mobius_to_top_full_lattice(Partition::one(5)) == 1);
  CHECK(mobius_to_top_full_lattice(P("0,0,1")) == -1);
  CHECK(mobius_to_top_full_lattice(Partition::singletons(4)) == -6);
}

TEST_CASE("Möbius errors") {
  const auto& c2 = category_poset(CategoryId::SPlus, 2);
  try {
    c2.mobius(P("0,0"), P("0,1"));
    FAIL("comparable");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotComparable);
  }
  const auto& o4 = category_poset(CategoryId::OPlus, 4);
  try {
    o4.mobius(P("0,1,0,1"), P("0,1,0,1"));
    FAIL("in poset");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotInPoset);
  }
  try {
    mobius_to_top_noncrossing(P("0,1,0,1"));
    FAIL("noncrossing");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotInCategory);
  }
}

TEST_CASE("generic recursion agrees with the brute-force oracle") {
  for (auto cat : kAllCategories)
    for (int m = 1; m <= 5; ++m) {
      const auto& poset = category_poset(cat, m);
      std::vector<oracle::Blocks> blocks;
      for (const auto& p : poset.elements()) blocks.push_back(oracle::from(p));
      for (std::size_t p = 0; p < poset.size(); ++p) {
        const auto& col = poset.mobius_column(p);
        for (std::size_t s = 0; s < poset.size(); ++s) CHECK(col[s] == oracle::mobius(blocks, s, p));
      }
    }
}

TEST_CASE("defining sum vanishes on every nontrivial interval of C(4)") {
  for (auto cat : kAllCategories) {
    const auto& poset = category_poset(cat, 4);
    const auto& el = poset.elements();
    for (std::size_t s = 0; s < el.size(); ++s)
      for (std::size_t p = 0; p < el.size(); ++p) {
        if (s == p || !leq(el[s], el[p])) continue;
        Rational sum = 0;
        for (std::size_t t = 0; t < el.size(); ++t)
          if (leq(el[s], el[t]) && leq(el[t], el[p])) sum += poset.mobius(el[t], el[p]);
        CHECK(sum == 0);
      }
  }
}

TEST_CASE("closed form on P(m) matches the generic recursion") {
  for (int m = 1; m <= 6; ++m) {
    const FinitePoset full(enumerate_partitions(m));
    const std::size_t top = *full.index_of(Partition::one(m));
    const auto& col = full.mobius_column(top);
    for (std::size_t s = 0; s < full.size(); ++s) CHECK(col[s] == mobius_to_top_full_lattice(full.elements()[s]));
  }
}

TEST_CASE("Kreweras closed form on NC(m) matches the generic recursion") {
  CHECK(kreweras_complement(Partition::singletons(4)) == Partition::one(4));
  CHECK(kreweras_complement(Partition::one(4)) == Partition::singletons(4));
  CHECK(mobius_to_top_noncrossing(Partition::singletons(4)) == -5);
  for (int m = 1; m <= 8; ++m) {
    const auto& nc = category_poset(CategoryId::SPlus, m);
    const std::size_t top = *nc.index_of(Partition::one(m));
    const auto& col = nc.mobius_column(top);
    for (std::size_t s = 0; s < nc.size(); ++s) {
      const auto& p = nc.elements()[s];
      CHECK(col[s] == mobius_to_top_noncrossing(p));
      CHECK(kreweras_complement(p).num_blocks() + p.num_blocks() == m + 1);
      CHECK(is_noncrossing(kreweras_complement(p)));
    }
  }
}

TEST_CASE("pairings carry the discrete Möbius function") {
  for (int m = 2; m <= 8; m += 2) {
    const auto& poset = category_poset(CategoryId::OPlus, m);
    for (std::size_t p = 0; p < poset.size(); ++p) {
      const auto& col = poset.mobius_column(p);
      for (std::size_t s = 0; s < poset.size(); ++s) CHECK(col[s] == (s == p ? 1 : 0));
    }
  }
}

TEST_CASE("Möbius inversion recovers random functions") {
  std::mt19937_64 rng(7);
  for (auto cat : kAllCategories)
    for (int m = 1; m <= 6; ++m) {
      const auto& poset = category_poset(cat, m);
      const auto& el = poset.elements();
      std::vector<Rational> g(el.size());
      for (auto& v : g) v = oracle::random_rational(rng);
      std::vector<Rational> f(el.size());
      for (std::size_t p = 0; p < el.size(); ++p)
        for (std::size_t s = 0; s < el.size(); ++s)
          if (leq(el[s], el[p])) f[p] += g[s];
      for (std::size_t p = 0; p < el.size(); ++p) {
        Rational back = 0;
        const auto& col = poset.mobius_column(p);
        for (std::size_t s : poset.down_set(p)) back += f[s] * col[s];
        CHECK(back == g[p]);
      }
    }
}

TEST_CASE("Catalan numbers") {
  for (unsigned k = 0; k <= 10; ++k) CHECK(catalan(k) == oracle::catalan(static_cast<int>(k)));
}
