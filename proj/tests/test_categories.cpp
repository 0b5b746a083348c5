#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "freedf/category.hpp"
#include "freedf/error.hpp"
#include "oracles.hpp"

using namespace freedf;

namespace {

Partition P(const char* text) { return parse_partition(text); }

char letter(CategoryId cat) { return category_name(cat)[0]; }

}  // namespace

TEST_CASE("parsing category names") {
  CHECK(parse_category("o+") == CategoryId::OPlus);
  CHECK(parse_category("S+") == CategoryId::SPlus);
  CHECK(parse_category("h+") == CategoryId::HPlus);
  CHECK(parse_category("B+") == CategoryId::BPlus);
  for (const char* name : {"s'+", "b'+", "b#", "u+", ""}) {
    try {
      parse_category(name);
      FAIL("accepted " << name);
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::UnknownCategory);
    }
  }
}

TEST_CASE("membership") {
  CHECK(category_contains(CategoryId::OPlus, P("0,1,1,0")));
  CHECK_FALSE(category_contains(CategoryId::OPlus, P("0,1,0,1")));
  CHECK(category_contains(CategoryId::HPlus, P("0,0,0,0")));
  CHECK_FALSE(category_contains(CategoryId::HPlus, P("0,0,0")));
  for (auto cat : kAllCategories)
    for (int m = 1; m <= 7; ++m)
      for (const auto& p : enumerate_partitions(m))
        CHECK(category_contains(cat, p) == oracle::in_category(letter(cat), oracle::from(p)));
}

TEST_CASE("enumeration matches the filtered brute force") {
  CHECK(enumerate_category(CategoryId::OPlus, 4).size() == 2);
  CHECK(enumerate_category(CategoryId::OPlus, 4)[0].to_block_string() == "{{1,2},{3,4}}");
  CHECK(enumerate_category(CategoryId::OPlus, 4)[1].to_block_string() == "{{1,4},{2,3}}");
  CHECK(enumerate_category(CategoryId::OPlus, 3).empty());
  CHECK(enumerate_category(CategoryId::BPlus, 2).size() == 2);
  CHECK(enumerate_category(CategoryId::SPlus, 4).size() == 14);
  for (auto cat : kAllCategories) {
    REQUIRE(enumerate_category(cat, 0).size() == 1);
    CHECK(enumerate_category(cat, 0)[0].size() == 0);
    for (int m = 1; m <= 8; ++m) {
      const auto& got = enumerate_category(cat, m);
      std::vector<Partition> expected;
      for (const auto& p : enumerate_partitions(m))
        if (category_contains(cat, p)) expected.push_back(p);
      CHECK(got == expected);
    }
  }
  for (int k = 1; k <= 6; ++k)
    CHECK(static_cast<long>(enumerate_category(CategoryId::OPlus, 2 * k).size()) == oracle::catalan(k));
  CHECK(enumerate_category(CategoryId::OPlus, 12).size() == 132);
  try {
    enumerate_category(CategoryId::SPlus, 11);
    FAIL("no cap");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::OrderTooLarge);
  }
}

TEST_CASE("closure under concatenation and restriction") {
  for (auto cat : kAllCategories) {
    for (int a = 1; a <= 6; ++a)
      for (int b = 1; a + b <= 8; ++b)
        for (const auto& p : enumerate_category(cat, a))
          for (const auto& q : enumerate_category(cat, b)) CHECK(category_contains(cat, concatenate(p, q)));
    for (int m = 1; m <= 6; ++m)
      for (const auto& s : enumerate_category(cat, m))
        for (const auto& pi : enumerate_partitions(m)) {
          if (!leq(s, pi)) continue;
          for (const auto& v : pi.blocks()) CHECK(category_contains(cat, restrict(s, v)));
        }
  }
}

TEST_CASE("pairings are an antichain") {
  for (int m = 2; m <= 8; m += 2) {
    const auto& nc2 = enumerate_category(CategoryId::OPlus, m);
    for (const auto& p : nc2)
      for (const auto& q : nc2) CHECK(leq(p, q) == (p == q));
  }
}

TEST_CASE("c_leq") {
  CHECK(c_leq(CategoryId::OPlus, parse_tuple("1,2,1,2")).empty());
  const auto one = c_leq(CategoryId::OPlus, parse_tuple("1,1,2,2"));
  REQUIRE(one.size() == 1);
  CHECK(one[0].to_string() == "0,0,1,1");
  CHECK(c_leq(CategoryId::SPlus, parse_tuple("1,1")).size() == 2);
  for (auto cat : kAllCategories)
    for (int m = 1; m <= 5; ++m)
      for (const auto& t : oracle::tuples(m, 3)) {
        const IndexTuple i(t, 3);
        std::vector<Partition> expected;
        for (const auto& p : enumerate_category(cat, m))
          if (oracle::finer(oracle::from(p), oracle::kernel(t))) expected.push_back(p);
        CHECK(c_leq(cat, i) == expected);
      }
}
