#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "freedf/error.hpp"
#include "freedf/partition.hpp"
#include "oracles.hpp"

using namespace freedf;

namespace {

Partition P(const char* text) { return parse_partition(text); }

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::IoError;
}

}  // namespace

TEST_CASE("parse_partition canonicalizes labels") {
  CHECK(P("0,0,1,0").to_string() == "0,0,1,0");
  CHECK(P("0,0,1,0").to_block_string() == "{{1,2,4},{3}}");
  CHECK(P("5,5,2,5").to_string() == "0,0,1,0");
  CHECK(P("0,1,2").num_blocks() == 3);
  CHECK(code_of([] { P(""); }) == ErrorCode::EmptyInput);
  CHECK(code_of([] { P("0,x"); }) == ErrorCode::BadSyntax);
  for (int m = 1; m <= 6; ++m)
    for (const auto& p : enumerate_partitions(m)) CHECK(P(p.to_string().c_str()) == p);
}

TEST_CASE("non-crossing test") {
  CHECK_FALSE(is_noncrossing(P("0,1,0,1")));
  CHECK(is_noncrossing(P("0,1,1,0")));
  for (int m = 1; m <= 7; ++m) {
    const auto all = enumerate_partitions(m);
    long count = 0;
    for (const auto& p : all) {
      CHECK(is_noncrossing(p) == oracle::crossing_free(oracle::from(p)));
      count += is_noncrossing(p);
    }
    CHECK(count == oracle::catalan(m));
  }
}

TEST_CASE("join") {
  CHECK(join(P("0,0,1,1"), P("0,1,1,2")) == Partition::one(4));
  CHECK(code_of([] { join(P("0,0"), P("0,0,0")); }) == ErrorCode::SizeMismatch);
  for (int m = 1; m <= 5; ++m) {
    const auto all = enumerate_partitions(m);
    for (const auto& p : all) {
      CHECK(join(p, p) == p);
      CHECK(join(p, Partition::singletons(m)) == p);
      for (const auto& q : all) {
        const Partition j = join(p, q);
        CHECK(oracle::from(j) == oracle::join(oracle::from(p), oracle::from(q)));
        CHECK(j == join(q, p));
        CHECK(leq(p, j));
        CHECK(leq(q, j));
        // least upper bound
        for (const auto& r : all)
          if (leq(p, r) && leq(q, r)) CHECK(leq(j, r));
      }
    }
  }
  const auto all4 = enumerate_partitions(4);
  for (const auto& a : all4)
    for (const auto& b : all4)
      for (const auto& c : all4) CHECK(join(join(a, b), c) == join(a, join(b, c)));
}

TEST_CASE("refinement order") {
  CHECK(leq(P("0,0,1"), P("0,0,0")));
  CHECK_FALSE(leq(P("0,1,0"), P("0,0,1")));
  CHECK(code_of([] { leq(P("0"), P("0,0")); }) == ErrorCode::SizeMismatch);
  for (int m = 1; m <= 6; ++m) {
    const auto all = enumerate_partitions(m);
    for (const auto& p : all) {
      CHECK(leq(Partition::singletons(m), p));
      CHECK(leq(Partition::one(m), p) == (p == Partition::one(m)));
      CHECK(leq(p, p));
    }
    if (m > 5) continue;
    for (const auto& p : all)
      for (const auto& q : all) {
        const bool pq = leq(p, q);
        CHECK(pq == oracle::finer(oracle::from(p), oracle::from(q)));
        if (pq) CHECK(p.num_blocks() >= q.num_blocks());
        if (pq && leq(q, p)) CHECK(p == q);
        if (m <= 4 && pq)
          for (const auto& r : all)
            if (leq(q, r)) CHECK(leq(p, r));
      }
  }
}

TEST_CASE("kernels and restriction") {
  CHECK(kernel(parse_tuple("1,3,1,2")).to_block_string() == "{{1,3},{2},{4}}");
  CHECK(kernel(parse_tuple("5,5,5")) == Partition::one(3));
  CHECK(kernel(parse_tuple("1,2,3")) == Partition::singletons(3));
  const std::vector<int> v23{2, 3};
  CHECK(restrict_one_based(P("0,1,1,0"), v23) == Partition::one(2));
  const std::vector<int> full{1, 2, 3, 4};
  CHECK(restrict_one_based(P("0,1,0,2"), full) == P("0,1,0,2"));
  const std::vector<int> bad{3, 2};
  CHECK(code_of([&] { restrict_one_based(P("0,1,0"), bad); }) == ErrorCode::BadSubset);
  const std::vector<int> outside{1, 5};
  CHECK(code_of([&] { restrict_one_based(P("0,1,0"), outside); }) == ErrorCode::BadSubset);
  CHECK(code_of([] { parse_tuple("0,1"); }) == ErrorCode::BadTuple);
  CHECK(code_of([] { parse_tuple("1,3", 2); }) == ErrorCode::BadTuple);

  // kernel(i|V) = restrict(kernel(i), V), exhaustive over tuples and subsets
  for (int m = 1; m <= 6; ++m) {
    for (const auto& t : oracle::tuples(m, std::min(m, 4))) {
      const IndexTuple i(t, 4);
      CHECK(oracle::from(kernel(i)) == oracle::kernel(t));
      for (unsigned mask = 1; mask < (1u << m); ++mask) {
        std::vector<int> pos;
        for (int k = 0; k < m; ++k)
          if (mask >> k & 1u) pos.push_back(k);
        CHECK(kernel(i.restrict(pos)) == restrict(kernel(i), pos));
      }
    }
  }
}

TEST_CASE("enumeration") {
  CHECK(enumerate_partitions(3).size() == 5);
  CHECK(enumerate_partitions(4).size() == 15);
  REQUIRE(enumerate_partitions(1).size() == 1);
  CHECK(enumerate_partitions(1)[0].to_string() == "0");
  CHECK(code_of([] { enumerate_partitions(11); }) == ErrorCode::OrderTooLarge);
  for (int m = 1; m <= 7; ++m) {
    const auto all = enumerate_partitions(m);
    CHECK(static_cast<long>(all.size()) == oracle::bell(m));
    CHECK(std::is_sorted(all.begin(), all.end()));
    CHECK(std::adjacent_find(all.begin(), all.end()) == all.end());
    std::set<oracle::Blocks> expected;
    for (const auto& b : oracle::all_partitions(m)) expected.insert(b);
    std::set<oracle::Blocks> got;
    for (const auto& p : all) got.insert(oracle::from(p));
    CHECK(got == expected);
  }
  for (int m = 1; m <= 6; ++m)
    for (int k = 1; k <= m; ++k)
      for (const auto& p : enumerate_partitions_with_at_most(m, k)) CHECK(p.num_blocks() <= k);
}

TEST_CASE("concatenation and canonical tuples") {
  CHECK(concatenate(P("0,0"), P("0,1,1,0")).to_string() == "0,0,1,2,2,1");
  CHECK(canonical_tuple(P("0,1,0,2")).to_string() == "1,2,1,3");
  for (const auto& p : enumerate_partitions(5)) CHECK(kernel(canonical_tuple(p)) == p);
}
