#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "freedf/category.hpp"
#include "freedf/cumulants.hpp"
#include "freedf/error.hpp"
#include "freedf/poset.hpp"
#include "oracles.hpp"

using namespace freedf;

namespace {

Partition P(const char* text) { return parse_partition(text); }
IndexTuple T(const char* text) { return parse_tuple(text); }

// kappa_2(x_i, x_i) = 1, all other cumulants zero.
CumulantTable semicircular_cumulants(int n, int max_order, Representation repr) {
  CumulantTable c(TableKind::Cumulants, Representation::Dense, n, max_order);
  for (int i = 1; i <= n && max_order >= 2; ++i) c.set(IndexTuple({i, i}, n), 1);
  return repr == Representation::Kernel ? c.to_kernel() : c;
}

}  // namespace

TEST_CASE("multiplicative extensions") {
  const auto c = semicircular_cumulants(2, 4, Representation::Dense);
  CHECK(kappa_pi(c, P("0,0,1,1"), T("1,1,2,2")) == 1);
  CHECK(kappa_pi(c, P("0,0,1,1"), T("1,2,1,2")) == 0);
  CHECK(kappa_pi(c, Partition::one(2), T("2,2")) == 1);
  const auto mt = moments_from_cumulants(c);
  CHECK(phi_pi(mt, P("0,1,0,1"), T("1,2,1,2")) == 1);
  CHECK(phi_pi(mt, Partition::one(4), T("1,2,2,1")) == mt.value(T("1,2,2,1")));
  try {
    kappa_pi(c, P("0,0,0,0,0"), T("1,1,1,1,1"));
    FAIL("order");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::OrderExceeded);
  }
  try {
    phi_pi(mt, P("0,0"), T("1,1,1"));
    FAIL("size");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::SizeMismatch);
  }
}

TEST_CASE("semicircular moments") {
  const auto mt = moments_from_cumulants(semicircular_cumulants(2, 4, Representation::Dense));
  CHECK(mt.value(T("1,1,1,1")) == 2);
  CHECK(mt.value(T("1,2,1,2")) == 0);
  CHECK(mt.value(T("1,2,2,1")) == 1);
  for (int n = 1; n <= 3; ++n) {
    const auto dense = moments_from_cumulants(semicircular_cumulants(n, 6, Representation::Dense));
    const auto kern = moments_from_cumulants(semicircular_cumulants(n, 6, Representation::Kernel));
    CHECK(dense.same_values(kern));
    for (int m = 1; m <= 6; ++m)
      for (const auto& t : oracle::tuples(m, n)) CHECK(dense.value(IndexTuple(t, n)) == oracle::pairing_count(t));
  }
}

TEST_CASE("low-order cumulant formulas") {
  std::mt19937_64 rng(3);
  const auto mt = oracle::random_dense(TableKind::Moments, 3, 3, rng);
  const auto c = cumulants_from_moments(mt);
  for (int i = 1; i <= 3; ++i) {
    CHECK(c.value(IndexTuple({i}, 3)) == mt.value(IndexTuple({i}, 3)));
    for (int j = 1; j <= 3; ++j)
      CHECK(c.value(IndexTuple({i, j}, 3)) ==
            mt.value(IndexTuple({i, j}, 3)) - mt.value(IndexTuple({i}, 3)) * mt.value(IndexTuple({j}, 3)));
  }
  CHECK(cumulant_at(mt, IndexTuple({2, 1, 3}, 3)) == c.value(IndexTuple({2, 1, 3}, 3)));
}

TEST_CASE("zero cumulants give zero moments") {
  CumulantTable c(TableKind::Cumulants, Representation::Dense, 2, 4);
  const auto mt = moments_from_cumulants(c);
  for (int m = 1; m <= 4; ++m)
    for (std::size_t s = 0; s < mt.entry_count(m); ++s) CHECK(mt.at_slot(m, s) == 0);
}

TEST_CASE("cumulants agree with the recursive definition") {
  std::mt19937_64 rng(5);
  for (int n = 1; n <= 2; ++n) {
    const auto mt = oracle::random_dense(TableKind::Moments, n, 5, rng);
    oracle::RecursiveCumulants rec([&](const std::vector<int>& w) { return mt.value(IndexTuple(w, n)); });
    const auto c = cumulants_from_moments(mt);
    for (int m = 1; m <= 5; ++m)
      for (const auto& t : oracle::tuples(m, n)) CHECK(c.value(IndexTuple(t, n)) == rec(t));
  }
}

TEST_CASE("inverting over NC needs the Möbius function of NC") {
  // A constant variable: every moment is 1 and every cumulant of order >= 2 is 0.
  MomentTable ones(TableKind::Moments, Representation::Dense, 1, 4);
  for (int m = 1; m <= 4; ++m) ones.at_slot(m, 0) = 1;
  CHECK(cumulants_from_moments(ones).at_slot(4, 0) == 0);
  Rational full_lattice = 0;
  Rational noncrossing = 0;
  for (const auto& p : enumerate_noncrossing(4)) {
    full_lattice += mobius_to_top_full_lattice(p);
    noncrossing += mobius_to_top_noncrossing(p);
  }
  CHECK(noncrossing == 0);
  CHECK(full_lattice == 1);
  CHECK(mobius_to_top_noncrossing(Partition::singletons(4)) == -5);
  CHECK(mobius_to_top_full_lattice(Partition::singletons(4)) == -6);
}

TEST_CASE("round trips") {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 3);
    const int max_order = 1 + static_cast<int>(rng() % (n == 3 ? 5 : 6));
    const auto c = oracle::random_dense(TableKind::Cumulants, n, max_order, rng);
    CHECK(cumulants_from_moments(moments_from_cumulants(c)) == c);
    const auto mt = oracle::random_dense(TableKind::Moments, n, max_order, rng);
    CHECK(moments_from_cumulants(cumulants_from_moments(mt)) == mt);
  }
}

TEST_CASE("dense and kernel transforms agree") {
  std::mt19937_64 rng(13);
  for (int n = 1; n <= 4; ++n) {
    FunctionalTable c(TableKind::Cumulants, Representation::Kernel, n, 5);
    for (int m = 1; m <= 5; ++m)
      for (std::size_t s = 0; s < c.entry_count(m); ++s) c.at_slot(m, s) = oracle::random_rational(rng);
    const auto via_kernel = moments_from_cumulants(c);
    const auto via_dense = moments_from_cumulants(c.to_dense());
    CHECK(via_kernel.representation() == Representation::Kernel);
    CHECK(via_kernel.same_values(via_dense));
    CHECK(cumulants_from_moments(via_kernel).same_values(c));
  }
}

TEST_CASE("cumulants are multilinear") {
  std::mt19937_64 rng(17);
  const int n = 2;
  const auto mt = oracle::random_dense(TableKind::Moments, n, 5, rng);
  const Rational t(-3, 2);
  auto scaled = mt;
  for (int m = 1; m <= 5; ++m)
    for (std::size_t s = 0; s < mt.entry_count(m); ++s) {
      const auto i = mt.tuple_at(m, s);
      unsigned k = 0;
      for (int e : i.entries()) k += e == 1;
      scaled.at_slot(m, s) = mt.at_slot(m, s) * power(t, k);
    }
  const auto c = cumulants_from_moments(mt);
  const auto cs = cumulants_from_moments(scaled);
  for (int m = 1; m <= 5; ++m)
    for (std::size_t s = 0; s < c.entry_count(m); ++s) {
      const auto i = c.tuple_at(m, s);
      unsigned k = 0;
      for (int e : i.entries()) k += e == 1;
      CHECK(cs.at_slot(m, s) == c.at_slot(m, s) * power(t, k));
    }
}

TEST_CASE("table plumbing") {
  try {
    FunctionalTable(TableKind::Moments, Representation::Dense, 10, 8);
    FAIL("size guard");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DenseTooLarge);
  }
  FunctionalTable k(TableKind::Moments, Representation::Kernel, 10, 8);
  CHECK(k.entry_count(8) == kernel_classes(8, 10).classes.size());
  std::mt19937_64 rng(1);
  const auto dense = oracle::random_dense(TableKind::Moments, 2, 3, rng);
  CHECK_FALSE(dense.kernel_representable());
  try {
    dense.to_kernel();
    FAIL("kernel");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotKernelRepresentable);
  }
  try {
    moments_from_cumulants(dense);
    FAIL("kind");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::KindMismatch);
  }
  CHECK(dense.value(IndexTuple{}) == 1);
  try {
    dense.value(T("1,1,1,1"));
    FAIL("order");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::OrderExceeded);
  }
}
