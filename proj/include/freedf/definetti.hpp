#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "freedf/category.hpp"
#include "freedf/partition.hpp"
#include "freedf/rational.hpp"
#include "freedf/table.hpp"

namespace freedf {

/// Scalars indexed by C(m) for one order.
using CoefficientSlice = std::map<Partition, Rational>;

/// What a coefficient family holds: moment coefficients c, cumulant
/// coefficients C, or restricted kernel values (phi~ or kappa~ on C(m)).
enum class CoefficientKind { MomentCoefficients, CumulantCoefficients, RestrictedMoments, RestrictedCumulants };

std::string_view coefficient_kind_name(CoefficientKind kind);
CoefficientKind parse_coefficient_kind(std::string_view name);

/// Per-order scalars whose keys are exactly C(m).
struct CoefficientFamily {
  CategoryId category = CategoryId::SPlus;
  CoefficientKind kind = CoefficientKind::MomentCoefficients;
  std::map<int, CoefficientSlice> orders;

  friend bool operator==(const CoefficientFamily&, const CoefficientFamily&) = default;
};

/// Slice with every key of C(m) present and zero.
CoefficientSlice zero_slice(CategoryId cat, int m);

// ---------------------------------------------------------------------------
// Invariance certification

/// Weingarten-averaged coefficients at order m:
///   c_s = sum_p Wg(p, s) S_p,  S_p = sum over j in [n]^m with p <= ker(j) of phi(j).
/// Kernel tables evaluate S_p as sum over t >= p of (n)_{#t} phi~(t).
/// Throws SingularGram.
CoefficientSlice averaged_coefficients(const FunctionalTable& table, CategoryId cat, int m);

enum class ScalarMode { Rational, Float };
enum class Verdict { Pass, Fail };
std::string_view verdict_name(Verdict v);

struct CheckOptions {
  ScalarMode mode = ScalarMode::Rational;
  /// Float mode only: |actual - expected| <= tolerance * max(1, |actual|).
  double tolerance = 1e-9;
  std::size_t max_witnesses = 16;
  /// Orders to check; empty means 1..max_order.
  std::vector<int> orders;
  /// Stop scanning an order once a witness is found.
  bool fail_fast = false;
  bool record_residuals = true;
};

struct Witness {
  int m = 0;
  IndexTuple tuple;
  Rational expected;  // sum of averaged coefficients over C_<=(i)
  Rational actual;    // stored value
};

struct Residual {
  int m = 0;
  IndexTuple tuple;  // dense: the tuple; kernel: canonical class representative
  Rational value;    // actual - expected
};

struct InvarianceReport {
  Verdict verdict = Verdict::Pass;
  CategoryId category = CategoryId::SPlus;
  int n = 0;
  int max_order = 0;
  ScalarMode mode = ScalarMode::Rational;
  /// Every checked entry, order-ascending then slot order.
  std::vector<Residual> residuals;
  CoefficientFamily coefficients;
  std::vector<Witness> witnesses;
  std::size_t failure_count = 0;
};

/// Decides G_n-invariance of a moment table through the averaged coefficients.
InvarianceReport check_invariance(const MomentTable& table, CategoryId cat, const CheckOptions& options = {});

// ---------------------------------------------------------------------------
// Coefficient extraction

struct SolveResult {
  CoefficientSlice coefficients;
  /// False when the kernel values underdetermine the coefficients; the slice
  /// is then one particular solution with free coefficients set to zero.
  bool unique = true;
  std::size_t rank = 0;
  std::size_t unknowns = 0;
  /// True when the Möbius-inversion route applied (C(m) inside D_n(m)).
  bool by_mobius = true;
};

/// c_p = sum over s in C(m), s <= p of phi~(s) mu_{C(m)}(s, p).
/// Falls back to an exact linear solve over D_n(m) when some p in C(m) has
/// more than n blocks. Throws NotInvariant if no coefficients reproduce the table.
SolveResult solve_moment_coefficients(const MomentTable& moments, CategoryId cat, int m);
/// Same for cumulant coefficients C_p from a cumulant table.
SolveResult solve_cumulant_coefficients(const CumulantTable& cumulants, CategoryId cat, int m);

/// All orders 1..max_order at once; kind follows the table.
CoefficientFamily solve_all(const FunctionalTable& table, CategoryId cat);

/// sum over p in C_<=(i) of coefficients, with ker(i) given directly.
Rational sum_over_c_leq(const CoefficientSlice& slice, const Partition& kernel);

/// c_s = sum over p in NC(m), p >= s of prod_{V in p} C_{s|V}. Needs every order <= m.
CoefficientSlice moment_coeffs_from_cumulant_coeffs(const CoefficientFamily& cumulant_coeffs, int m);
/// C_s = sum over p in NC(m), p >= s of mu_{NC(m)}(p, 1_m) prod_{V in p} c_{s|V}.
CoefficientSlice cumulant_coeffs_from_moment_coeffs(const CoefficientFamily& moment_coeffs, int m);
/// Whole-family conversion c <-> C over every stored order.
CoefficientFamily convert_coefficients(const CoefficientFamily& family);

// ---------------------------------------------------------------------------
// Invariant models

struct InvariantModel {
  CoefficientFamily cumulant_coefficients;
  CumulantTable cumulants;
  MomentTable moments;
};

/// kappa~(t) = sum over p in C(m), p <= t of C_p; moments by the free
/// moment-cumulant formula. Kernel representation.
InvariantModel model_from_cumulant_coefficients(const CoefficientFamily& cumulant_coeffs, int n, int max_order);

/// Seeded random C_p = a/b, a in [-9, 9], b in [1, 4]. No positivity claim.
/// Throws InvalidDimension below n = 4 (n = 2 for O+).
InvariantModel generate_invariant_model(CategoryId cat, int n, int max_order, std::uint64_t seed);

/// phi(x_{i1} ... x_{im}) = |{p in NC_2(m) : p <= ker(i)}|.
MomentTable semicircular_model(int n, int max_order);

/// (1/n^k) sum over t in P(2k), t >= p, #t <= n of (n)_{#t} phi~(t), for p in NC_2(2k).
Rational normalized_block_sum(const MomentTable& table, const Partition& p, int n);

/// phi~ (or kappa~) restricted to C(m) for every order of the table.
CoefficientFamily restrict_to_category(const FunctionalTable& table, CategoryId cat);

/// sum over p in C_<=(i) of sum over s in C(m), s <= p of phi~(s) mu_{C(m)}(s, p),
/// for a tuple over the naturals. Zero when C_<=(i) is empty.
Rational reconstruct_infinite(const CoefficientFamily& restricted, CategoryId cat, const IndexTuple& i);

// ---------------------------------------------------------------------------
// Asymptotics

enum class Trend { Zero, Decay, NoDecay };
std::string_view trend_name(Trend t);

struct ProbeSeries {
  Partition kernel;
  /// "cumulant" or "moment".
  std::string_view quantity;
  Rational target;
  std::vector<int> dimensions;
  std::vector<Rational> values;
  Trend trend = Trend::NoDecay;
  /// Log-log slope of |value - target| between the first and last nonzero points.
  std::optional<double> rate;
};

struct AsymptoticReport {
  CategoryId category = CategoryId::SPlus;
  int m = 0;
  double tolerance = 0;
  std::vector<ProbeSeries> series;
};

/// For S+: kappa_m on kernels in NC(m) with more than one block should vanish.
/// For O+: kappa_m on NC_2(m) kernels (m >= 4) should vanish and phi on
/// NC_2(m) kernels should tend to 1. Each model must be invariant at its n.
AsymptoticReport asymptotic_freeness_probe(std::span<const MomentTable> models, CategoryId cat, int m,
                                           double tolerance);

}  // namespace freedf
