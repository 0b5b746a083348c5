#pragma once

#include "freedf/partition.hpp"
#include "freedf/rational.hpp"
#include "freedf/table.hpp"

namespace freedf {

/// kappa_p(i): product over blocks V of p of kappa_|V|(x_{i_V}).
Rational kappa_pi(const CumulantTable& cumulants, const Partition& p, const IndexTuple& i);

/// phi_p(i): product over blocks V of p of phi(x_{i_V}). Crossings are not special.
Rational phi_pi(const MomentTable& moments, const Partition& p, const IndexTuple& i);

/// phi(x_{i1} ... x_{im}) = sum over NC(m) of kappa_p(i), for every stored tuple.
/// The result has the input's representation.
MomentTable moments_from_cumulants(const CumulantTable& cumulants);

/// kappa_m(i) = sum over p in NC(m) of phi_p(i) mu_{NC(m)}(p, 1_m).
CumulantTable cumulants_from_moments(const MomentTable& moments);

/// A single free cumulant kappa_m(x_{i1}, ..., x_{im}) of a moment table.
Rational cumulant_at(const MomentTable& moments, const IndexTuple& i);

}  // namespace freedf
