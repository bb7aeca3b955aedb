#pragma once

#include <vector>

#include "tracts/scalar.hpp"
#include "tracts/verdict.hpp"

namespace tracts {

// Whether the formal sum of `terms` vanishes (lies in the null set of the
// tract). Zero terms are inert and ignored; the empty sum vanishes.
bool zero_in_hypersum(const TractId& t, const std::vector<Scalar>& terms);

// b ∈ ⊞ terms, i.e. the formal sum (-b) + Σ terms vanishes.
bool in_hypersum(const Scalar& b, const std::vector<Scalar>& terms);

// A finite subset of a ⊞ b: exactly a ⊞ b whenever that set is finite, and
// otherwise zero (when contained), every attained boundary value, and interior
// witnesses. Every returned value satisfies in_hypersum(value, {a, b}).
std::vector<Scalar> pair_sum_candidates(const Scalar& a, const Scalar& b);

// Whether nonzero vanishing sums absorb arbitrary extra terms (equivalently,
// 1 ⊞ -1 is all of F).
PropertyVerdict inflation_property(const TractId& t);

}  // namespace tracts
