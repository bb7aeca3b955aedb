#pragma once

#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "tracts/fmatroid.hpp"
#include "tracts/fvector.hpp"
#include "tracts/rational.hpp"
#include "tracts/verdict.hpp"

namespace tracts {

// A composition operation sends a pair of vectors to a nonempty set of vectors
// whose support is the union of the two supports and which stay orthogonal to
// every common orthogonal vector of the pair.
enum class CompositionKind { Inflation, MaxMagnitude, Epsilon };

std::string to_string(CompositionKind k);

struct CompositionOp {
  CompositionKind kind;
  std::vector<TractId> applicable_tracts;
};

// Inflation requires the inflation property; the magnitude forms require a
// real magnitude with dominance behavior under the hypersum.
bool composition_applicable(CompositionKind k, const TractId& t);
// canonical op with its applicable tracts filled in (modulus-free tracts only)
CompositionOp composition_op(CompositionKind k);

// componentwise first-nonzero: x(e) where x(e) != 0, else y(e)
FVector compose_inflation(const FVector& x, const FVector& y);

// componentwise magnitude maximum, x keeping ties
FVector compose_max(const FVector& x, const FVector& y);

// single perturbation: z(e) = x(e) on the support of x, eta*y(e) elsewhere
FVector compose_at_eta(const FVector& x, const FVector& y, const Rat& eta);

// Dominance threshold below which the perturbation of x by y stays orthogonal
// to every scaling of the given circuits: for each circuit c meeting the
// support of x, with d = max |x(e)||c(e)|, every f outside the support of x
// contributes d / (|y(f)||c(f)|); the common support of x and y contributes
// |x(e)|/|y(e)|. Empty optional means unconstrained.
std::optional<Rat> epsilon_threshold(const FVector& x, const FVector& y,
                                     const std::vector<FVector>& circuits);

// Finite witness family for the perturbation composition: two vectors at eta
// of half and a quarter of the threshold (1 and 1/2 when unconstrained).
std::vector<FVector> compose_epsilon(const FVector& x, const FVector& y,
                                     const std::vector<FVector>& circuits);

struct CompositionSample {
  FVector x1;
  FVector x2;
  FVector z;
};

using CompositionFn = std::function<std::vector<FVector>(const FVector&, const FVector&)>;

// Checks, over the sample triples (x1, x2, z): every composite of x1 and x2
// has support equal to the union of supports, and whenever x1 and x2 are both
// orthogonal to z, so is every composite. Refuted carries the failing triple.
PropertyVerdict check_composition_axioms(const CompositionOp& op, const TractId& t,
                                         const std::vector<CompositionSample>& samples);
PropertyVerdict check_composition_axioms(const CompositionFn& compose, const TractId& t,
                                         const std::vector<CompositionSample>& samples);

// Zero sets of compositions of cocircuit representatives, one composition per
// complement of a flat of the underlying matroid. On a composition-bearing
// tract this reproduces the full flat list.
std::vector<std::set<std::string>> flats_via_composition(const FMatroid& m);

// Whether the covector set is exactly the orthogonal complement of the vector
// set. Decided exhaustively for finite tracts within budget; otherwise scans
// the candidates for a vector and a covector that fail to be orthogonal.
PropertyVerdict perfection_probe(const FMatroid& m, const std::vector<FVector>& candidates,
                                 size_t max_enum = 1000000);

}  // namespace tracts
