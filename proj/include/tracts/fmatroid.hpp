#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "tracts/fvector.hpp"
#include "tracts/linalg.hpp"
#include "tracts/matroid.hpp"
#include "tracts/morphism.hpp"
#include "tracts/verdict.hpp"

namespace tracts {

// which circuit-axiom level has been verified for an object
enum class AxiomMode { Unchecked, Weak, Strong };

std::string to_string(AxiomMode m);

// reduced rows with respect to a basis: rows[i] has value 1 at basis[i]
// and value 0 at every other basis label
struct Rref {
  std::vector<std::string> basis;  // ground order
  std::vector<FVector> rows;       // aligned with basis
};

// Matroid with coefficients: stored by one normalized circuit representative
// per scaling orbit. All caches are computed eagerly at construction, so a
// constructed value is immutable and safe to read concurrently.
struct FMatroid {
  TractId tract;
  GroundSet ground;
  std::vector<FVector> circuit_reps;    // normalized, unique supports, sorted
  Matroid underlying;
  std::vector<FVector> cocircuit_reps;  // normalized, sorted
  std::vector<Rref> basis_rrefs;        // aligned with underlying.basis_list
  AxiomMode checked_mode = AxiomMode::Unchecked;

  bool operator==(const FMatroid& o) const {
    return tract == o.tract && ground == o.ground && circuit_reps == o.circuit_reps;
  }
};

struct FMatroidOptions {
  bool validate_supports = true;            // circuit-exchange check on supports
  AxiomMode check_mode = AxiomMode::Unchecked;  // coefficient-level axiom check
  size_t max_enum = 1000000;
};

FMatroid from_circuit_reps(const TractId& t, const GroundSet& ground,
                           std::vector<FVector> reps, const FMatroidOptions& opts = {});

// the matroid whose covectors are the row space of the generator matrix;
// requires full row rank. Dual-route construction: circuit representatives come
// from per-basis elimination, and the generic reduced-row reconstruction of the
// cocircuits is cross-checked against the eliminated rows.
FMatroid from_subspace(const FieldMatrix& m);
FMatroid from_subspace(const FieldMatrix& m, const GroundSet& ground);

// rank-1 matroid whose cocircuit line is the scaling orbit of phi
FMatroid rank1_from_phi(const FVector& phi);

// unique circuit supported in B ∪ {e} with value 1 at e
FVector fundamental_circuit(const FMatroid& m, const std::string& e,
                            const std::set<std::string>& basis);
// cached reduced rows of the cocircuit set with respect to a basis
const Rref& cocircuit_rref(const FMatroid& m, const std::set<std::string>& basis);

FMatroid dual(const FMatroid& m);

// membership in the orthogonal complement of the circuit set
bool is_covector(const FMatroid& m, const FVector& x);
// same predicate via per-basis reduced-row consistency; the two routes agree
bool is_covector_rref(const FMatroid& m, const FVector& x);
bool is_vector(const FMatroid& m, const FVector& x);

// exhaustive scan of F^E; finite tracts only
std::vector<FVector> enumerate_covectors(const FMatroid& m, size_t max_enum = 1000000);
std::vector<FVector> enumerate_vectors(const FMatroid& m, size_t max_enum = 1000000);

FMatroid delete_elements(const FMatroid& m, const std::set<std::string>& a);
FMatroid contract(const FMatroid& m, const std::set<std::string>& a);

// entrywise image of the circuit representatives; underlying matroid unchanged
FMatroid pushforward(const FMatroid& m, const Morphism& f);

// Nontriviality, Incomparability, and modular elimination over the given
// representatives. The eliminant search is complete: the eliminant's scale is
// forced at any coordinate of X outside the other supports, so an exhausted
// search is a genuine refutation. Unknown only on budget exhaustion.
PropertyVerdict check_circuit_axioms(const TractId& t, const GroundSet& ground,
                                     const std::vector<FVector>& reps, AxiomMode mode,
                                     size_t max_enum = 1000000);

bool is_loop(const FMatroid& m, const std::string& e);
bool is_coloop(const FMatroid& m, const std::string& e);

enum class VectorProperty { WeakClosure, Elimination, AdditiveClosure };

// Searches the componentwise hypersum of two covectors for a covector,
// optionally pinned at one coordinate (Elimination: zero at e; AdditiveClosure:
// alpha at e). Exact for finite tracts; candidate-grid search otherwise.
PropertyVerdict property_check(const FMatroid& m, VectorProperty which, const FVector& x,
                               const FVector& y, const std::optional<std::string>& e = {},
                               const std::optional<Scalar>& alpha = {},
                               size_t max_enum = 1000000);

// grid verification that the whole componentwise hypersum stays inside the
// covector set, under the one-tied-coordinate hypothesis
PropertyVerdict tropical_closure_check(const FMatroid& m, const FVector& x1, const FVector& x2,
                                       size_t max_enum = 1000000);

// true when some coefficient is nonzero and 0 lies in the combination
bool verify_dependence_witness(const std::vector<Scalar>& coeffs,
                               const std::vector<FVector>& xs);
// exhaustive for finite tracts; ratio-grid search with Unknown fallback otherwise
PropertyVerdict search_dependence(const std::vector<FVector>& xs, size_t max_enum = 1000000);

// zero sets of enumerated covectors; finite tracts only
std::vector<std::set<std::string>> flats_from_covectors(const FMatroid& m,
                                                        size_t max_enum = 1000000);

}  // namespace tracts
