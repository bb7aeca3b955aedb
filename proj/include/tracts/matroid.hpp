#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "tracts/fvector.hpp"

namespace tracts {

// subset-of-ground helpers: bit i stands for ground.labels[i]
uint32_t mask_of_labels(const GroundSet& ground, const std::set<std::string>& labels);
std::set<std::string> labels_of_mask(const GroundSet& ground, uint32_t mask);

// Ordinary matroid, stored by circuit supports with cached bases.
struct Matroid {
  GroundSet ground;
  std::vector<uint32_t> circuits;  // sorted ascending, antichain, nonempty members
  std::vector<uint32_t> basis_list;  // sorted ascending, all of rank size
  int rank = 0;

  bool operator==(const Matroid&) const = default;
};

// validates the circuit axioms exhaustively unless disabled
Matroid from_circuits(const GroundSet& ground, const std::vector<std::set<std::string>>& circuits,
                      bool validate = true);
Matroid from_circuit_masks(const GroundSet& ground, std::vector<uint32_t> circuits,
                           bool validate = true);

bool is_independent(const Matroid& m, uint32_t subset);
bool is_independent(const Matroid& m, const std::set<std::string>& subset);
std::vector<std::set<std::string>> bases(const Matroid& m);
bool is_basis(const Matroid& m, uint32_t subset);

// the unique circuit inside B ∪ {e} for a basis B and e outside it
uint32_t fundamental_circuit_mask(const Matroid& m, size_t e, uint32_t basis);
std::set<std::string> fundamental_circuit_support(const Matroid& m, const std::string& e,
                                                  const std::set<std::string>& basis);

Matroid dual(const Matroid& m);
std::vector<uint32_t> cocircuit_masks(const Matroid& m);
std::vector<std::set<std::string>> cocircuit_supports(const Matroid& m);
std::vector<uint32_t> hyperplane_masks(const Matroid& m);
std::vector<std::set<std::string>> hyperplanes(const Matroid& m);
std::vector<uint32_t> flat_masks(const Matroid& m);
std::vector<std::set<std::string>> flats(const Matroid& m);
std::set<std::string> loops(const Matroid& m);
std::set<std::string> coloops(const Matroid& m);

// minimal transversals of the supports of the nonzero vectors
std::vector<uint32_t> support_basis_masks(size_t ground_size,
                                          const std::vector<uint32_t>& supports);
std::vector<std::set<std::string>> support_bases(const std::vector<FVector>& w);

// lattice of unions of circuit supports, with longest-chain heights from the bottom
struct SupportLattice {
  std::vector<uint32_t> elements;  // sorted; contains 0
  std::vector<int> height;         // aligned with elements
  int height_of(uint32_t element) const;  // throws ValidationError if absent
};

SupportLattice support_lattice(const Matroid& m);
// true when the union of the given circuit supports has lattice height equal to the family size
bool is_modular_family(const Matroid& m, const std::vector<uint32_t>& supports);

}  // namespace tracts
