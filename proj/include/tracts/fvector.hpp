#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "tracts/scalar.hpp"

namespace tracts {

// Ordered finite ground set; labels are unique and index positions are stable.
struct GroundSet {
  std::vector<std::string> labels;

  bool operator==(const GroundSet&) const = default;
  size_t size() const { return labels.size(); }
  bool has(const std::string& label) const;
  size_t index(const std::string& label) const;  // throws ValidationError on unknown label
};

GroundSet make_ground(std::vector<std::string> labels);
GroundSet numbered_ground(int n);  // labels "1".."n"

// Dense total map E -> F, aligned with the ground-set order.
struct FVector {
  TractId tract;
  GroundSet ground;
  std::vector<Scalar> entries;

  bool operator==(const FVector&) const = default;
  const Scalar& at(const std::string& label) const;
  const Scalar& operator[](size_t i) const { return entries[i]; }
  bool is_zero() const;
};

FVector make_fvector(const TractId& tract, const GroundSet& ground, std::vector<Scalar> entries);
FVector fvector_zero(const TractId& tract, const GroundSet& ground);

std::set<std::string> support(const FVector& x);
std::set<std::string> zero_set(const FVector& x);
uint32_t support_mask(const FVector& x);

FVector scalar_mul(const Scalar& a, const FVector& x);
// drops the labels in a; the remaining labels keep their relative order
FVector restrict_away(const FVector& x, const std::set<std::string>& a);
// appends a fresh label with the given value
FVector extend(const FVector& x, const std::string& label, const Scalar& value);

bool is_orthogonal(const FVector& x, const FVector& y);
bool in_perp(const FVector& x, const std::vector<FVector>& s);
bool vec_in_hypersum(const FVector& z, const std::vector<FVector>& xs);

std::vector<FVector> minsupp(const std::vector<FVector>& s);

// scales so the first nonzero coordinate in ground order is 1
FVector normalize_rep(const FVector& x);
// strict deterministic order: support mask, then entries by scalar_less
bool fvector_less(const FVector& a, const FVector& b);
// normalize_rep + sort + unique
std::vector<FVector> dedupe_reps(std::vector<FVector> reps);

std::string format_fvector(const FVector& x);  // "(a, b, c)" with scalar literals
FVector parse_fvector(const TractId& tract, const GroundSet& ground, const std::string& text);

}  // namespace tracts
