#pragma once

#include <string>

#include "tracts/scalar.hpp"

namespace tracts {

enum class MorphismKind {
  Kappa,        // any tract -> Krasner, nonzero -> 1
  SignMap,      // rationals -> signs
  PhaseMap,     // Gaussian rationals -> phases
  AbsTriangle,  // Gaussian rationals -> triangle magnitudes (|z| must be rational)
  SignTR,       // tropical reals -> signs
  PhaseTC,      // tropical complex -> tropical phases
  AbsTC,        // tropical complex -> ultra triangle magnitudes
  IncludeRC,    // rationals -> Gaussian rationals
};

struct Morphism {
  MorphismKind kind;
  TractId source;
  TractId target;

  friend bool operator==(const Morphism&, const Morphism&) = default;
};

Morphism morphism_kappa(const TractId& source);
Morphism morphism_sign();
Morphism morphism_phase();
Morphism morphism_abs_triangle();
Morphism morphism_sign_tr();
Morphism morphism_phase_tc();
Morphism morphism_abs_tc();
Morphism morphism_include_rc();

// CLI names: "kappa", "sign", "ph", "abs-triangle", "sign-tr", "ph-tc",
// "abs-tc", "include-rc". Kappa needs the source tract supplied.
Morphism parse_morphism(const std::string& name, const TractId& source);
std::string morphism_name(const Morphism& m);

// Applies entrywise semantics: multiplicative, zero to zero, conjugation
// preserving. Throws TractMismatchError on wrong source and
// MorphismDomainError when |z| is irrational under AbsTriangle.
Scalar apply_morphism(const Morphism& m, const Scalar& a);

}  // namespace tracts
