#pragma once

#include <string>
#include <variant>
#include <vector>

#include "tracts/direction.hpp"
#include "tracts/rational.hpp"

namespace tracts {

enum class TractKind {
  FieldQ,
  FieldQi,
  FieldFp,
  Krasner,
  Sign,
  Phase,
  Triangle,
  TropReal,
  TropComplex,
  TropPhase,
  UltraTriangle,
};

struct TractId {
  TractKind kind;
  unsigned p = 0;  // modulus, FieldFp only

  friend bool operator==(const TractId&, const TractId&) = default;
};

TractId tract_q();
TractId tract_qi();
TractId tract_fp(unsigned p);  // throws ValidationError unless p is prime
TractId tract_krasner();
TractId tract_sign();
TractId tract_phase();
TractId tract_triangle();
TractId tract_tr();
TractId tract_tc();
TractId tract_tp();
TractId tract_ttriangle();

bool tract_finite(const TractId& t);
// Number of elements of F for finite tracts; 0 for infinite.
unsigned long tract_carrier_size(const TractId& t);
// Whether the designated involution is nontrivial (complex-like conjugation).
bool tract_has_conjugation(const TractId& t);

std::string tract_name(const TractId& t);   // "q", "qi", "fp:3", "phase", ...
TractId parse_tract(const std::string& s);  // throws std::invalid_argument

// --- Scalar payloads -------------------------------------------------------

struct ZeroVal {
  friend bool operator==(const ZeroVal&, const ZeroVal&) = default;
};
struct QVal {
  Rat v;
  friend bool operator==(const QVal&, const QVal&) = default;
};
struct QiVal {
  GRat v;
  friend bool operator==(const QiVal&, const QiVal&) = default;
};
struct FpVal {
  unsigned r;  // 1..p-1
  friend bool operator==(const FpVal&, const FpVal&) = default;
};
struct KOneVal {
  friend bool operator==(const KOneVal&, const KOneVal&) = default;
};
struct SignVal {
  int s;  // +1 or -1
  friend bool operator==(const SignVal&, const SignVal&) = default;
};
struct PhVal {
  Dir d;
  friend bool operator==(const PhVal&, const PhVal&) = default;
};
struct TriVal {
  Rat m;  // > 0
  friend bool operator==(const TriVal&, const TriVal&) = default;
};
struct TRVal {
  Rat v;  // != 0
  friend bool operator==(const TRVal&, const TRVal&) = default;
};
struct TCVal {
  Rat m;  // > 0
  Dir d;
  friend bool operator==(const TCVal&, const TCVal&) = default;
};
struct TPhVal {
  Dir d;
  friend bool operator==(const TPhVal&, const TPhVal&) = default;
};
struct TTriVal {
  Rat m;  // > 0
  friend bool operator==(const TTriVal&, const TTriVal&) = default;
};

using ScalarPayload = std::variant<ZeroVal, QVal, QiVal, FpVal, KOneVal, SignVal, PhVal, TriVal,
                                   TRVal, TCVal, TPhVal, TTriVal>;

// An element of F = G ∪ {0} for one tract.
struct Scalar {
  TractId tract;
  ScalarPayload payload;

  bool is_zero() const { return std::holds_alternative<ZeroVal>(payload); }
  friend bool operator==(const Scalar&, const Scalar&) = default;
};

// Factories (all validate their invariants).
Scalar scalar_zero(const TractId& t);
Scalar scalar_one(const TractId& t);
Scalar scalar_neg_one(const TractId& t);
Scalar make_q(const Rat& v);
Scalar make_qi(const GRat& v);
Scalar make_fp(const TractId& t, long long v);  // reduced mod p; 0 -> zero
Scalar make_kone();
Scalar make_sign(int s);  // +1, -1, or 0 (zero)
Scalar make_phase(const Dir& d);
Scalar make_tri(const Rat& m);  // m >= 0; 0 -> zero
Scalar make_tr(const Rat& v);   // 0 -> zero
Scalar make_tc(const Rat& m, const Dir& d);  // m >= 0; 0 -> zero
Scalar make_tph(const Dir& d);
Scalar make_ttri(const Rat& m);  // m >= 0; 0 -> zero

// Group operations. mul/neg/conj are total; inv throws on zero.
Scalar mul(const Scalar& a, const Scalar& b);
Scalar inv(const Scalar& a);
Scalar neg(const Scalar& a);
Scalar conj(const Scalar& a);

// Magnitude for the magnitude-bearing tracts (FieldQ, Triangle, TropReal,
// TropComplex, TropPhase, UltraTriangle); zero -> 0. Throws otherwise.
Rat scalar_magnitude(const Scalar& a);

// Deterministic total order within one tract.
bool scalar_less(const Scalar& a, const Scalar& b);

std::string scalar_format(const Scalar& a);
Scalar scalar_parse(const TractId& t, const std::string& text);

// All elements of F for a finite tract, in canonical order (zero first).
// Throws InfiniteTractError otherwise.
std::vector<Scalar> carrier_elements(const TractId& t);

void require_same_tract(const Scalar& a, const Scalar& b);
void require_tract(const TractId& t, const Scalar& a);

}  // namespace tracts
