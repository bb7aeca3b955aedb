#include "tracts/morphism.hpp"

#include "tracts/errors.hpp"

namespace tracts {

Morphism morphism_kappa(const TractId& source) {
  return {MorphismKind::Kappa, source, tract_krasner()};
}
Morphism morphism_sign() { return {MorphismKind::SignMap, tract_q(), tract_sign()}; }
Morphism morphism_phase() { return {MorphismKind::PhaseMap, tract_qi(), tract_phase()}; }
Morphism morphism_abs_triangle() {
  return {MorphismKind::AbsTriangle, tract_qi(), tract_triangle()};
}
Morphism morphism_sign_tr() { return {MorphismKind::SignTR, tract_tr(), tract_sign()}; }
Morphism morphism_phase_tc() { return {MorphismKind::PhaseTC, tract_tc(), tract_tp()}; }
Morphism morphism_abs_tc() { return {MorphismKind::AbsTC, tract_tc(), tract_ttriangle()}; }
Morphism morphism_include_rc() { return {MorphismKind::IncludeRC, tract_q(), tract_qi()}; }

Morphism parse_morphism(const std::string& name, const TractId& source) {
  if (name == "kappa") return morphism_kappa(source);
  if (name == "sign") return morphism_sign();
  if (name == "ph") return morphism_phase();
  if (name == "abs-triangle") return morphism_abs_triangle();
  if (name == "sign-tr") return morphism_sign_tr();
  if (name == "ph-tc") return morphism_phase_tc();
  if (name == "abs-tc") return morphism_abs_tc();
  if (name == "include-rc") return morphism_include_rc();
  throw std::invalid_argument("unknown morphism '" + name + "'");
}

std::string morphism_name(const Morphism& m) {
  switch (m.kind) {
    case MorphismKind::Kappa: return "kappa";
    case MorphismKind::SignMap: return "sign";
    case MorphismKind::PhaseMap: return "ph";
    case MorphismKind::AbsTriangle: return "abs-triangle";
    case MorphismKind::SignTR: return "sign-tr";
    case MorphismKind::PhaseTC: return "ph-tc";
    case MorphismKind::AbsTC: return "abs-tc";
    case MorphismKind::IncludeRC: return "include-rc";
  }
  throw std::logic_error("unreachable morphism kind");
}

Scalar apply_morphism(const Morphism& m, const Scalar& a) {
  require_tract(m.source, a);
  if (a.is_zero()) return scalar_zero(m.target);
  switch (m.kind) {
    case MorphismKind::Kappa: return make_kone();
    case MorphismKind::SignMap: return make_sign(rat_sign(std::get<QVal>(a.payload).v));
    case MorphismKind::PhaseMap: return make_phase(dir_of(std::get<QiVal>(a.payload).v));
    case MorphismKind::AbsTriangle: {
      const GRat& z = std::get<QiVal>(a.payload).v;
      auto abs = grat_exact_abs(z);
      if (!abs)
        throw MorphismDomainError("modulus of " + format_grat(z) + " is irrational");
      return make_tri(*abs);
    }
    case MorphismKind::SignTR: return make_sign(rat_sign(std::get<TRVal>(a.payload).v));
    case MorphismKind::PhaseTC: return make_tph(std::get<TCVal>(a.payload).d);
    case MorphismKind::AbsTC: return make_ttri(std::get<TCVal>(a.payload).m);
    case MorphismKind::IncludeRC: return make_qi(GRat(std::get<QVal>(a.payload).v));
  }
  throw std::logic_error("unreachable morphism kind");
}

}  // namespace tracts
