#include "tracts/composition.hpp"

#include <algorithm>

#include "tracts/errors.hpp"
#include "tracts/hyperops.hpp"
#include "tracts/matroid.hpp"

namespace tracts {

namespace {

void require_pair(const FVector& x, const FVector& y) {
  if (x.tract != y.tract) throw TractMismatchError("composition across tracts");
  if (x.ground != y.ground) throw ValidationError("composition across ground sets");
}

void require_applicable(CompositionKind k, const TractId& t) {
  if (!composition_applicable(k, t))
    throw UnsupportedTractError("no " + to_string(k) + " composition on tract '" +
                                tract_name(t) + "'");
}

bool magnitude_tract(const TractId& t) {
  switch (t.kind) {
    case TractKind::Triangle:
    case TractKind::TropPhase:
    case TractKind::TropReal:
    case TractKind::TropComplex:
    case TractKind::UltraTriangle: return true;
    default: return false;
  }
}

bool perturbation_tract(const TractId& t) {
  switch (t.kind) {
    case TractKind::Triangle:
    case TractKind::TropReal:
    case TractKind::TropComplex:
    case TractKind::UltraTriangle: return true;
    default: return false;
  }
}

// the positive real unit of magnitude eta, for the perturbation tracts
Scalar positive_unit(const TractId& t, const Rat& eta) {
  switch (t.kind) {
    case TractKind::Triangle: return make_tri(eta);
    case TractKind::TropReal: return make_tr(eta);
    case TractKind::TropComplex: return make_tc(eta, make_dir(1, 0));
    case TractKind::UltraTriangle: return make_ttri(eta);
    default: throw UnsupportedTractError("no positive reals in tract '" + tract_name(t) + "'");
  }
}

}  // namespace

std::string to_string(CompositionKind k) {
  switch (k) {
    case CompositionKind::Inflation: return "inflation";
    case CompositionKind::MaxMagnitude: return "max-magnitude";
    case CompositionKind::Epsilon: return "epsilon";
  }
  return "?";
}

bool composition_applicable(CompositionKind k, const TractId& t) {
  switch (k) {
    case CompositionKind::Inflation: return inflation_property(t).proven_p();
    case CompositionKind::MaxMagnitude: return magnitude_tract(t);
    case CompositionKind::Epsilon: return perturbation_tract(t);
  }
  return false;
}

CompositionOp composition_op(CompositionKind k) {
  const TractId all[] = {tract_q(),        tract_qi(), tract_krasner(), tract_sign(),
                         tract_phase(),    tract_triangle(), tract_tr(), tract_tc(),
                         tract_tp(),       tract_ttriangle()};
  CompositionOp op{k, {}};
  for (const TractId& t : all)
    if (composition_applicable(k, t)) op.applicable_tracts.push_back(t);
  return op;
}

FVector compose_inflation(const FVector& x, const FVector& y) {
  require_pair(x, y);
  require_applicable(CompositionKind::Inflation, x.tract);
  std::vector<Scalar> entries;
  entries.reserve(x.entries.size());
  for (size_t i = 0; i < x.entries.size(); ++i)
    entries.push_back(x.entries[i].is_zero() ? y.entries[i] : x.entries[i]);
  return make_fvector(x.tract, x.ground, std::move(entries));
}

FVector compose_max(const FVector& x, const FVector& y) {
  require_pair(x, y);
  require_applicable(CompositionKind::MaxMagnitude, x.tract);
  std::vector<Scalar> entries;
  entries.reserve(x.entries.size());
  for (size_t i = 0; i < x.entries.size(); ++i) {
    bool keep_x = !(scalar_magnitude(x.entries[i]) < scalar_magnitude(y.entries[i]));
    entries.push_back(keep_x ? x.entries[i] : y.entries[i]);
  }
  return make_fvector(x.tract, x.ground, std::move(entries));
}

FVector compose_at_eta(const FVector& x, const FVector& y, const Rat& eta) {
  require_pair(x, y);
  require_applicable(CompositionKind::Epsilon, x.tract);
  if (!(eta > 0)) throw ValidationError("perturbation scale must be positive");
  Scalar unit = positive_unit(x.tract, eta);
  std::vector<Scalar> entries;
  entries.reserve(x.entries.size());
  for (size_t i = 0; i < x.entries.size(); ++i)
    entries.push_back(x.entries[i].is_zero() ? mul(unit, y.entries[i]) : x.entries[i]);
  return make_fvector(x.tract, x.ground, std::move(entries));
}

std::optional<Rat> epsilon_threshold(const FVector& x, const FVector& y,
                                     const std::vector<FVector>& circuits) {
  require_pair(x, y);
  require_applicable(CompositionKind::Epsilon, x.tract);
  std::optional<Rat> bound;
  auto shrink = [&bound](const Rat& v) {
    if (!bound || v < *bound) bound = v;
  };
  for (size_t i = 0; i < x.entries.size(); ++i)
    if (!x.entries[i].is_zero() && !y.entries[i].is_zero())
      shrink(scalar_magnitude(x.entries[i]) / scalar_magnitude(y.entries[i]));
  for (const FVector& c : circuits) {
    require_pair(x, c);
    Rat d(0);
    for (size_t i = 0; i < x.entries.size(); ++i) {
      Rat prod = scalar_magnitude(x.entries[i]) * scalar_magnitude(c.entries[i]);
      if (d < prod) d = prod;
    }
    if (d == 0) continue;  // circuit misses the support of x
    for (size_t i = 0; i < x.entries.size(); ++i)
      if (x.entries[i].is_zero() && !c.entries[i].is_zero() && !y.entries[i].is_zero())
        shrink(d / (scalar_magnitude(y.entries[i]) * scalar_magnitude(c.entries[i])));
  }
  return bound;
}

std::vector<FVector> compose_epsilon(const FVector& x, const FVector& y,
                                     const std::vector<FVector>& circuits) {
  std::optional<Rat> eps = epsilon_threshold(x, y, circuits);
  std::vector<Rat> etas =
      eps ? std::vector<Rat>{*eps / 2, *eps / 4} : std::vector<Rat>{Rat(1), Rat(1) / 2};
  std::vector<FVector> out;
  for (const Rat& eta : etas) {
    FVector z = compose_at_eta(x, y, eta);
    if (std::find(out.begin(), out.end(), z) == out.end()) out.push_back(std::move(z));
  }
  return out;
}

namespace {

PropertyVerdict run_axiom_check(
    const std::function<std::vector<FVector>(const CompositionSample&)>& composites,
    const TractId& t, const std::vector<CompositionSample>& samples) {
  for (const CompositionSample& s : samples) {
    for (const FVector* v : {&s.x1, &s.x2, &s.z})
      if (v->tract != t) throw TractMismatchError("sample outside the checked tract");
    require_pair(s.x1, s.x2);
    require_pair(s.x1, s.z);
    auto triple = [&s]() {
      return "x1=" + format_fvector(s.x1) + ", x2=" + format_fvector(s.x2) +
             ", z=" + format_fvector(s.z);
    };
    std::vector<FVector> ys = composites(s);
    if (ys.empty()) return PropertyVerdict::refuted(triple() + ": empty composition");
    uint32_t want = support_mask(s.x1) | support_mask(s.x2);
    bool premise = is_orthogonal(s.x1, s.z) && is_orthogonal(s.x2, s.z);
    for (const FVector& yv : ys) {
      if (support_mask(yv) != want)
        return PropertyVerdict::refuted(triple() + ": composite " + format_fvector(yv) +
                                        " has support off the union");
      if (premise && !is_orthogonal(yv, s.z))
        return PropertyVerdict::refuted(triple() + ": composite " + format_fvector(yv) +
                                        " not orthogonal");
    }
  }
  return PropertyVerdict::proven(std::to_string(samples.size()) + " sample triples verified");
}

}  // namespace

PropertyVerdict check_composition_axioms(const CompositionOp& op, const TractId& t,
                                         const std::vector<CompositionSample>& samples) {
  require_applicable(op.kind, t);
  auto composites = [&op](const CompositionSample& s) -> std::vector<FVector> {
    switch (op.kind) {
      case CompositionKind::Inflation: return {compose_inflation(s.x1, s.x2)};
      case CompositionKind::MaxMagnitude: return {compose_max(s.x1, s.x2)};
      case CompositionKind::Epsilon: return compose_epsilon(s.x1, s.x2, {s.z});
    }
    return {};
  };
  return run_axiom_check(composites, t, samples);
}

PropertyVerdict check_composition_axioms(const CompositionFn& compose, const TractId& t,
                                         const std::vector<CompositionSample>& samples) {
  auto composites = [&compose](const CompositionSample& s) { return compose(s.x1, s.x2); };
  return run_axiom_check(composites, t, samples);
}

std::vector<std::set<std::string>> flats_via_composition(const FMatroid& m) {
  CompositionKind kind;
  if (composition_applicable(CompositionKind::Inflation, m.tract))
    kind = CompositionKind::Inflation;
  else if (composition_applicable(CompositionKind::MaxMagnitude, m.tract))
    kind = CompositionKind::MaxMagnitude;
  else
    throw UnsupportedTractError("no composition operation known for tract '" +
                                tract_name(m.tract) + "'");
  uint32_t full = m.ground.size() >= 32 ? ~uint32_t(0) : (uint32_t(1) << m.ground.size()) - 1;
  std::vector<std::set<std::string>> out;
  for (const std::set<std::string>& flat : flats(m.underlying)) {
    uint32_t complement = full & ~mask_of_labels(m.ground, flat);
    FVector z = fvector_zero(m.tract, m.ground);
    for (const FVector& c : m.cocircuit_reps)
      if ((support_mask(c) & ~complement) == 0)
        z = kind == CompositionKind::Inflation ? compose_inflation(z, c) : compose_max(z, c);
    if (support_mask(z) != complement)
      throw ValidationError("complement of a flat not covered by cocircuits");
    if (!is_covector(m, z))
      throw ValidationError("composition of cocircuits left the covector set");
    out.push_back(zero_set(z));
  }
  std::sort(out.begin(), out.end());
  return out;
}

PropertyVerdict perfection_probe(const FMatroid& m, const std::vector<FVector>& candidates,
                                 size_t max_enum) {
  size_t n = m.ground.size();
  unsigned long q = tract_carrier_size(m.tract);
  bool full_scan = q != 0;
  size_t total = 1;
  if (full_scan)
    for (size_t i = 0; i < n && full_scan; ++i) {
      if (total > max_enum / q) full_scan = false;
      total *= q;
    }
  if (full_scan) {
    std::vector<FVector> vectors = enumerate_vectors(m, max_enum);
    std::vector<Scalar> carrier = carrier_elements(m.tract);
    std::vector<size_t> idx(n, 0);
    while (true) {
      std::vector<Scalar> entries;
      entries.reserve(n);
      for (size_t i = 0; i < n; ++i) entries.push_back(carrier[idx[i]]);
      FVector x = make_fvector(m.tract, m.ground, std::move(entries));
      bool perp_all = in_perp(x, vectors);
      bool cov = is_covector(m, x);
      if (perp_all && !cov)
        return PropertyVerdict::refuted(format_fvector(x) +
                                        " is orthogonal to every vector but is not a covector");
      if (cov && !perp_all) {
        for (const FVector& v : vectors)
          if (!is_orthogonal(v, x))
            return PropertyVerdict::refuted("covector " + format_fvector(x) +
                                            " is not orthogonal to vector " + format_fvector(v));
      }
      size_t pos = 0;
      while (pos < n && ++idx[pos] == carrier.size()) idx[pos++] = 0;
      if (pos == n) break;
    }
    return PropertyVerdict::proven("all " + std::to_string(total) + " candidates against " +
                                   std::to_string(vectors.size()) + " vectors");
  }
  std::vector<const FVector*> vecs, covs;
  for (const FVector& c : candidates) {
    if (is_vector(m, c)) vecs.push_back(&c);
    if (is_covector(m, c)) covs.push_back(&c);
  }
  for (const FVector* v : vecs)
    for (const FVector* w : covs)
      if (!is_orthogonal(*v, *w))
        return PropertyVerdict::refuted("vector " + format_fvector(*v) +
                                        " and covector " + format_fvector(*w) +
                                        " are not orthogonal");
  return PropertyVerdict::unknown("checked " + std::to_string(vecs.size()) + " vectors against " +
                                  std::to_string(covs.size()) + " covectors from " +
                                  std::to_string(candidates.size()) + " candidates");
}

}  // namespace tracts
