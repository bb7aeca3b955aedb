#include "tracts/fmatroid.hpp"

#include <algorithm>
#include <bit>
#include <map>

#include "tracts/errors.hpp"
#include "tracts/hyperops.hpp"

namespace tracts {

std::string to_string(AxiomMode m) {
  switch (m) {
    case AxiomMode::Unchecked: return "unchecked";
    case AxiomMode::Weak: return "weak";
    case AxiomMode::Strong: return "strong";
  }
  return "?";
}

namespace {

const FVector* rep_for_support(const std::vector<FVector>& reps, uint32_t mask) {
  for (const FVector& r : reps)
    if (support_mask(r) == mask) return &r;
  return nullptr;
}

// reduced rows over one basis, from the circuit representatives:
// R_j(e) = -(Y(j) Y(e)^{-1})^c with Y the circuit supported in B ∪ {e}
std::vector<FVector> rref_rows(const TractId& t, const GroundSet& g,
                               const std::vector<FVector>& reps, const Matroid& underlying,
                               uint32_t bmask) {
  size_t n = g.size();
  std::vector<size_t> bpos;
  for (size_t i = 0; i < n; ++i)
    if (bmask & (1u << i)) bpos.push_back(i);

  std::vector<std::vector<Scalar>> rows(bpos.size(),
                                        std::vector<Scalar>(n, scalar_zero(t)));
  for (size_t bi = 0; bi < bpos.size(); ++bi) rows[bi][bpos[bi]] = scalar_one(t);

  for (size_t e = 0; e < n; ++e) {
    if (bmask & (1u << e)) continue;
    uint32_t cmask = fundamental_circuit_mask(underlying, e, bmask);
    const FVector* y = rep_for_support(reps, cmask);
    if (!y) throw ValidationError("no circuit representative with the fundamental support");
    Scalar at_e_inv = inv((*y)[e]);
    for (size_t bi = 0; bi < bpos.size(); ++bi) {
      const Scalar& yj = (*y)[bpos[bi]];
      if (yj.is_zero()) continue;
      rows[bi][e] = neg(conj(mul(yj, at_e_inv)));
    }
  }

  std::vector<FVector> out;
  for (auto& r : rows) out.push_back(make_fvector(t, g, std::move(r)));
  return out;
}

// eager caches: per-basis reduced rows, and the cocircuit representatives they
// generate. Rows with the same support must agree after normalization.
void populate_caches(FMatroid& m) {
  std::map<uint32_t, FVector> by_support;
  for (uint32_t bmask : m.underlying.basis_list) {
    std::vector<FVector> rows = rref_rows(m.tract, m.ground, m.circuit_reps, m.underlying, bmask);
    std::vector<std::string> blabels;
    for (size_t i = 0; i < m.ground.size(); ++i)
      if (bmask & (1u << i)) blabels.push_back(m.ground.labels[i]);
    for (const FVector& row : rows) {
      FVector nr = normalize_rep(row);
      auto [it, fresh] = by_support.emplace(support_mask(row), nr);
      if (!fresh && !(it->second == nr))
        throw ValidationError("reduced rows disagree across bases");
    }
    m.basis_rrefs.push_back(Rref{std::move(blabels), std::move(rows)});
  }

  std::vector<uint32_t> want = cocircuit_masks(m.underlying);
  std::sort(want.begin(), want.end());
  std::vector<uint32_t> got;
  for (const auto& [mask, rep] : by_support) got.push_back(mask);
  if (want != got) throw ValidationError("reduced rows do not realize every dual circuit support");

  for (auto& [mask, rep] : by_support) m.cocircuit_reps.push_back(std::move(rep));
  std::sort(m.cocircuit_reps.begin(), m.cocircuit_reps.end(), fvector_less);
}

// normalize, require unique supports (identical duplicates collapse), sort
std::vector<FVector> ingest_reps(std::vector<FVector> reps) {
  for (FVector& r : reps) {
    if (r.is_zero()) throw ValidationError("zero circuit representative");
    r = normalize_rep(r);
  }
  std::sort(reps.begin(), reps.end(), fvector_less);
  reps.erase(std::unique(reps.begin(), reps.end()), reps.end());
  for (size_t i = 0; i + 1 < reps.size(); ++i)
    if (support_mask(reps[i]) == support_mask(reps[i + 1]))
      throw ValidationError("two circuit representatives share a support but are not proportional");
  return reps;
}

FMatroid assemble(const TractId& t, const GroundSet& g, std::vector<FVector> reps,
                  Matroid underlying, AxiomMode mode) {
  FMatroid m;
  m.tract = t;
  m.ground = g;
  m.circuit_reps = std::move(reps);
  m.underlying = std::move(underlying);
  m.checked_mode = mode;
  populate_caches(m);
  return m;
}

std::vector<uint32_t> support_masks(const std::vector<FVector>& reps) {
  std::vector<uint32_t> out;
  for (const FVector& r : reps) out.push_back(support_mask(r));
  return out;
}

bool tract_is_field(const TractId& t) {
  return t.kind == TractKind::FieldQ || t.kind == TractKind::FieldQi ||
         t.kind == TractKind::FieldFp;
}

}  // namespace

FMatroid from_circuit_reps(const TractId& t, const GroundSet& ground,
                           std::vector<FVector> reps, const FMatroidOptions& opts) {
  for (const FVector& r : reps) {
    if (!(r.tract == t)) throw TractMismatchError("representative over a different tract");
    if (!(r.ground == ground)) throw ValidationError("representative over a different ground set");
  }
  reps = ingest_reps(std::move(reps));
  Matroid underlying = from_circuit_masks(ground, support_masks(reps), opts.validate_supports);
  if (opts.check_mode != AxiomMode::Unchecked) {
    PropertyVerdict v = check_circuit_axioms(t, ground, reps, opts.check_mode, opts.max_enum);
    if (v.refuted_p()) throw ValidationError("circuit axioms fail: " + v.witness);
    if (v.unknown_p()) throw EnumLimitError("circuit axiom check exceeded budget: " + v.search_bound);
  }
  return assemble(t, ground, std::move(reps), std::move(underlying), opts.check_mode);
}

FMatroid from_subspace(const FieldMatrix& mat) {
  return from_subspace(mat, numbered_ground(static_cast<int>(mat.cols)));
}

FMatroid from_subspace(const FieldMatrix& mat, const GroundSet& ground) {
  if (!tract_is_field(mat.tract)) throw UnsupportedTractError("subspace construction needs a field");
  if (ground.size() != mat.cols) throw ValidationError("ground size must match column count");
  if (ground.size() > 12) throw ValidationError("ground sets larger than 12 are unsupported");
  size_t r = mat.rows;
  if (static_cast<size_t>(rank(mat)) != r) throw ValidationError("generator matrix is rank-deficient");

  // independent column r-subsets are the bases of the underlying matroid
  std::vector<uint32_t> bases_masks;
  for (uint32_t s = 0; s < (1u << mat.cols); ++s)
    if (static_cast<size_t>(std::popcount(s)) == r &&
        static_cast<size_t>(column_rank(mat, s)) == r)
      bases_masks.push_back(s);

  std::vector<FVector> reps;
  std::vector<FVector> eliminated_rows;
  for (uint32_t bmask : bases_masks) {
    std::vector<size_t> bpos;
    for (size_t c = 0; c < mat.cols; ++c)
      if (bmask & (1u << c)) bpos.push_back(c);
    std::vector<std::vector<Scalar>> rows = reduce_against_basis(mat, bmask);
    for (const auto& row : rows) eliminated_rows.push_back(make_fvector(mat.tract, ground, row));
    for (size_t e = 0; e < mat.cols; ++e) {
      if (bmask & (1u << e)) continue;
      std::vector<Scalar> x(mat.cols, scalar_zero(mat.tract));
      x[e] = scalar_one(mat.tract);
      for (size_t bi = 0; bi < bpos.size(); ++bi) x[bpos[bi]] = neg(conj(rows[bi][e]));
      reps.push_back(make_fvector(mat.tract, ground, std::move(x)));
    }
  }
  reps = ingest_reps(std::move(reps));
  Matroid underlying = from_circuit_masks(ground, support_masks(reps), true);
  FMatroid m = assemble(mat.tract, ground, std::move(reps), std::move(underlying),
                        AxiomMode::Unchecked);

  // the reduced-row reconstruction must reproduce the eliminated rows
  if (!(dedupe_reps(std::move(eliminated_rows)) == m.cocircuit_reps))
    throw ValidationError("reduced-row reconstruction disagrees with elimination");
  return m;
}

FMatroid rank1_from_phi(const FVector& phi) {
  if (phi.is_zero()) throw ValidationError("rank-1 construction needs a nonzero vector");
  const TractId& t = phi.tract;
  const GroundSet& g = phi.ground;
  size_t n = g.size();
  std::vector<FVector> reps;
  for (size_t i = 0; i < n; ++i) {
    if (phi[i].is_zero()) {
      std::vector<Scalar> x(n, scalar_zero(t));
      x[i] = scalar_one(t);
      reps.push_back(make_fvector(t, g, std::move(x)));
      continue;
    }
    for (size_t j = i + 1; j < n; ++j) {
      if (phi[j].is_zero()) continue;
      // two-point circuit annihilating phi: values conj(phi(i))^{-1}, -conj(phi(j))^{-1}
      std::vector<Scalar> x(n, scalar_zero(t));
      x[i] = conj(inv(phi[i]));
      x[j] = neg(conj(inv(phi[j])));
      reps.push_back(make_fvector(t, g, std::move(x)));
    }
  }
  reps = ingest_reps(std::move(reps));
  Matroid underlying = from_circuit_masks(g, support_masks(reps), true);
  FMatroid m = assemble(t, g, std::move(reps), std::move(underlying), AxiomMode::Unchecked);
  if (!(m.cocircuit_reps == std::vector<FVector>{normalize_rep(phi)}))
    throw ValidationError("rank-1 cocircuit line does not recover the defining vector");
  return m;
}

FVector fundamental_circuit(const FMatroid& m, const std::string& e,
                            const std::set<std::string>& basis) {
  size_t epos = m.ground.index(e);
  uint32_t bmask = mask_of_labels(m.ground, basis);
  if (!is_basis(m.underlying, bmask)) throw ValidationError("not a basis");
  if (bmask & (1u << epos)) throw ValidationError("element lies in the basis");
  uint32_t cmask = fundamental_circuit_mask(m.underlying, epos, bmask);
  const FVector* rep = rep_for_support(m.circuit_reps, cmask);
  if (!rep) throw ValidationError("no circuit representative with the fundamental support");
  return scalar_mul(inv((*rep)[epos]), *rep);
}

const Rref& cocircuit_rref(const FMatroid& m, const std::set<std::string>& basis) {
  uint32_t bmask = mask_of_labels(m.ground, basis);
  auto it = std::lower_bound(m.underlying.basis_list.begin(), m.underlying.basis_list.end(), bmask);
  if (it == m.underlying.basis_list.end() || *it != bmask)
    throw ValidationError("not a basis");
  return m.basis_rrefs[static_cast<size_t>(it - m.underlying.basis_list.begin())];
}

FMatroid dual(const FMatroid& m) {
  FMatroid d = assemble(m.tract, m.ground, m.cocircuit_reps, dual(m.underlying), m.checked_mode);
  if (!(d.cocircuit_reps == m.circuit_reps))
    throw ValidationError("double dual does not return the original circuits");
  return d;
}

bool is_covector(const FMatroid& m, const FVector& x) {
  if (!(x.tract == m.tract)) throw TractMismatchError("covector query over a different tract");
  if (!(x.ground == m.ground)) throw ValidationError("covector query over a different ground set");
  return in_perp(x, m.circuit_reps);
}

bool is_covector_rref(const FMatroid& m, const FVector& x) {
  if (!(x.tract == m.tract)) throw TractMismatchError("covector query over a different tract");
  if (!(x.ground == m.ground)) throw ValidationError("covector query over a different ground set");
  size_t n = m.ground.size();
  for (size_t bi = 0; bi < m.underlying.basis_list.size(); ++bi) {
    uint32_t bmask = m.underlying.basis_list[bi];
    const Rref& rr = m.basis_rrefs[bi];
    std::vector<size_t> bpos;
    for (size_t i = 0; i < n; ++i)
      if (bmask & (1u << i)) bpos.push_back(i);
    for (size_t e = 0; e < n; ++e) {
      if (bmask & (1u << e)) continue;
      std::vector<Scalar> terms;
      for (size_t k = 0; k < bpos.size(); ++k) {
        if (x[bpos[k]].is_zero()) continue;
        terms.push_back(mul(x[bpos[k]], rr.rows[k][e]));
      }
      if (!in_hypersum(x[e], terms)) return false;
    }
  }
  return true;
}

bool is_vector(const FMatroid& m, const FVector& x) {
  if (!(x.tract == m.tract)) throw TractMismatchError("vector query over a different tract");
  if (!(x.ground == m.ground)) throw ValidationError("vector query over a different ground set");
  return in_perp(x, m.cocircuit_reps);
}

std::vector<FVector> enumerate_covectors(const FMatroid& m, size_t max_enum) {
  if (!tract_finite(m.tract)) throw InfiniteTractError("exhaustive scan needs a finite tract");
  std::vector<Scalar> carrier = carrier_elements(m.tract);
  size_t n = m.ground.size();
  size_t total = 1;
  for (size_t i = 0; i < n; ++i) {
    total *= carrier.size();
    if (total > max_enum) throw EnumLimitError("carrier^ground exceeds the enumeration limit");
  }
  std::vector<FVector> out;
  std::vector<size_t> idx(n, 0);
  for (size_t count = 0; count < total; ++count) {
    std::vector<Scalar> entries;
    for (size_t i = 0; i < n; ++i) entries.push_back(carrier[idx[i]]);
    FVector x = make_fvector(m.tract, m.ground, std::move(entries));
    if (is_covector(m, x)) out.push_back(std::move(x));
    for (size_t i = n; i-- > 0;) {
      if (++idx[i] < carrier.size()) break;
      idx[i] = 0;
    }
  }
  std::sort(out.begin(), out.end(), fvector_less);
  return out;
}

std::vector<FVector> enumerate_vectors(const FMatroid& m, size_t max_enum) {
  return enumerate_covectors(dual(m), max_enum);
}

FMatroid delete_elements(const FMatroid& m, const std::set<std::string>& a) {
  uint32_t amask = mask_of_labels(m.ground, a);
  if (a.size() == m.ground.size()) throw ValidationError("cannot remove the entire ground set");
  std::vector<FVector> reps;
  for (const FVector& r : m.circuit_reps)
    if ((support_mask(r) & amask) == 0) reps.push_back(restrict_away(r, a));
  GroundSet g = reps.empty()
                    ? restrict_away(fvector_zero(m.tract, m.ground), a).ground
                    : reps.front().ground;
  reps = ingest_reps(std::move(reps));
  Matroid underlying = from_circuit_masks(g, support_masks(reps), true);
  return assemble(m.tract, g, std::move(reps), std::move(underlying), m.checked_mode);
}

FMatroid contract(const FMatroid& m, const std::set<std::string>& a) {
  mask_of_labels(m.ground, a);
  if (a.size() == m.ground.size()) throw ValidationError("cannot remove the entire ground set");
  std::vector<FVector> cut;
  for (const FVector& r : m.circuit_reps) {
    FVector x = restrict_away(r, a);
    if (!x.is_zero()) cut.push_back(std::move(x));
  }
  GroundSet g = restrict_away(fvector_zero(m.tract, m.ground), a).ground;
  std::vector<FVector> reps = ingest_reps(minsupp(cut));
  Matroid underlying = from_circuit_masks(g, support_masks(reps), true);
  return assemble(m.tract, g, std::move(reps), std::move(underlying), m.checked_mode);
}

FMatroid pushforward(const FMatroid& m, const Morphism& f) {
  if (!(f.source == m.tract)) throw TractMismatchError("morphism source mismatch");
  std::vector<FVector> reps;
  for (const FVector& r : m.circuit_reps) {
    std::vector<Scalar> entries;
    for (const Scalar& s : r.entries) entries.push_back(apply_morphism(f, s));
    reps.push_back(make_fvector(f.target, m.ground, std::move(entries)));
  }
  reps = ingest_reps(std::move(reps));
  return assemble(f.target, m.ground, std::move(reps), m.underlying, m.checked_mode);
}

PropertyVerdict check_circuit_axioms(const TractId& t, const GroundSet& ground,
                                     const std::vector<FVector>& raw, AxiomMode mode,
                                     size_t max_enum) {
  if (mode == AxiomMode::Unchecked) return PropertyVerdict::proven("nothing checked");
  std::vector<FVector> reps;
  for (const FVector& r : raw) {
    if (r.is_zero()) return PropertyVerdict::refuted("zero vector among representatives");
    if (!(r.tract == t) || !(r.ground == ground))
      throw ValidationError("representative over a different tract or ground set");
    reps.push_back(normalize_rep(r));
  }
  Matroid underlying = from_circuit_masks(ground, support_masks(reps), true);

  size_t instances = 0;
  size_t kmax = mode == AxiomMode::Weak ? 1 : (reps.empty() ? 0 : reps.size() - 1);
  std::vector<uint32_t> supp;
  for (const FVector& r : reps) supp.push_back(support_mask(r));

  size_t nreps = reps.size();
  for (uint32_t subset = 1; subset < (1u << nreps); ++subset) {
    size_t sz = static_cast<size_t>(std::popcount(subset));
    if (sz < 2 || sz > kmax + 1) continue;
    std::vector<size_t> members;
    for (size_t i = 0; i < nreps; ++i)
      if (subset & (1u << i)) members.push_back(i);
    std::vector<uint32_t> fam_supports;
    for (size_t i : members) fam_supports.push_back(supp[i]);
    if (!is_modular_family(underlying, fam_supports)) continue;

    for (size_t xi : members) {
      const FVector& x = reps[xi];
      std::vector<size_t> others;
      uint32_t union_others = 0;
      for (size_t i : members)
        if (i != xi) {
          others.push_back(i);
          union_others |= supp[i];
        }
      if ((supp[xi] & ~union_others) == 0) continue;

      // admissible separating coordinates per member
      std::vector<std::vector<size_t>> choices;
      bool vacuous = false;
      for (size_t j = 0; j < others.size(); ++j) {
        uint32_t rest = 0;
        for (size_t l = 0; l < others.size(); ++l)
          if (l != j) rest |= supp[others[l]];
        uint32_t cand = supp[xi] & supp[others[j]] & ~rest;
        if (cand == 0) {
          vacuous = true;
          break;
        }
        std::vector<size_t> positions;
        for (size_t p = 0; p < ground.size(); ++p)
          if (cand & (1u << p)) positions.push_back(p);
        choices.push_back(std::move(positions));
      }
      if (vacuous) continue;

      std::vector<size_t> pick(choices.size(), 0);
      while (true) {
        if (++instances > max_enum)
          return PropertyVerdict::unknown("stopped after " + std::to_string(max_enum) +
                                          " elimination instances");
        std::vector<Scalar> e_vals(choices.size());
        std::vector<FVector> terms{x};
        uint32_t epins = 0;
        for (size_t j = 0; j < choices.size(); ++j) {
          size_t ep = choices[j][pick[j]];
          epins |= (1u << ep);
          Scalar target = neg(x[ep]);
          terms.push_back(scalar_mul(mul(target, inv(reps[others[j]][ep])), reps[others[j]]));
        }
        uint32_t forced = supp[xi] & ~union_others;
        size_t fpos = static_cast<size_t>(std::countr_zero(forced));
        bool found = false;
        for (const FVector& w : reps) {
          uint32_t wmask = support_mask(w);
          if (wmask & epins) continue;
          if (!(wmask & (1u << fpos))) continue;
          FVector z = scalar_mul(mul(x[fpos], inv(w[fpos])), w);
          if (vec_in_hypersum(z, terms)) {
            found = true;
            break;
          }
        }
        if (!found) {
          std::string witness = "no eliminant for X=" + format_fvector(x);
          for (size_t j = 0; j < choices.size(); ++j)
            witness += ", X" + std::to_string(j + 1) + "=" + format_fvector(terms[j + 1]) +
                       " at " + ground.labels[choices[j][pick[j]]];
          return PropertyVerdict::refuted(witness);
        }
        size_t j = 0;
        for (; j < choices.size(); ++j) {
          if (++pick[j] < choices[j].size()) break;
          pick[j] = 0;
        }
        if (j == choices.size()) break;
      }
    }
  }
  return PropertyVerdict::proven("checked " + std::to_string(instances) +
                                 " elimination instances exhaustively");
}

bool is_loop(const FMatroid& m, const std::string& e) {
  m.ground.index(e);
  return loops(m.underlying).count(e) > 0;
}

bool is_coloop(const FMatroid& m, const std::string& e) {
  m.ground.index(e);
  return coloops(m.underlying).count(e) > 0;
}

namespace {

// per-coordinate members of x(e) ⊞ y(e): exact for finite tracts, a sound
// candidate subset otherwise
std::vector<Scalar> pair_sum_members(const TractId& t, const Scalar& a, const Scalar& b,
                                     bool* exact) {
  if (tract_finite(t)) {
    *exact = true;
    std::vector<Scalar> out;
    for (const Scalar& v : carrier_elements(t))
      if (in_hypersum(v, {a, b})) out.push_back(v);
    return out;
  }
  *exact = false;
  std::vector<Scalar> cands = pair_sum_candidates(a, b);
  std::sort(cands.begin(), cands.end(), scalar_less);
  cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
  return cands;
}

PropertyVerdict scan_hypersum_for_covector(const FMatroid& m,
                                           const std::vector<std::vector<Scalar>>& grid,
                                           bool exact, size_t max_enum, bool want_all) {
  size_t total = 1;
  for (const auto& g : grid) {
    total *= g.size();
    if (total > max_enum)
      return PropertyVerdict::unknown("grid larger than " + std::to_string(max_enum));
  }
  size_t n = grid.size();
  std::vector<size_t> idx(n, 0);
  for (size_t count = 0; count < total; ++count) {
    std::vector<Scalar> entries;
    for (size_t i = 0; i < n; ++i) entries.push_back(grid[i][idx[i]]);
    FVector z = make_fvector(m.tract, m.ground, std::move(entries));
    bool member = is_covector(m, z);
    if (want_all && !member)
      return PropertyVerdict::refuted("hypersum element outside the covector set: " +
                                      format_fvector(z));
    if (!want_all && member)
      return PropertyVerdict::proven("witness " + format_fvector(z));
    for (size_t i = n; i-- > 0;) {
      if (++idx[i] < grid[i].size()) break;
      idx[i] = 0;
    }
  }
  if (want_all)
    return PropertyVerdict::proven("all " + std::to_string(total) + " grid points verified" +
                                   (exact ? " (exact)" : " (grid only)"));
  if (exact)
    return PropertyVerdict::refuted("no element of the hypersum is a covector (" +
                                    std::to_string(total) + " points, exhaustive)");
  return PropertyVerdict::unknown("searched a candidate grid of " + std::to_string(total) +
                                  " points");
}

}  // namespace

PropertyVerdict property_check(const FMatroid& m, VectorProperty which, const FVector& x,
                               const FVector& y, const std::optional<std::string>& e,
                               const std::optional<Scalar>& alpha, size_t max_enum) {
  if (!is_covector(m, x) || !is_covector(m, y))
    throw ValidationError("property check needs two covectors");
  bool exact = true;
  std::vector<std::vector<Scalar>> grid;
  for (size_t i = 0; i < m.ground.size(); ++i) {
    bool coord_exact = true;
    grid.push_back(pair_sum_members(m.tract, x[i], y[i], &coord_exact));
    exact = exact && coord_exact;
  }
  if (which == VectorProperty::Elimination) {
    if (!e) throw ValidationError("elimination needs a coordinate");
    size_t ep = m.ground.index(*e);
    if (!(x[ep] == neg(y[ep])))
      throw ValidationError("elimination needs opposite values at the coordinate");
    grid[ep] = {scalar_zero(m.tract)};
  } else if (which == VectorProperty::AdditiveClosure) {
    if (!e || !alpha) throw ValidationError("additive closure needs a coordinate and a value");
    size_t ep = m.ground.index(*e);
    require_tract(m.tract, *alpha);
    if (!in_hypersum(*alpha, {x[ep], y[ep]}))
      throw ValidationError("target value does not lie in the coordinate hypersum");
    grid[ep] = {*alpha};
  }
  return scan_hypersum_for_covector(m, grid, exact, max_enum, false);
}

PropertyVerdict tropical_closure_check(const FMatroid& m, const FVector& x1, const FVector& x2,
                                       size_t max_enum) {
  if (m.tract.kind != TractKind::TropReal && m.tract.kind != TractKind::TropComplex &&
      m.tract.kind != TractKind::UltraTriangle)
    throw UnsupportedTractError("closure check applies to the three tropical-style tracts");
  if (!is_covector(m, x1) || !is_covector(m, x2))
    throw ValidationError("closure check needs two covectors");
  size_t ties = 0;
  for (size_t i = 0; i < m.ground.size(); ++i)
    if (!x1[i].is_zero() && !x2[i].is_zero() && !(x1[i] == x2[i]) &&
        scalar_magnitude(x1[i]) == scalar_magnitude(x2[i]))
      ++ties;
  if (ties > 1)
    throw ValidationError("more than one coordinate with tied magnitude and distinct values");
  bool exact = true;
  std::vector<std::vector<Scalar>> grid;
  for (size_t i = 0; i < m.ground.size(); ++i) {
    bool coord_exact = true;
    grid.push_back(pair_sum_members(m.tract, x1[i], x2[i], &coord_exact));
    exact = exact && coord_exact;
  }
  return scan_hypersum_for_covector(m, grid, exact, max_enum, true);
}

bool verify_dependence_witness(const std::vector<Scalar>& coeffs,
                               const std::vector<FVector>& xs) {
  if (coeffs.size() != xs.size()) throw ValidationError("one coefficient per vector");
  if (xs.empty()) return false;
  bool any = false;
  for (const Scalar& c : coeffs) any = any || !c.is_zero();
  if (!any) return false;
  std::vector<FVector> terms;
  for (size_t i = 0; i < xs.size(); ++i) {
    if (!(xs[i].tract == xs[0].tract) || !(xs[i].ground == xs[0].ground))
      throw ValidationError("vectors over mismatched tract or ground set");
    require_tract(xs[0].tract, coeffs[i]);
    terms.push_back(scalar_mul(coeffs[i], xs[i]));
  }
  return vec_in_hypersum(fvector_zero(xs[0].tract, xs[0].ground), terms);
}

PropertyVerdict search_dependence(const std::vector<FVector>& xs, size_t max_enum) {
  if (xs.empty()) return PropertyVerdict::refuted("empty family");
  const TractId& t = xs[0].tract;
  size_t k = xs.size();

  // coefficient pools; the first nonzero coefficient may be fixed to 1 since
  // the predicate is invariant under global scaling
  std::vector<Scalar> pool;
  bool exact = tract_finite(t);
  if (exact) {
    pool = carrier_elements(t);
  } else {
    std::vector<Scalar> ratios{scalar_one(t)};
    for (size_t j = 0; j < k; ++j)
      for (size_t l = 0; l < k; ++l) {
        if (j == l) continue;
        for (size_t e = 0; e < xs[0].ground.size(); ++e)
          if (!xs[j][e].is_zero() && !xs[l][e].is_zero())
            ratios.push_back(mul(neg(xs[l][e]), inv(xs[j][e])));
      }
    std::sort(ratios.begin(), ratios.end(), scalar_less);
    ratios.erase(std::unique(ratios.begin(), ratios.end()), ratios.end());
    pool.push_back(scalar_zero(t));
    for (const Scalar& a : ratios)
      for (const Scalar& b : ratios) pool.push_back(mul(a, b));
    for (const Scalar& a : ratios) pool.push_back(a);
    std::sort(pool.begin(), pool.end(), scalar_less);
    pool.erase(std::unique(pool.begin(), pool.end()), pool.end());
  }

  size_t tried = 0;
  for (size_t lead = 0; lead < k; ++lead) {
    // coefficients before lead are zero, coefficient at lead is one
    size_t tail = k - lead - 1;
    size_t total = 1;
    bool over = false;
    for (size_t i = 0; i < tail; ++i) {
      total *= pool.size();
      if (total > max_enum) {
        over = true;
        break;
      }
    }
    if (over || tried + total > max_enum)
      return PropertyVerdict::unknown("stopped after " + std::to_string(tried) +
                                      " coefficient tuples");
    std::vector<size_t> idx(tail, 0);
    for (size_t count = 0; count < total; ++count) {
      ++tried;
      std::vector<Scalar> coeffs(k, scalar_zero(t));
      coeffs[lead] = scalar_one(t);
      for (size_t i = 0; i < tail; ++i) coeffs[lead + 1 + i] = pool[idx[i]];
      if (verify_dependence_witness(coeffs, xs)) {
        std::string w = "coefficients (";
        for (size_t i = 0; i < k; ++i) w += (i ? ", " : "") + scalar_format(coeffs[i]);
        return PropertyVerdict::proven(w + ")");
      }
      for (size_t i = tail; i-- > 0;) {
        if (++idx[i] < pool.size()) break;
        idx[i] = 0;
      }
    }
  }
  if (exact)
    return PropertyVerdict::refuted("no dependence among " + std::to_string(tried) +
                                    " coefficient tuples (exhaustive up to scaling)");
  return PropertyVerdict::unknown("no dependence on a grid of " + std::to_string(tried) +
                                  " coefficient tuples");
}

std::vector<std::set<std::string>> flats_from_covectors(const FMatroid& m, size_t max_enum) {
  std::vector<FVector> covs = enumerate_covectors(m, max_enum);
  std::vector<uint32_t> zmasks;
  uint32_t full = m.ground.size() == 32 ? ~0u : ((1u << m.ground.size()) - 1);
  for (const FVector& x : covs) zmasks.push_back(full & ~support_mask(x));
  std::sort(zmasks.begin(), zmasks.end());
  zmasks.erase(std::unique(zmasks.begin(), zmasks.end()), zmasks.end());
  std::vector<std::set<std::string>> out;
  for (uint32_t zm : zmasks) out.push_back(labels_of_mask(m.ground, zm));
  return out;
}

}  // namespace tracts
