#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "tracts/composition.hpp"
#include "tracts/errors.hpp"
#include "tracts/fmatroid.hpp"
#include "tracts/hyperops.hpp"
#include "tracts/linalg.hpp"
#include "tracts/matroid.hpp"
#include "tracts/morphism.hpp"

using namespace tracts;

namespace {

FVector vec(const TractId& t, int n, const std::string& text) {
  return parse_fvector(t, numbered_ground(n), text);
}

FMatroid sign_fixture() {
  return pushforward(from_subspace(parse_matrix(tract_q(), "[[1,0,1],[0,1,1]]")),
                     morphism_sign());
}

// all vectors over the given coordinate values, odometer order
std::vector<FVector> grid_vectors(const TractId& t, const GroundSet& g,
                                  const std::vector<Scalar>& values) {
  std::vector<FVector> out;
  std::vector<size_t> idx(g.size(), 0);
  while (true) {
    std::vector<Scalar> entries;
    for (size_t i = 0; i < g.size(); ++i) entries.push_back(values[idx[i]]);
    out.push_back(make_fvector(t, g, std::move(entries)));
    size_t pos = 0;
    while (pos < g.size() && ++idx[pos] == values.size()) idx[pos++] = 0;
    if (pos == g.size()) break;
  }
  return out;
}

std::vector<FVector> all_sign_vectors(int n) {
  GroundSet g = numbered_ground(n);
  std::vector<Scalar> values{scalar_zero(tract_sign()), make_sign(1), make_sign(-1)};
  return grid_vectors(tract_sign(), g, values);
}

std::vector<CompositionSample> triples_of(const std::vector<FVector>& pool) {
  std::vector<CompositionSample> out;
  out.reserve(pool.size() * pool.size() * pool.size());
  for (const FVector& a : pool)
    for (const FVector& b : pool)
      for (const FVector& c : pool) out.push_back({a, b, c});
  return out;
}

// exhaustive triple scan fed to the checker in bounded slices
PropertyVerdict chunked_axiom_check(const CompositionOp& op, const TractId& t,
                                    const std::vector<FVector>& pool) {
  std::vector<CompositionSample> buf;
  size_t total = 0;
  for (const FVector& a : pool)
    for (const FVector& b : pool)
      for (const FVector& c : pool) {
        buf.push_back({a, b, c});
        if (buf.size() == 4096) {
          PropertyVerdict v = check_composition_axioms(op, t, buf);
          if (!v.proven_p()) return v;
          total += buf.size();
          buf.clear();
        }
      }
  if (!buf.empty()) {
    PropertyVerdict v = check_composition_axioms(op, t, buf);
    if (!v.proven_p()) return v;
    total += buf.size();
  }
  return PropertyVerdict::proven(std::to_string(total) + " sample triples verified");
}

std::string tract_names(const std::vector<TractId>& ts) {
  std::string out;
  for (const TractId& t : ts) {
    if (!out.empty()) out += ",";
    out += tract_name(t);
  }
  return out;
}

}  // namespace

TEST_CASE("first-nonzero composition on signs, indicators, and tropical phases") {
  TractId s = tract_sign();
  CHECK(compose_inflation(vec(s, 3, "(+, 0, -)"), vec(s, 3, "(0, +, +)")) ==
        vec(s, 3, "(+, +, -)"));

  TractId k = tract_krasner();
  CHECK(compose_inflation(vec(k, 3, "(1, 0, 1)"), vec(k, 3, "(0, 1, 0)")) ==
        vec(k, 3, "(1, 1, 1)"));

  TractId tp = tract_tp();
  CHECK(compose_inflation(vec(tp, 2, "(tp(1,0), 0)"), vec(tp, 2, "(0, tp(0,1))")) ==
        vec(tp, 2, "(tp(1,0), tp(0,1))"));

  FVector x = vec(s, 3, "(+, 0, -)");
  CHECK(compose_inflation(x, fvector_zero(s, x.ground)) == x);
  CHECK(compose_inflation(fvector_zero(s, x.ground), x) == x);

  CHECK_THROWS_AS(compose_inflation(vec(tract_q(), 2, "(1, 0)"), vec(tract_q(), 2, "(0, 1)")),
                  UnsupportedTractError);
  CHECK_THROWS_AS(compose_inflation(vec(tract_tr(), 2, "(1, 0)"), vec(tract_tr(), 2, "(0, 1)")),
                  UnsupportedTractError);
  CHECK_THROWS_AS(compose_inflation(vec(s, 2, "(+, 0)"), vec(k, 2, "(1, 0)")),
                  TractMismatchError);
  CHECK_THROWS_AS(compose_inflation(vec(s, 2, "(+, 0)"), vec(s, 3, "(+, 0, 0)")),
                  ValidationError);

  CHECK(to_string(CompositionKind::Inflation) == "inflation");
  CHECK(tract_names(composition_op(CompositionKind::Inflation).applicable_tracts) ==
        "krasner,sign,tp");
  CHECK(tract_names(composition_op(CompositionKind::MaxMagnitude).applicable_tracts) ==
        "triangle,tr,tc,tp,ttriangle");
  CHECK(tract_names(composition_op(CompositionKind::Epsilon).applicable_tracts) ==
        "triangle,tr,tc,ttriangle");
}

TEST_CASE("magnitude composition keeps the larger entry and x on ties") {
  TractId tr = tract_tr();
  CHECK(compose_max(vec(tr, 2, "(3, 0)"), vec(tr, 2, "(-1, 2)")) == vec(tr, 2, "(3, 2)"));
  // a tie of magnitudes keeps the x entry even when the values differ
  CHECK(compose_max(vec(tr, 2, "(3, 0)"), vec(tr, 2, "(-3, 1)")) == vec(tr, 2, "(3, 1)"));

  TractId tt = tract_ttriangle();
  CHECK(compose_max(vec(tt, 2, "(2, 1)"), vec(tt, 2, "(2, 5)")) == vec(tt, 2, "(2, 5)"));

  TractId tri = tract_triangle();
  CHECK(compose_max(vec(tri, 2, "(1, 3)"), vec(tri, 2, "(2, 1)")) == vec(tri, 2, "(2, 3)"));

  TractId tc = tract_tc();
  FVector w = vec(tc, 3, "(tc(2;1,1), tc(1;0,1), 0)");
  CHECK(compose_max(w, w) == w);

  TractId tp = tract_tp();
  CHECK(compose_max(vec(tp, 2, "(tp(1,0), 0)"), vec(tp, 2, "(tp(0,1), tp(0,1))")) ==
        vec(tp, 2, "(tp(1,0), tp(0,1))"));

  CHECK_THROWS_AS(compose_max(vec(tract_sign(), 2, "(+, 0)"), vec(tract_sign(), 2, "(0, -)")),
                  UnsupportedTractError);
  CHECK_THROWS_AS(compose_max(vec(tract_q(), 2, "(1, 0)"), vec(tract_q(), 2, "(0, 1)")),
                  UnsupportedTractError);
}

TEST_CASE("composing covectors of a fixture stays inside the covector set") {
  FMatroid sm = sign_fixture();
  std::vector<FVector> covs = enumerate_covectors(sm);
  REQUIRE(covs.size() == 13);
  for (const FVector& a : covs)
    for (const FVector& b : covs) {
      FVector z = compose_inflation(a, b);
      CHECK(support_mask(z) == (support_mask(a) | support_mask(b)));
      CHECK(is_covector(sm, z));
    }

  TractId tr = tract_tr();
  GroundSet g3 = numbered_ground(3);
  FMatroid tm = from_circuit_reps(tr, g3, {vec(tr, 3, "(1, 2, -3)")});
  std::vector<Scalar> values{scalar_zero(tr), make_tr(1),  make_tr(-1), make_tr(2),
                             make_tr(-2),     make_tr(3),  make_tr(-3), make_tr(Rat(3) / 2)};
  std::vector<FVector> pool;
  for (const FVector& z : grid_vectors(tr, g3, values))
    if (is_covector(tm, z)) pool.push_back(z);
  REQUIRE(pool.size() > 20);
  for (const FVector& a : pool)
    for (const FVector& b : pool) {
      FVector z = compose_max(a, b);
      CHECK(support_mask(z) == (support_mask(a) | support_mask(b)));
      CHECK(is_covector(tm, z));
    }
}

TEST_CASE("compositions are associative and sit inside the hypersum") {
  std::vector<FVector> signs = all_sign_vectors(2);
  for (const FVector& a : signs)
    for (const FVector& b : signs) {
      FVector ab = compose_inflation(a, b);
      for (size_t i = 0; i < ab.entries.size(); ++i)
        CHECK(in_hypersum(ab.entries[i], {a.entries[i], b.entries[i]}));
      for (const FVector& c : signs)
        CHECK(compose_inflation(ab, c) == compose_inflation(a, compose_inflation(b, c)));
    }

  TractId k = tract_krasner();
  std::vector<FVector> bits =
      grid_vectors(k, numbered_ground(3), {scalar_zero(k), make_kone()});
  for (const FVector& a : bits)
    for (const FVector& b : bits) {
      FVector ab = compose_inflation(a, b);
      for (size_t i = 0; i < ab.entries.size(); ++i)
        CHECK(in_hypersum(ab.entries[i], {a.entries[i], b.entries[i]}));
      for (const FVector& c : bits)
        CHECK(compose_inflation(ab, c) == compose_inflation(a, compose_inflation(b, c)));
    }

  TractId tr = tract_tr();
  std::vector<Scalar> tvals{scalar_zero(tr), make_tr(1), make_tr(-1),
                            make_tr(2),      make_tr(-2), make_tr(3)};
  std::vector<FVector> trop = grid_vectors(tr, numbered_ground(2), tvals);
  for (const FVector& a : trop)
    for (const FVector& b : trop) {
      FVector ab = compose_max(a, b);
      for (size_t i = 0; i < ab.entries.size(); ++i)
        CHECK(in_hypersum(ab.entries[i], {a.entries[i], b.entries[i]}));
      for (const FVector& c : trop)
        CHECK(compose_max(ab, c) == compose_max(a, compose_max(b, c)));
    }

  TractId tri = tract_triangle();
  std::vector<Scalar> mvals{scalar_zero(tri), make_tri(1), make_tri(2), make_tri(3)};
  std::vector<FVector> tris = grid_vectors(tri, numbered_ground(2), mvals);
  for (const FVector& a : tris)
    for (const FVector& b : tris) {
      FVector ab = compose_max(a, b);
      for (size_t i = 0; i < ab.entries.size(); ++i)
        CHECK(in_hypersum(ab.entries[i], {a.entries[i], b.entries[i]}));
      for (const FVector& c : tris)
        CHECK(compose_max(ab, c) == compose_max(a, compose_max(b, c)));
    }

  TractId tt = tract_ttriangle();
  std::vector<FVector> ultra =
      grid_vectors(tt, numbered_ground(2), {scalar_zero(tt), make_ttri(1), make_ttri(2)});
  for (const FVector& a : ultra)
    for (const FVector& b : ultra) {
      FVector ab = compose_max(a, b);
      for (size_t i = 0; i < ab.entries.size(); ++i)
        CHECK(in_hypersum(ab.entries[i], {a.entries[i], b.entries[i]}));
    }

  TractId tc = tract_tc();
  std::vector<Scalar> cvals{scalar_zero(tc), make_tc(1, make_dir(1, 0)),
                            make_tc(1, make_dir(0, 1)), make_tc(2, make_dir(-1, 0))};
  std::vector<FVector> cplx = grid_vectors(tc, numbered_ground(2), cvals);
  for (const FVector& a : cplx)
    for (const FVector& b : cplx) {
      FVector ab = compose_max(a, b);
      for (size_t i = 0; i < ab.entries.size(); ++i)
        CHECK(in_hypersum(ab.entries[i], {a.entries[i], b.entries[i]}));
    }
}

TEST_CASE("every sign covector is a composition of signed cocircuits") {
  FMatroid m = sign_fixture();
  std::vector<FVector> closure;
  for (const FVector& c : m.cocircuit_reps) {
    closure.push_back(c);
    closure.push_back(scalar_mul(scalar_neg_one(m.tract), c));
  }
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<FVector> next = closure;
    for (const FVector& a : closure)
      for (const FVector& b : closure) {
        FVector z = compose_inflation(a, b);
        if (std::find(next.begin(), next.end(), z) == next.end()) {
          next.push_back(z);
          grew = true;
        }
      }
    closure = std::move(next);
  }
  closure.push_back(fvector_zero(m.tract, m.ground));
  std::sort(closure.begin(), closure.end(), fvector_less);
  CHECK(closure == enumerate_covectors(m));
}

TEST_CASE("perturbation composition on a two-circuit fixture has an exact threshold") {
  TractId tr = tract_tr();
  GroundSet g5 = numbered_ground(5);
  FMatroid m = from_circuit_reps(
      tr, g5, {vec(tr, 5, "(1, 2, -3, 0, 0)"), vec(tr, 5, "(0, 0, 0, 1, -4)")});
  FVector x = vec(tr, 5, "(2, -1, 0, 0, 0)");
  FVector y = vec(tr, 5, "(3, 0, 1, 4, 1)");
  REQUIRE(is_covector(m, x));
  REQUIRE(is_covector(m, y));

  // the shared coordinate gives 2/3 and the first circuit gives 2/(1*3)
  std::optional<Rat> eps = epsilon_threshold(x, y, m.circuit_reps);
  REQUIRE(eps.has_value());
  CHECK(*eps == Rat(2) / 3);

  std::vector<FVector> zs = compose_epsilon(x, y, m.circuit_reps);
  REQUIRE(zs.size() == 2);
  CHECK(zs[0] == vec(tr, 5, "(2, -1, 1/3, 4/3, 1/3)"));
  CHECK(zs[1] == vec(tr, 5, "(2, -1, 1/6, 2/3, 1/6)"));
  for (const FVector& z : zs) {
    CHECK(support_mask(z) == (support_mask(x) | support_mask(y)));
    CHECK(is_covector(m, z));
  }

  // no circuits at all: the scale is unconstrained
  FVector a = vec(tr, 2, "(1, 0)");
  FVector b = vec(tr, 2, "(0, 1)");
  CHECK(!epsilon_threshold(a, b, {}).has_value());
  std::vector<FVector> free = compose_epsilon(a, b, {});
  REQUIRE(free.size() == 2);
  CHECK(free[0] == vec(tr, 2, "(1, 1)"));
  CHECK(free[1] == vec(tr, 2, "(1, 1/2)"));

  // full support leaves nothing to perturb
  FVector full = vec(tr, 2, "(1, -2)");
  std::vector<FVector> same = compose_epsilon(full, b, {});
  REQUIRE(same.size() == 1);
  CHECK(same[0] == full);

  CHECK_THROWS_AS(compose_at_eta(a, b, Rat(0)), ValidationError);
  CHECK_THROWS_AS(compose_at_eta(a, b, Rat(-1)), ValidationError);
  CHECK_THROWS_AS(compose_epsilon(vec(tract_tp(), 2, "(tp(1,0), 0)"),
                                  vec(tract_tp(), 2, "(0, tp(1,0))"), {}),
                  UnsupportedTractError);
  CHECK_THROWS_AS(compose_epsilon(vec(tract_sign(), 2, "(+, 0)"),
                                  vec(tract_sign(), 2, "(0, -)"), {}),
                  UnsupportedTractError);
  CHECK_THROWS_AS(epsilon_threshold(a, b, {vec(tr, 3, "(1, 1, 1)")}), ValidationError);
}

TEST_CASE("the generous perturbation bound fails and the corrected one is safe") {
  TractId tr = tract_tr();
  FMatroid m = from_circuit_reps(tr, numbered_ground(4), {vec(tr, 4, "(1, 2, -3, 4)")});
  FVector x = vec(tr, 4, "(2, -1, 0, 0)");
  FVector y = vec(tr, 4, "(16, 0, 0, -4)");
  REQUIRE(is_covector(m, x));
  REQUIRE(is_covector(m, y));
  const FVector& c = m.circuit_reps[0];

  // bound computed without the magnitude of y: min over f of d/|c(f)| = 1/2
  Rat d(0);
  for (size_t i = 0; i < 4; ++i) {
    Rat prod = scalar_magnitude(x.entries[i]) * scalar_magnitude(c.entries[i]);
    if (d < prod) d = prod;
  }
  CHECK(d == 2);
  Rat generous = d / 3;
  for (size_t i = 0; i < 4; ++i)
    if (x.entries[i].is_zero() && !c.entries[i].is_zero())
      generous = std::min(generous, d / scalar_magnitude(c.entries[i]));
  CHECK(generous == Rat(1) / 2);
  // a scale below that bound already leaves the covector set
  CHECK(!is_covector(m, compose_at_eta(x, y, Rat(1) / 4)));

  std::optional<Rat> eps = epsilon_threshold(x, y, m.circuit_reps);
  REQUIRE(eps.has_value());
  CHECK(*eps == Rat(1) / 8);
  std::vector<FVector> zs = compose_epsilon(x, y, m.circuit_reps);
  REQUIRE(zs.size() == 2);
  CHECK(zs[0] == vec(tr, 4, "(2, -1, 0, -1/4)"));
  CHECK(zs[1] == vec(tr, 4, "(2, -1, 0, -1/8)"));
  for (const FVector& z : zs) CHECK(is_covector(m, z));

  // every scale below the corrected threshold works; just above it fails
  CHECK(is_covector(m, compose_at_eta(x, y, Rat(9) / 80)));
  CHECK(!is_covector(m, compose_at_eta(x, y, Rat(1) / 7)));
}

TEST_CASE("axiom checks prove the operations and refute a garbled one") {
  TractId s = tract_sign();
  std::vector<FVector> pool3 = all_sign_vectors(3);
  std::vector<CompositionSample> samples3 = triples_of(pool3);
  REQUIRE(samples3.size() == 19683);

  CompositionOp inflate = composition_op(CompositionKind::Inflation);
  PropertyVerdict v3 = check_composition_axioms(inflate, s, samples3);
  CHECK(v3.proven_p());
  CHECK(v3.search_bound == "19683 sample triples verified");

  PropertyVerdict v4 = chunked_axiom_check(inflate, s, all_sign_vectors(4));
  CHECK(v4.proven_p());
  CHECK(v4.search_bound == "531441 sample triples verified");

  TractId tr = tract_tr();
  std::vector<Scalar> tvals{scalar_zero(tr), make_tr(1), make_tr(-1),
                            make_tr(2),      make_tr(-2), make_tr(3)};
  PropertyVerdict vmax = chunked_axiom_check(composition_op(CompositionKind::MaxMagnitude), tr,
                                             grid_vectors(tr, numbered_ground(2), tvals));
  CHECK(vmax.proven_p());
  CHECK(vmax.search_bound == "46656 sample triples verified");

  // perturbation witnesses checked against the same vector they must stay
  // orthogonal to, plus a triple where the premise fails
  std::vector<CompositionSample> eps_samples{
      {vec(tr, 4, "(2, -1, 0, 0)"), vec(tr, 4, "(16, 0, 0, -4)"), vec(tr, 4, "(1, 2, -3, 4)")},
      {vec(tr, 4, "(1, 0, 0, 0)"), vec(tr, 4, "(0, 1, 0, 0)"), vec(tr, 4, "(1, 2, -3, 4)")}};
  PropertyVerdict veps =
      check_composition_axioms(composition_op(CompositionKind::Epsilon), tr, eps_samples);
  CHECK(veps.proven_p());

  // swapping the arguments still yields a composition operation: both axioms
  // are symmetric in the pair
  CompositionFn swapped = [](const FVector& a, const FVector& b) {
    return std::vector<FVector>{compose_inflation(b, a)};
  };
  CHECK(check_composition_axioms(swapped, s, samples3).proven_p());

  // crossing the branches (value from y on the support of x) loses support
  CompositionFn crossed = [&s](const FVector& a, const FVector& b) {
    std::vector<Scalar> entries;
    for (size_t i = 0; i < a.entries.size(); ++i)
      entries.push_back(a.entries[i].is_zero() ? scalar_zero(s) : b.entries[i]);
    return std::vector<FVector>{make_fvector(a.tract, a.ground, std::move(entries))};
  };
  PropertyVerdict vc = check_composition_axioms(crossed, s, samples3);
  CHECK(vc.refuted_p());
  CHECK(vc.witness.find("support") != std::string::npos);

  // negating one coordinate of the composite keeps support but breaks
  // orthogonality
  CompositionFn flipped = [](const FVector& a, const FVector& b) {
    FVector z = compose_inflation(a, b);
    z.entries[0] = neg(z.entries[0]);
    return std::vector<FVector>{z};
  };
  PropertyVerdict vf = check_composition_axioms(flipped, s, triples_of(all_sign_vectors(2)));
  CHECK(vf.refuted_p());
  CHECK(vf.witness.find("not orthogonal") != std::string::npos);

  CompositionFn empty_fn = [](const FVector&, const FVector&) {
    return std::vector<FVector>{};
  };
  PropertyVerdict ve = check_composition_axioms(empty_fn, s, samples3);
  CHECK(ve.refuted_p());
  CHECK(ve.witness.find("empty composition") != std::string::npos);

  CHECK_THROWS_AS(check_composition_axioms(inflate, tract_q(), {}), UnsupportedTractError);
  std::vector<CompositionSample> bad{{vec(tract_krasner(), 2, "(1, 0)"),
                                      vec(tract_krasner(), 2, "(0, 1)"),
                                      vec(tract_krasner(), 2, "(1, 1)")}};
  CHECK_THROWS_AS(check_composition_axioms(inflate, s, bad), TractMismatchError);
}

TEST_CASE("flats are the zero sets of compositions of cocircuits") {
  auto sorted_flats = [](const Matroid& m) {
    std::vector<std::set<std::string>> out = flats(m);
    std::sort(out.begin(), out.end());
    return out;
  };

  FMatroid sm = sign_fixture();
  CHECK(flats_via_composition(sm) == sorted_flats(sm.underlying));

  FMatroid km = pushforward(from_subspace(parse_matrix(tract_q(), "[[1,0,1,1],[0,1,1,2]]")),
                            morphism_kappa(tract_q()));
  std::vector<std::set<std::string>> kf = flats_via_composition(km);
  CHECK(kf == sorted_flats(km.underlying));
  CHECK(std::find(kf.begin(), kf.end(), std::set<std::string>{}) != kf.end());

  TractId tr = tract_tr();
  FMatroid tm = from_circuit_reps(tr, numbered_ground(3), {vec(tr, 3, "(1, 2, -3)")});
  CHECK(flats_via_composition(tm) == sorted_flats(tm.underlying));

  FMatroid qm = from_subspace(parse_matrix(tract_q(), "[[1,0,1],[0,1,1]]"));
  CHECK_THROWS_AS(flats_via_composition(qm), UnsupportedTractError);
  FMatroid pm = pushforward(from_subspace(parse_matrix(tract_qi(), "[[1,0,i],[0,1,1]]")),
                            morphism_phase());
  CHECK_THROWS_AS(flats_via_composition(pm), UnsupportedTractError);
}

TEST_CASE("perfection decided for finite tracts and probed for phase") {
  FMatroid sm = sign_fixture();
  PropertyVerdict vs = perfection_probe(sm, {});
  CHECK(vs.proven_p());
  CHECK(vs.search_bound.find("27") != std::string::npos);

  FMatroid fm = from_subspace(parse_matrix(tract_fp(3), "[[1,0,1],[0,1,2]]"));
  CHECK(perfection_probe(fm, {}).proven_p());

  FMatroid km = pushforward(from_subspace(parse_matrix(tract_q(), "[[1,0,1,1],[0,1,1,2]]")),
                            morphism_kappa(tract_q()));
  CHECK(perfection_probe(km, {}).proven_p());

  FMatroid pm = pushforward(
      from_subspace(parse_matrix(tract_qi(), "[[1,0,1+i,1-i],[0,1,1-i,1+i]]")),
      morphism_phase());
  TractId ph = tract_phase();
  FVector ones = vec(ph, 4, "(1, 1, 1, 1)");
  FVector turned = vec(ph, 4, "(1, 1, ph(-100,-1), ph(-100,-1))");
  PropertyVerdict vp = perfection_probe(pm, {ones, turned});
  CHECK(vp.refuted_p());
  CHECK(vp.witness.find("not orthogonal") != std::string::npos);

  CHECK(perfection_probe(pm, {}).unknown_p());
  CHECK(perfection_probe(pm, {ones}).unknown_p());

  // over budget the finite scan degrades to the candidate probe
  PropertyVerdict tight = perfection_probe(sm, {fvector_zero(sm.tract, sm.ground)}, 10);
  CHECK(tight.unknown_p());
}
