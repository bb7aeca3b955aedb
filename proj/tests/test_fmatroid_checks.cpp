#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>
#include <string>
#include <vector>

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

FMatroid f3_fixture() { return from_subspace(parse_matrix(tract_fp(3), "[[1,0,1],[0,1,2]]")); }

// sign composition: first nonzero wins coordinatewise
FVector sign_compose(const FVector& x, const FVector& y) {
  std::vector<Scalar> entries;
  for (size_t i = 0; i < x.entries.size(); ++i)
    entries.push_back(x[i].is_zero() ? y[i] : x[i]);
  return make_fvector(x.tract, x.ground, std::move(entries));
}

bool contains(const std::vector<FVector>& xs, const FVector& v) {
  return std::find(xs.begin(), xs.end(), v) != xs.end();
}

}  // namespace

TEST_CASE("sign covectors satisfy the three sum properties") {
  FMatroid m = sign_fixture();
  std::vector<FVector> covs = enumerate_covectors(m);
  REQUIRE(covs.size() == 13);

  for (const FVector& x : covs)
    for (const FVector& y : covs) {
      CHECK(property_check(m, VectorProperty::WeakClosure, x, y).proven_p());
      for (const std::string& e : m.ground.labels) {
        size_t ep = m.ground.index(e);
        if (x[ep] == neg(y[ep]))
          CHECK(property_check(m, VectorProperty::Elimination, x, y, e).proven_p());
        for (const Scalar& alpha : carrier_elements(tract_sign()))
          if (in_hypersum(alpha, {x[ep], y[ep]}))
            CHECK(property_check(m, VectorProperty::AdditiveClosure, x, y, e, alpha).proven_p());
      }
    }
}

TEST_CASE("sign covectors form an oriented-matroid vector set") {
  FMatroid m = sign_fixture();
  std::vector<FVector> covs = enumerate_covectors(m);

  for (const FVector& x : covs)
    for (const FVector& y : covs) {
      CHECK(contains(covs, sign_compose(x, y)));
      for (size_t e = 0; e < m.ground.size(); ++e) {
        if (x[e].is_zero() || !(x[e] == neg(y[e]))) continue;
        // eliminate e: some covector vanishes at e and matches x on the
        // coordinates where x and y do not clash
        bool found = false;
        for (const FVector& z : covs) {
          if (!z[e].is_zero()) continue;
          bool ok = true;
          for (size_t f = 0; f < m.ground.size() && ok; ++f) {
            if (f == e || x[f] == neg(y[f])) continue;
            if (!(z[f] == sign_compose(x, y)[f])) ok = false;
          }
          if (ok) {
            found = true;
            break;
          }
        }
        CHECK(found);
      }
    }
}

TEST_CASE("field covectors are additively closed") {
  FMatroid m = f3_fixture();
  std::vector<FVector> covs = enumerate_covectors(m);
  REQUIRE(covs.size() == 9);

  for (const FVector& x : covs)
    for (const FVector& y : covs) {
      PropertyVerdict v = property_check(m, VectorProperty::WeakClosure, x, y);
      CHECK(v.proven_p());
    }

  FVector x = covs[1], y = covs[2];
  CHECK_THROWS_AS(property_check(m, VectorProperty::Elimination, x, y), ValidationError);
  CHECK_THROWS_AS(
      property_check(m, VectorProperty::WeakClosure, x, vec(tract_fp(3), 3, "(1, 1, 1)")),
      ValidationError);
}

TEST_CASE("phase grid search reports proofs and honest gaps") {
  FMatroid m = rank1_from_phi(vec(tract_phase(), 2, "(1, 1)"));
  FVector x = vec(tract_phase(), 2, "(1, 1)");
  FVector y = vec(tract_phase(), 2, "(i, i)");
  FVector ny = vec(tract_phase(), 2, "(-1, -1)");

  CHECK(property_check(m, VectorProperty::WeakClosure, x, y).proven_p());
  CHECK(property_check(m, VectorProperty::WeakClosure, x, ny).proven_p());
  CHECK(property_check(m, VectorProperty::Elimination, x, ny, std::string("1")).proven_p());

  // the pinned value ph(1,1) is a candidate on both coordinates
  CHECK(property_check(m, VectorProperty::AdditiveClosure, x, y, std::string("1"),
                       make_phase(Dir{1, 1}))
            .proven_p());
  // ph(2,3) lies in the hypersum but off the candidate grid of the other
  // coordinate, so the search cannot decide
  PropertyVerdict gap = property_check(m, VectorProperty::AdditiveClosure, x, y,
                                       std::string("1"), make_phase(Dir{2, 3}));
  CHECK(gap.unknown_p());
  CHECK(!gap.search_bound.empty());

  CHECK_THROWS_AS(property_check(m, VectorProperty::Elimination, x, y, std::string("1")),
                  ValidationError);
  CHECK_THROWS_AS(property_check(m, VectorProperty::AdditiveClosure, x, y, std::string("1"),
                                 make_phase(Dir{-1, -1})),
                  ValidationError);
  CHECK_THROWS_AS(property_check(m, VectorProperty::AdditiveClosure, x, y, std::string("1")),
                  ValidationError);
}

TEST_CASE("tropical hypersums of compatible covectors stay covectors") {
  GroundSet g3 = numbered_ground(3);
  FMatroid tr = from_circuit_reps(tract_tr(), g3, {vec(tract_tr(), 3, "(1, 2, -3)")});

  FVector x1 = vec(tract_tr(), 3, "(3, 1, 1)");
  FVector x2 = vec(tract_tr(), 3, "(-3, 3, 2)");
  CHECK(is_covector(tr, x1));
  CHECK(is_covector(tr, x2));
  CHECK(tropical_closure_check(tr, x1, x2).proven_p());
  CHECK(tropical_closure_check(tr, x1, x1).proven_p());

  // three tied coordinates with opposite signs violate the hypothesis
  CHECK_THROWS_AS(tropical_closure_check(tr, x1, vec(tract_tr(), 3, "(-3, -1, -1)")),
                  ValidationError);
  CHECK_THROWS_AS(tropical_closure_check(tr, x1, vec(tract_tr(), 3, "(1, 1, 1)")),
                  ValidationError);

  GroundSet g4 = numbered_ground(4);
  FMatroid wide = from_circuit_reps(tract_tr(), g4, {vec(tract_tr(), 4, "(1, 2, -3, 4)")});
  FVector d1 = vec(tract_tr(), 4, "(3, 0, 1, 0)");
  FVector d2 = vec(tract_tr(), 4, "(0, 2, 0, -1)");
  CHECK(tropical_closure_check(wide, d1, d2).proven_p());

  FMatroid ut = from_circuit_reps(tract_ttriangle(), g3, {vec(tract_ttriangle(), 3, "(1, 1, 1)")});
  CHECK(tropical_closure_check(ut, vec(tract_ttriangle(), 3, "(1, 1, 1)"),
                               vec(tract_ttriangle(), 3, "(2, 2, 1)"))
            .proven_p());

  CHECK_THROWS_AS(tropical_closure_check(f3_fixture(), vec(tract_fp(3), 3, "(1, 0, 1)"),
                                         vec(tract_fp(3), 3, "(1, 0, 1)")),
                  UnsupportedTractError);
}

TEST_CASE("dependence witnesses verify exactly") {
  FieldMatrix gens = parse_matrix(tract_fp(3), "[[1,0,1],[0,1,2]]");
  FVector r1 = vec(tract_fp(3), 3, "(1, 0, 1)");
  FVector r2 = vec(tract_fp(3), 3, "(0, 1, 2)");
  FVector r3 = vec(tract_fp(3), 3, "(1, 1, 0)");

  CHECK(verify_dependence_witness({make_fp(tract_fp(3), 1), make_fp(tract_fp(3), 1),
                                   make_fp(tract_fp(3), 2)},
                                  {r1, r2, r3}));
  CHECK(!verify_dependence_witness({make_fp(tract_fp(3), 1), make_fp(tract_fp(3), 1),
                                    make_fp(tract_fp(3), 1)},
                                   {r1, r2, r3}));
  CHECK(!verify_dependence_witness({scalar_zero(tract_fp(3)), scalar_zero(tract_fp(3)),
                                    scalar_zero(tract_fp(3))},
                                   {r1, r2, r3}));
  CHECK(!verify_dependence_witness({}, {}));

  FVector q1 = vec(tract_qi(), 2, "(1+i, 2)");
  CHECK(verify_dependence_witness({scalar_one(tract_qi()), scalar_one(tract_qi())},
                                  {q1, scalar_mul(make_qi(GRat{Rat(-1), Rat(0)}), q1)}));
}

TEST_CASE("dependence search over finite and infinite tracts") {
  FVector r1 = vec(tract_fp(3), 3, "(1, 0, 1)");
  FVector r2 = vec(tract_fp(3), 3, "(0, 1, 2)");
  FVector r3 = vec(tract_fp(3), 3, "(1, 1, 0)");

  CHECK(search_dependence({r1, r2, r3}).proven_p());
  CHECK(search_dependence({r1, r2}).refuted_p());
  CHECK(search_dependence({r1}).refuted_p());
  CHECK(search_dependence({r1, scalar_mul(make_fp(tract_fp(3), 2), r1)}).proven_p());

  // pairwise projective distinctions force independence, which a finite pool
  // over an infinite tract cannot certify
  FVector x1 = vec(tract_phase(), 4, "(ph(2,1), ph(1,4), 1, 1)");
  FVector x2 = vec(tract_phase(), 4, "(ph(2,1), ph(1,5), 1, 1)");
  FVector w = vec(tract_phase(), 4, "(1, ph(1,1), 1, 0)");
  PropertyVerdict v = search_dependence({x1, x2, w});
  CHECK(v.unknown_p());

  FVector z = vec(tract_phase(), 4, "(ph(1,1), i, 0, 1)");
  CHECK(search_dependence({x1, w, z}).proven_p());
}

TEST_CASE("phase combinations of the displayed linear-dependence fixture") {
  FVector x1 = vec(tract_phase(), 4, "(ph(2,1), ph(1,4), 1, 1)");
  FVector x2 = vec(tract_phase(), 4, "(ph(2,1), ph(1,5), 1, 1)");
  FVector w = vec(tract_phase(), 4, "(1, ph(1,1), 1, 0)");
  FVector z = vec(tract_phase(), 4, "(ph(1,1), i, 0, 1)");

  Scalar one = scalar_one(tract_phase());
  Scalar minus = scalar_neg_one(tract_phase());
  CHECK(verify_dependence_witness({one, minus, minus}, {x1, w, z}));
  CHECK(verify_dependence_witness({one, minus, minus}, {x2, w, z}));
  CHECK(!verify_dependence_witness({one, one, minus}, {x1, w, z}));
  CHECK(!verify_dependence_witness({one, one, minus}, {x2, w, z}));
}

TEST_CASE("axiom budget exhaustion is reported, not decided") {
  GroundSet g = numbered_ground(7);
  std::vector<std::set<std::string>> supports = {
      {"1", "7"},
      {"1", "2", "4"}, {"2", "4", "7"}, {"1", "3", "5"}, {"3", "5", "7"},
      {"2", "3", "6"}, {"4", "5", "6"},
      {"1", "2", "5", "6"}, {"2", "5", "6", "7"}, {"1", "3", "4", "6"},
      {"3", "4", "6", "7"}, {"2", "3", "4", "5"}};
  std::vector<FVector> reps;
  for (const std::set<std::string>& s : supports) {
    std::vector<Scalar> entries;
    for (const std::string& l : g.labels)
      entries.push_back(s.count(l) ? make_kone() : scalar_zero(tract_krasner()));
    reps.push_back(make_fvector(tract_krasner(), g, std::move(entries)));
  }
  PropertyVerdict v = check_circuit_axioms(tract_krasner(), g, reps, AxiomMode::Strong, 2);
  CHECK(v.unknown_p());
  CHECK(!v.search_bound.empty());
}

TEST_CASE("zero sets of covectors can miss a flat") {
  FMatroid m = from_subspace(parse_matrix(tract_fp(3), "[[1,0,1,1],[0,1,1,2]]"));
  std::vector<std::set<std::string>> zs = flats_from_covectors(m);
  std::sort(zs.begin(), zs.end());

  std::vector<std::set<std::string>> fl = flats(m.underlying);
  std::sort(fl.begin(), fl.end());

  CHECK(std::includes(fl.begin(), fl.end(), zs.begin(), zs.end()));
  CHECK(std::find(fl.begin(), fl.end(), std::set<std::string>{}) != fl.end());
  CHECK(std::find(zs.begin(), zs.end(), std::set<std::string>{}) == zs.end());

  std::vector<std::set<std::string>> expected = fl;
  expected.erase(std::find(expected.begin(), expected.end(), std::set<std::string>{}));
  CHECK(zs == expected);
}
