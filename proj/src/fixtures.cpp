#include "tracts/fixtures.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "tracts/composition.hpp"
#include "tracts/errors.hpp"
#include "tracts/linalg.hpp"
#include "tracts/matroid.hpp"
#include "tracts/morphism.hpp"

namespace tracts {

bool FixtureReport::all_passed() const {
  for (const FixtureFact& f : facts)
    if (!f.pass) return false;
  return true;
}

namespace {

struct Checker {
  std::vector<FixtureFact> facts;
  void fact(std::string name, bool pass, std::string detail = "") {
    facts.push_back({std::move(name), pass, std::move(detail)});
  }
};

FVector vec(const TractId& t, int n, const std::string& text) {
  return parse_fvector(t, numbered_ground(n), text);
}

std::string join_reps(const std::vector<FVector>& reps) {
  std::string out;
  for (const FVector& r : reps) {
    if (!out.empty()) out += "; ";
    out += format_fvector(r);
  }
  return out;
}

bool in_row_space(const FieldMatrix& m, const FVector& x) {
  std::vector<Scalar> data = m.data;
  data.insert(data.end(), x.entries.begin(), x.entries.end());
  FieldMatrix stacked = make_matrix(m.tract, m.rows + 1, m.cols, std::move(data));
  return rank(stacked) == rank(m);
}

std::vector<std::set<std::string>> sorted_sets(std::vector<std::set<std::string>> v) {
  std::sort(v.begin(), v.end());
  return v;
}

std::vector<FVector> sorted_vecs(std::vector<FVector> v) {
  std::sort(v.begin(), v.end(), fvector_less);
  return v;
}

// --- topclosure-541 --------------------------------------------------------

FMatroid build_topclosure() {
  return pushforward(from_subspace(parse_matrix(tract_qi(), "[[1,0,i],[0,1,1]]")),
                     morphism_phase());
}

void check_topclosure(const FMatroid& m, Checker& ck) {
  const TractId ph = tract_phase();
  ck.fact("single circuit orbit (1, i, -i)",
          m.circuit_reps == std::vector<FVector>{vec(ph, 3, "(1, i, -i)")},
          join_reps(m.circuit_reps));

  FVector inner1 = vec(ph, 3, "(1, 1, ph(1,10))");
  FVector inner2 = vec(ph, 3, "(1, 1, ph(10,1))");
  ck.fact("rays strictly inside the defining arc are covectors",
          is_covector(m, inner1) && is_covector(m, inner2));

  FVector edge1 = vec(ph, 3, "(1, 1, i)");
  FVector edge2 = vec(ph, 3, "(1, 1, 1)");
  ck.fact("the arc endpoints are not covectors", !is_covector(m, edge1) && !is_covector(m, edge2),
          "limit rays of covectors need not be covectors");

  bool agree = true;
  for (const FVector& x : {inner1, inner2, edge1, edge2})
    agree = agree && is_covector(m, x) == is_covector_rref(m, x);
  ck.fact("membership routes agree on the probes", agree);
}

// --- lindep-542 ------------------------------------------------------------

FMatroid build_lindep() {
  return pushforward(from_subspace(parse_matrix(tract_qi(), "[[1,1+i,1,0],[1+i,3i,0,1]]")),
                     morphism_phase());
}

void check_lindep(const FMatroid& m, Checker& ck) {
  const TractId ph = tract_phase();
  FVector x1 = vec(ph, 4, "(ph(2,1), ph(1,4), 1, 1)");
  FVector x2 = vec(ph, 4, "(ph(2,1), ph(1,5), 1, 1)");
  FVector w = vec(ph, 4, "(1, ph(1,1), 1, 0)");
  FVector z = vec(ph, 4, "(ph(1,1), i, 0, 1)");

  ck.fact("all four probe vectors are covectors",
          is_covector(m, x1) && is_covector(m, x2) && is_covector(m, w) && is_covector(m, z));

  Scalar one = scalar_one(ph);
  Scalar minus = scalar_neg_one(ph);
  Scalar zero = scalar_zero(ph);
  std::vector<FVector> vs = {x1, x2, w, z};
  ck.fact("the displayed coefficient rows are not dependence witnesses",
          !verify_dependence_witness({minus, zero, one, minus}, vs) &&
              !verify_dependence_witness({zero, minus, one, minus}, vs),
          "coefficients (-1, 0, 1, -1) and (0, -1, 1, -1) both fail");
  ck.fact("the sign-corrected coefficient rows are dependence witnesses",
          verify_dependence_witness({one, zero, minus, minus}, vs) &&
              verify_dependence_witness({zero, one, minus, minus}, vs),
          "coefficients (1, 0, -1, -1) and (0, 1, -1, -1) both verify");
  ck.fact("dependence search certifies each spanning triple",
          search_dependence({x1, w, z}).proven_p() && search_dependence({x2, w, z}).proven_p());
}

// --- duality-544 -----------------------------------------------------------

FMatroid build_duality() {
  return pushforward(from_subspace(parse_matrix(tract_qi(), "[[1,0,1+i,1-i],[0,1,1-i,1+i]]")),
                     morphism_phase());
}

void check_duality(const FMatroid& m, Checker& ck) {
  const TractId ph = tract_phase();
  std::vector<FVector> four = {
      vec(ph, 4, "(1, 0, ph(1,1), ph(1,-1))"), vec(ph, 4, "(0, 1, ph(1,-1), ph(1,1))"),
      vec(ph, 4, "(ph(1,-1), ph(1,1), 1, 0)"), vec(ph, 4, "(ph(1,1), ph(1,-1), 0, 1)")};
  ck.fact("four cocircuit scaling orbits with the pinned representatives",
          m.cocircuit_reps == dedupe_reps(four), join_reps(m.cocircuit_reps));

  FVector ones = vec(ph, 4, "(1, 1, 1, 1)");
  ck.fact("the all-ones element is a covector", is_covector(m, ones));

  FVector x = vec(ph, 4, "(1, 1, ph(-100,-1), ph(-100,-1))");
  bool perp_all = true;
  for (const FVector& c : m.cocircuit_reps) perp_all = perp_all && is_orthogonal(x, c);
  ck.fact("the perturbed antipodal element is orthogonal to every cocircuit",
          perp_all && is_vector(m, x));

  ck.fact("that vector and that covector are not orthogonal", !is_orthogonal(x, ones),
          "the perp of the vector set is strictly larger than the covector set");
  ck.fact("the perfection probe refutes from the exhibited pair",
          perfection_probe(m, {x, ones}).refuted_p());
}

// --- deletion-545 ----------------------------------------------------------

const char* seven_matrix =
    "[[0,-1,0,0,i,1-i,1],[-1,0,-1,0,-i,3+i,2],[0,-i,0,2i,-i,-2i,-i],[0,0,-i,1+i,0,-2,-1]]";

FMatroid build_deletion() {
  return pushforward(from_subspace(parse_matrix(tract_qi(), seven_matrix)), morphism_phase());
}

// strictly above / strictly below the real axis; zero is on neither side
bool strictly_upper(const Scalar& c) {
  return !c.is_zero() && std::get<PhVal>(c.payload).d.y > 0;
}
bool strictly_lower(const Scalar& c) {
  return !c.is_zero() && std::get<PhVal>(c.payload).d.y < 0;
}

void check_deletion(const FMatroid& m, Checker& ck) {
  const TractId qi = tract_qi();
  const TractId ph = tract_phase();

  FMatroid qi_m = from_subspace(parse_matrix(qi, seven_matrix));
  std::vector<FVector> six = {vec(qi, 6, "(-1+i, -i, 1, 1/2-1/2i, 1, 0)"),
                              vec(qi, 6, "(2-i, 1+i, 1, 3/2+1/2i, 0, 1)"),
                              vec(qi, 6, "(5-5i, 1+3i, -2-2i, 0, -3-i, 1-i)"),
                              vec(qi, 6, "(3-2i, 1+2i, 0, 1+i, -1, 1)"),
                              vec(qi, 6, "(3+4i, 0, 5, 7/2+1/2i, 3-i, 2+i)"),
                              vec(qi, 6, "(0, 7-4i, 13, 25/2-5/2i, 8+i, 5-i)")};
  FMatroid qi_del = delete_elements(qi_m, {"7"});
  ck.fact("deleting the last element leaves the six pinned circuit orbits",
          qi_del.circuit_reps == dedupe_reps(six),
          "re-derived null-space orbits agree with the typed-in list");

  FVector y1 = vec(qi, 7, "(1, 1, 1, 1, 0, 0, 1)");
  FVector y2 = vec(qi, 7, "(0, 0, 1, 1, 1, 1, -1)");
  bool have = std::find(qi_m.circuit_reps.begin(), qi_m.circuit_reps.end(), y1) !=
                  qi_m.circuit_reps.end() &&
              std::find(qi_m.circuit_reps.begin(), qi_m.circuit_reps.end(), y2) !=
                  qi_m.circuit_reps.end();
  ck.fact("both unit-phase circuits appear among the circuit orbits", have);

  FMatroid del = delete_elements(m, {"7"});
  FVector z1 = vec(ph, 6, "(ph(100,1), 1, -1, 1, ph(100,1), -1)");
  bool perp_each = true;
  for (const FVector& c : del.circuit_reps) perp_each = perp_each && is_orthogonal(z1, c);
  ck.fact("the perturbed element is a covector of the deletion",
          perp_each && is_covector(del, z1));

  std::vector<Scalar> candidates = {scalar_zero(ph)};
  const int dirs[16][2] = {{1, 0},    {-1, 0},   {0, 1},    {0, -1},  {100, 1},  {-100, -1},
                           {100, -1}, {-100, 1}, {101, 1},  {50, 1},  {-50, 1},  {-101, 1},
                           {-101, -1}, {-50, -1}, {50, -1}, {101, -1}};
  for (const auto& d : dirs) candidates.push_back(make_phase(make_dir(d[0], d[1])));

  FVector y1p = vec(ph, 7, "(1, 1, 1, 1, 0, 0, 1)");
  FVector y2p = vec(ph, 7, "(0, 0, 1, 1, 1, 1, -1)");
  bool none_extend = true;
  bool dichotomy = true;
  for (const Scalar& c : candidates) {
    FVector ext = extend(z1, "7", c);
    none_extend = none_extend && !is_covector(m, ext);
    dichotomy = dichotomy && is_orthogonal(ext, y1p) == strictly_lower(c) &&
                is_orthogonal(ext, y2p) == strictly_upper(c);
  }
  ck.fact("no candidate value extends it to a covector", none_extend,
          "17 candidate values cover every open region cut by the constraint rays");
  ck.fact("every failure follows the half-circle dichotomy", dichotomy,
          "orthogonal to the first circuit iff strictly below the real axis, "
          "to the second iff strictly above");
}

// --- contraction-546 -------------------------------------------------------

const char* six_matrix = "[[3,0,0,1,1,-3],[0,3,0,1,1,3+3i],[0,0,3,1,1,3-3i]]";

FMatroid build_contraction() {
  return pushforward(from_subspace(parse_matrix(tract_qi(), six_matrix)), morphism_phase());
}

void check_contraction(const FMatroid& m, Checker& ck) {
  const TractId qi = tract_qi();
  const TractId ph = tract_phase();

  FMatroid qi_m = from_subspace(parse_matrix(qi, six_matrix));
  std::vector<FVector> ten = {
      vec(qi, 6, "(1, -1+i, -1-i, 0, 0, 1)"), vec(qi, 6, "(2+i, 2i, 0, -3-3i, 0, 1)"),
      vec(qi, 6, "(2-i, 0, -2i, -3+3i, 0, 1)"), vec(qi, 6, "(0, 2-i, 2+i, -3, 0, -1)"),
      vec(qi, 6, "(2+i, 2i, 0, 0, -3-3i, 1)"), vec(qi, 6, "(2-i, 0, -2i, 0, -3+3i, 1)"),
      vec(qi, 6, "(0, 2-i, 2+i, 0, -3, -1)"), vec(qi, 6, "(1, 1, 1, 0, -3, 0)"),
      vec(qi, 6, "(1, 1, 1, -3, 0, 0)"),      vec(qi, 6, "(0, 0, 0, 1, -1, 0)")};
  ck.fact("ten pinned circuit orbit representatives", qi_m.circuit_reps == dedupe_reps(ten),
          "re-derived null-space orbits agree with the typed-in list");

  FMatroid con_qi = contract(qi_m, {"6"});
  std::vector<FVector> restricted;
  for (size_t i : {0u, 1u, 2u, 3u, 4u, 5u, 6u, 9u})
    restricted.push_back(restrict_away(ten[i], {"6"}));
  FVector pair_circ = vec(qi, 5, "(0, 0, 0, 1, -1)");
  bool pair_present = std::find(con_qi.circuit_reps.begin(), con_qi.circuit_reps.end(),
                                pair_circ) != con_qi.circuit_reps.end();
  ck.fact("contraction keeps eight orbits: the seven restrictions plus the parallel pair",
          con_qi.circuit_reps == dedupe_reps(restricted) && con_qi.circuit_reps.size() == 8 &&
              pair_present,
          "the pair circuit on the equal columns survives restriction with minimal support");

  FMatroid con = contract(m, {"6"});
  FVector diag = vec(ph, 5, "(1, 1, 1, ph(100,1), ph(100,1))");
  ck.fact("the diagonal perturbation is a covector of the contraction", is_covector(con, diag));

  FVector single = vec(ph, 5, "(1, 1, 1, 1, ph(100,1))");
  ck.fact("the single-coordinate perturbation is not a covector of the contraction",
          !is_covector(con, single) &&
              !is_orthogonal(single, vec(ph, 5, "(0, 0, 0, 1, -1)")),
          "it fails against the surviving pair circuit");

  FVector single6 = vec(ph, 6, "(1, 1, 1, 1, ph(100,1), 0)");
  ck.fact("its zero extension is not a covector of the full matroid",
          !is_covector(m, single6) &&
              !is_orthogonal(single6, vec(ph, 6, "(0, 0, 0, 1, -1, 0)")));

  FVector diag6 = vec(ph, 6, "(1, 1, 1, ph(100,1), ph(100,1), 0)");
  ck.fact("the contraction covector does not lift even by zero",
          !is_covector(m, diag6) && !is_orthogonal(diag6, vec(ph, 6, "(1, 1, 1, 0, -1, 0)")),
          "so contraction covectors strictly exceed the restricted ones");
}

// --- morph-ex44 ------------------------------------------------------------

FMatroid build_morph() {
  return pushforward(from_subspace(parse_matrix(tract_qi(), "[[1,1+i,1,0],[1+i,3i,0,1]]")),
                     morphism_phase());
}

void check_morph(const FMatroid& m, Checker& ck) {
  const TractId qi = tract_qi();
  const TractId ph = tract_phase();
  FieldMatrix a1 = parse_matrix(qi, "[[1,1+i,1,0],[1+i,3i,0,1]]");
  FieldMatrix a2 = parse_matrix(qi, "[[1,1+i,1,0],[1+i,4i,0,1]]");
  FMatroid m1 = from_subspace(a1);
  FMatroid m2 = from_subspace(a2);

  ck.fact("the two subspace matroids differ", !(m1 == m2),
          join_reps(m1.circuit_reps) + " versus " + join_reps(m2.circuit_reps));

  FMatroid p1 = pushforward(m1, morphism_phase());
  FMatroid p2 = pushforward(m2, morphism_phase());
  ck.fact("their phase images have equal circuit orbits", p1 == p2 && p1 == m);
  ck.fact("their phase images have equal cocircuit orbits",
          p1.cocircuit_reps == p2.cocircuit_reps);

  FVector r1 = vec(qi, 4, "(2+i, 1+4i, 1, 1)");
  FVector r2 = vec(qi, 4, "(2+i, 1+5i, 1, 1)");
  ck.fact("each probe lifts into its own row space", in_row_space(a1, r1) && in_row_space(a2, r2));

  FVector x1 = vec(ph, 4, "(ph(2,1), ph(1,4), 1, 1)");
  FVector x2 = vec(ph, 4, "(ph(2,1), ph(1,5), 1, 1)");
  ck.fact("both probe phase vectors are covectors of the image",
          is_covector(m, x1) && is_covector(m, x2),
          "the second lies in the image's covectors without lifting to the first row space");
}

// --- flats-f3 --------------------------------------------------------------

FMatroid build_flats_f3() {
  return from_subspace(parse_matrix(tract_fp(3), "[[1,0,1,1],[0,1,1,2]]"));
}

void check_flats_f3(const FMatroid& m, Checker& ck) {
  std::vector<std::set<std::string>> fl = sorted_sets(flats(m.underlying));
  bool has_empty = std::find(fl.begin(), fl.end(), std::set<std::string>{}) != fl.end();
  ck.fact("six flats including the empty set", fl.size() == 6 && has_empty);

  bool all_vanish = true;
  for (const FVector& x : enumerate_covectors(m)) all_vanish = all_vanish && !zero_set(x).empty();
  ck.fact("every covector has a zero coordinate", all_vanish,
          "the four columns realize every projective point, so no row combination "
          "avoids all of them");

  std::vector<std::set<std::string>> expected = fl;
  expected.erase(std::find(expected.begin(), expected.end(), std::set<std::string>{}));
  ck.fact("covector zero sets are exactly the nonempty flats",
          sorted_sets(flats_from_covectors(m)) == expected,
          "the empty flat is not a zero set, so the inclusion is strict");
}

// --- rank1-phase -----------------------------------------------------------

FMatroid build_rank1_phase() { return rank1_from_phi(vec(tract_phase(), 2, "(1, i)")); }

void check_rank1_phase(const FMatroid& m, Checker& ck) {
  const TractId ph = tract_phase();
  ck.fact("the defining ray is the single cocircuit orbit",
          m.cocircuit_reps == std::vector<FVector>{vec(ph, 2, "(1, i)")},
          join_reps(m.cocircuit_reps));
  ck.fact("the circuit orbit is the diagonal counter-ray",
          m.circuit_reps == std::vector<FVector>{vec(ph, 2, "(1, -i)")},
          join_reps(m.circuit_reps));
  ck.fact("circuit and cocircuit are orthogonal",
          is_orthogonal(m.circuit_reps.front(), m.cocircuit_reps.front()));
  ck.fact("strong circuit axioms are proven",
          check_circuit_axioms(ph, m.ground, m.circuit_reps, AxiomMode::Strong).proven_p());

  std::vector<Scalar> values = {scalar_zero(ph), scalar_one(ph), make_phase(make_dir(0, 1)),
                                scalar_neg_one(ph), make_phase(make_dir(1, 1))};
  bool agree = true;
  for (const Scalar& a : values)
    for (const Scalar& b : values) {
      FVector x = make_fvector(ph, m.ground, {a, b});
      agree = agree && is_covector(m, x) == is_covector_rref(m, x);
    }
  ck.fact("membership routes agree on a direction grid", agree, "25 grid elements");
}

// --- rank1-tr --------------------------------------------------------------

FMatroid build_rank1_tr() { return rank1_from_phi(vec(tract_tr(), 4, "(1, 2, -3, 4)")); }

void check_rank1_tr(const FMatroid& m, Checker& ck) {
  const TractId tr = tract_tr();
  ck.fact("six pair circuits led by (1, -1/2, 0, 0)",
          m.circuit_reps.size() == 6 &&
              m.circuit_reps.front() == vec(tr, 4, "(1, -1/2, 0, 0)"),
          join_reps(m.circuit_reps));
  ck.fact("strong circuit axioms are proven",
          check_circuit_axioms(tr, m.ground, m.circuit_reps, AxiomMode::Strong).proven_p());

  FMatroid s = dual(m);
  ck.fact("the dual has the defining vector as its single circuit orbit",
          s.circuit_reps == std::vector<FVector>{vec(tr, 4, "(1, 2, -3, 4)")},
          join_reps(s.circuit_reps));

  FVector x = vec(tr, 4, "(2, -1, 0, 0)");
  FVector y = vec(tr, 4, "(16, 0, 0, -4)");
  ck.fact("the perturbation pair are covectors of the dual",
          is_covector(s, x) && is_covector(s, y));

  std::optional<Rat> eps = epsilon_threshold(x, y, s.circuit_reps);
  ck.fact("the perturbation threshold is exactly 1/8", eps && *eps == Rat(1) / Rat(8),
          eps ? "threshold " + eps->str() : "unconstrained");

  std::vector<FVector> ws = compose_epsilon(x, y, s.circuit_reps);
  bool ok = ws.size() == 2;
  for (const FVector& w : ws)
    ok = ok && is_covector(s, w) && support(w) == std::set<std::string>{"1", "2", "4"};
  ck.fact("both returned witnesses are covectors with the union support", ok, join_reps(ws));

  ck.fact("scale 1/4 breaks orthogonality while 9/80 preserves it",
          !is_covector(s, compose_at_eta(x, y, Rat(1) / Rat(4))) &&
              is_covector(s, compose_at_eta(x, y, Rat(9) / Rat(80))) &&
              !is_covector(s, compose_at_eta(x, y, Rat(1) / Rat(7))),
          "the uncapped per-circuit bound 1/2 admits failing scales; 1/8 is sharp");
}

// --- om-u24 ----------------------------------------------------------------

FMatroid build_om_u24() {
  GroundSet g = numbered_ground(4);
  std::vector<FVector> good = {vec(tract_sign(), 4, "(+, +, -, 0)"),
                               vec(tract_sign(), 4, "(+, +, 0, -)"),
                               vec(tract_sign(), 4, "(+, 0, -, +)"),
                               vec(tract_sign(), 4, "(0, +, +, -)")};
  return from_circuit_reps(tract_sign(), g, good);
}

std::vector<FVector> inflation_closure(const FMatroid& m) {
  std::vector<FVector> pool = {fvector_zero(m.tract, m.ground)};
  for (const FVector& c : m.cocircuit_reps) {
    pool.push_back(c);
    pool.push_back(scalar_mul(scalar_neg_one(m.tract), c));
  }
  bool grew = true;
  while (grew) {
    grew = false;
    size_t n = pool.size();
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) {
        FVector z = compose_inflation(pool[i], pool[j]);
        if (std::find(pool.begin(), pool.end(), z) == pool.end()) {
          pool.push_back(z);
          grew = true;
        }
      }
  }
  return sorted_vecs(std::move(pool));
}

void check_om_u24(const FMatroid& m, Checker& ck) {
  ck.fact("strong circuit axioms are proven",
          check_circuit_axioms(m.tract, m.ground, m.circuit_reps, AxiomMode::Strong).proven_p());

  std::vector<FVector> covs = enumerate_covectors(m);
  ck.fact("seventeen covectors", covs.size() == 17, std::to_string(covs.size()) + " enumerated");

  std::vector<FVector> nonzero;
  for (const FVector& x : covs)
    if (!x.is_zero()) nonzero.push_back(x);
  ck.fact("minimal-support covectors are the cocircuit orbits",
          dedupe_reps(minsupp(nonzero)) == m.cocircuit_reps);

  ck.fact("every covector is a composition of signed cocircuits",
          inflation_closure(m) == sorted_vecs(covs));

  std::vector<std::set<std::string>> fl = sorted_sets(flats(m.underlying));
  ck.fact("flats are exactly the covector zero sets",
          sorted_sets(flats_from_covectors(m)) == fl);
  ck.fact("the composition route reproduces the flats", flats_via_composition(m) == fl);

  std::vector<FVector> bad = m.circuit_reps;
  bad[0] = vec(tract_sign(), 4, "(+, +, +, 0)");
  PropertyVerdict v = check_circuit_axioms(m.tract, m.ground, bad, AxiomMode::Strong);
  ck.fact("a sign-flipped circuit set is refuted with a witness",
          v.refuted_p() && !v.witness.empty(), v.witness);
}

// --- om-k4 -----------------------------------------------------------------

FMatroid build_om_k4() {
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
  return from_circuit_reps(tract_krasner(), g, reps);
}

void check_om_k4(const FMatroid& m, Checker& ck) {
  ck.fact("twelve circuit orbits", m.circuit_reps.size() == 12);
  ck.fact("strong circuit axioms are proven",
          check_circuit_axioms(m.tract, m.ground, m.circuit_reps, AxiomMode::Strong).proven_p());

  std::set<uint32_t> unions = {0};
  std::vector<uint32_t> cocirc = cocircuit_masks(m.underlying);
  for (uint32_t pick = 1; pick < (1u << cocirc.size()); ++pick) {
    uint32_t u = 0;
    for (size_t i = 0; i < cocirc.size(); ++i)
      if (pick & (1u << i)) u |= cocirc[i];
    unions.insert(u);
  }
  std::set<uint32_t> enumerated;
  for (const FVector& x : enumerate_covectors(m)) enumerated.insert(support_mask(x));
  ck.fact("covector supports are exactly the unions of cocircuit supports",
          enumerated == unions,
          std::to_string(enumerated.size()) + " support patterns");

  std::vector<std::set<std::string>> fl = sorted_sets(flats(m.underlying));
  ck.fact("flats are exactly the covector zero sets",
          sorted_sets(flats_from_covectors(m)) == fl);
  ck.fact("the composition route reproduces the flats", flats_via_composition(m) == fl);
}

// --- registry --------------------------------------------------------------

struct Entry {
  const char* id;
  const char* description;
  FMatroid (*build)();
  void (*check)(const FMatroid&, Checker&);
};

const Entry kEntries[] = {
    {"topclosure-541", "Rank-2 phase matroid whose covector set is not topologically closed",
     build_topclosure, check_topclosure},
    {"lindep-542",
     "Two distinct phase combinations expressing one covector over the same spanning pair",
     build_lindep, check_lindep},
    {"duality-544", "Phase matroid with a vector and a covector that are not orthogonal",
     build_duality, check_duality},
    {"deletion-545",
     "Seven-element phase matroid with a deletion covector that extends to no covector",
     build_deletion, check_deletion},
    {"contraction-546",
     "Six-element phase matroid whose contraction has covectors that do not lift",
     build_contraction, check_contraction},
    {"morph-ex44", "Two distinct Gaussian-rational matroids with the same phase image",
     build_morph, check_morph},
    {"flats-f3", "Four-point line over F_3 where the empty flat is no covector zero set",
     build_flats_f3, check_flats_f3},
    {"rank1-phase", "Rank-1 phase matroid from a defining ray", build_rank1_phase,
     check_rank1_phase},
    {"rank1-tr", "Rank-1 tropical-real matroid and its dual, with perturbation data",
     build_rank1_tr, check_rank1_tr},
    {"om-u24", "Uniform rank-2 sign matroid on four elements", build_om_u24, check_om_u24},
    {"om-k4", "Indicator matroid of the complete graph on four vertices plus a parallel edge",
     build_om_k4, check_om_k4},
};

const Entry& entry_of(const std::string& id) {
  for (const Entry& e : kEntries)
    if (id == e.id) return e;
  throw ValidationError("unknown fixture id '" + id + "'");
}

}  // namespace

std::vector<std::string> fixture_ids() {
  std::vector<std::string> out;
  for (const Entry& e : kEntries) out.push_back(e.id);
  return out;
}

bool is_fixture_id(const std::string& id) {
  for (const Entry& e : kEntries)
    if (id == e.id) return true;
  return false;
}

LoadedFixture load_fixture(const std::string& id) {
  const Entry& e = entry_of(id);
  FMatroid m = e.build();
  Checker ck;
  e.check(m, ck);
  std::vector<std::string> names;
  for (const FixtureFact& f : ck.facts) names.push_back(f.name);
  return {e.id, e.description, std::move(m), std::move(names)};
}

FixtureReport run_fixture(const std::string& id) {
  const Entry& e = entry_of(id);
  FMatroid m = e.build();
  Checker ck;
  e.check(m, ck);
  return {e.id, e.description, std::move(ck.facts)};
}

std::vector<FixtureReport> run_all_fixtures() {
  std::vector<FixtureReport> out;
  for (const Entry& e : kEntries) out.push_back(run_fixture(e.id));
  return out;
}

}  // namespace tracts
