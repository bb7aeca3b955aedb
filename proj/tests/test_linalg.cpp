#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tracts/errors.hpp"
#include "tracts/linalg.hpp"

using namespace tracts;

namespace {

bool rows_equal(const std::vector<std::vector<Scalar>>& got,
                const std::vector<std::vector<Scalar>>& want) {
  if (got.size() != want.size()) return false;
  for (size_t i = 0; i < got.size(); ++i)
    if (got[i] != want[i]) return false;
  return true;
}

std::vector<Scalar> qi_row(const std::string& csv) {
  std::vector<Scalar> out;
  std::string cur;
  for (char c : csv + ",") {
    if (c == ',') {
      out.push_back(scalar_parse(tract_qi(), cur));
      cur.clear();
    } else if (c != ' ') {
      cur += c;
    }
  }
  return out;
}

}  // namespace

TEST_CASE("field addition") {
  CHECK(scalar_add(make_q(Rat(1, 2)), make_q(Rat(1, 3))) == make_q(Rat(5, 6)));
  CHECK(scalar_add(make_q(Rat(1)), make_q(Rat(-1))).is_zero());
  CHECK(scalar_add(make_fp(tract_fp(5), 3), make_fp(tract_fp(5), 4)) == make_fp(tract_fp(5), 2));
  CHECK(scalar_add(make_fp(tract_fp(5), 3), make_fp(tract_fp(5), 2)).is_zero());
  CHECK(scalar_add(make_qi(parse_grat("1+i")), make_qi(parse_grat("-i"))) ==
        make_qi(parse_grat("1")));
  CHECK_THROWS_AS(scalar_add(make_sign(1), make_sign(1)), UnsupportedTractError);
  CHECK(scalar_sub(make_q(Rat(2)), make_q(Rat(2))).is_zero());
}

TEST_CASE("matrix literals") {
  FieldMatrix m = parse_matrix(tract_qi(), "[[1,0,1+i,1-i],[0,1,1-i,1+i]]");
  CHECK(m.rows == 2);
  CHECK(m.cols == 4);
  CHECK(m.at(0, 2) == make_qi(parse_grat("1+i")));
  CHECK(m.at(1, 3) == make_qi(parse_grat("1+i")));
  CHECK_THROWS_AS(parse_matrix(tract_q(), "[[1,2],[3]]"), std::invalid_argument);
  CHECK_THROWS_AS(make_matrix(tract_sign(), 1, 1, {make_sign(1)}), UnsupportedTractError);
  FieldMatrix f3 = parse_matrix(tract_fp(3), "[[1,0,1,1],[0,1,1,2]]");
  CHECK(f3.at(1, 3) == make_fp(tract_fp(3), 2));
}

TEST_CASE("rank") {
  FieldMatrix m = parse_matrix(tract_qi(), "[[1,0,1+i,1-i],[0,1,1-i,1+i]]");
  CHECK(rank(m) == 2);
  // every pair of columns is independent here
  for (uint32_t a = 0; a < 4; ++a)
    for (uint32_t b = a + 1; b < 4; ++b) CHECK(column_rank(m, (1u << a) | (1u << b)) == 2);
  FieldMatrix sing = parse_matrix(tract_q(), "[[1,2],[2,4]]");
  CHECK(rank(sing) == 1);
  CHECK(column_rank(sing, 0b01) == 1);
  FieldMatrix z = parse_matrix(tract_q(), "[[0,0],[0,0]]");
  CHECK(rank(z) == 0);
}

TEST_CASE("reduction against a basis gives the identity-bearing rows") {
  FieldMatrix m = parse_matrix(tract_qi(), "[[1,0,1+i,1-i],[0,1,1-i,1+i]]");
  auto r12 = reduce_against_basis(m, 0b0011);
  CHECK(rows_equal(r12, {qi_row("1,0,1+i,1-i"), qi_row("0,1,1-i,1+i")}));
  auto r34 = reduce_against_basis(m, 0b1100);
  CHECK(rows_equal(r34, {qi_row("1/4-1/4i,1/4+1/4i,1,0"), qi_row("1/4+1/4i,1/4-1/4i,0,1")}));
  // scrambling the generators leaves the reduced rows unchanged
  FieldMatrix mixed = parse_matrix(tract_qi(), "[[1,1,2,2],[0,1,1-i,1+i]]");
  CHECK(rows_equal(reduce_against_basis(mixed, 0b1100), r34));

  FieldMatrix dep = parse_matrix(tract_q(), "[[1,0],[0,0]]");
  CHECK_THROWS_AS(reduce_against_basis(dep, 0b10), ValidationError);
  FieldMatrix idm = parse_matrix(tract_q(), "[[1,0],[0,1]]");
  CHECK_THROWS_AS(reduce_against_basis(idm, 0b01), ValidationError);
}

TEST_CASE("null space") {
  FieldMatrix m = parse_matrix(tract_qi(), "[[1,0,1+i,1-i],[0,1,1-i,1+i]]");
  auto ns = nullspace(m);
  REQUIRE(ns.size() == 2);
  CHECK(ns[0] == qi_row("-1-i,-1+i,1,0"));
  CHECK(ns[1] == qi_row("-1+i,-1-i,0,1"));
  // each member annihilates every row
  for (const auto& v : ns)
    for (size_t r = 0; r < m.rows; ++r) {
      Scalar acc = scalar_zero(m.tract);
      for (size_t c = 0; c < m.cols; ++c) acc = scalar_add(acc, mul(m.at(r, c), v[c]));
      CHECK(acc.is_zero());
    }
  FieldMatrix f3 = parse_matrix(tract_fp(3), "[[1,0,1,1],[0,1,1,2]]");
  auto ns3 = nullspace(f3);
  REQUIRE(ns3.size() == 2);
  for (const auto& v : ns3)
    for (size_t r = 0; r < f3.rows; ++r) {
      Scalar acc = scalar_zero(f3.tract);
      for (size_t c = 0; c < f3.cols; ++c) acc = scalar_add(acc, mul(f3.at(r, c), v[c]));
      CHECK(acc.is_zero());
    }
  FieldMatrix idm = parse_matrix(tract_q(), "[[1,0],[0,1]]");
  CHECK(nullspace(idm).empty());
}
