#pragma once

#include <string>
#include <vector>

#include "tracts/rational.hpp"

namespace tracts {

// A ray through the origin: the class of (x,y) != (0,0) up to positive scaling,
// stored gcd-reduced with signs preserved. Equality is ray equality.
struct Dir {
  BigInt x;
  BigInt y;

  friend bool operator==(const Dir&, const Dir&) = default;
};

// gcd-reduces; throws std::domain_error on (0,0).
Dir make_dir(BigInt x, BigInt y);

// Ray of a nonzero Gaussian rational; throws std::domain_error on zero.
Dir dir_of(const GRat& z);

Dir dir_mul(const Dir& a, const Dir& b);
Dir dir_inv(const Dir& a);
Dir dir_conj(const Dir& a);
Dir dir_neg(const Dir& a);
bool dir_antipodal(const Dir& a, const Dir& b);

// Lexicographic order on reduced coordinates; for containers.
bool operator<(const Dir& a, const Dir& b);

// Counterclockwise angular order starting at the positive x axis.
bool angular_less(const Dir& a, const Dir& b);

// a.x*b.y - a.y*b.x
BigInt cross(const Dir& a, const Dir& b);
BigInt dot(const Dir& a, const Dir& b);

Dir rot90ccw(const Dir& a);
Dir rot90cw(const Dir& a);

// Whether some closed (resp. open) half-plane {v : <v,u> >= 0} (resp. > 0)
// contains every ray in D. Exact; decided via candidate normals orthogonal to
// members of D. Throws std::domain_error on empty D.
bool closed_halfplane_exists(const std::vector<Dir>& dirs);
bool open_halfplane_exists(const std::vector<Dir>& dirs);

std::string format_dir(const Dir& d);  // "dir(x,y)"
Dir parse_dir(const std::string& text);

}  // namespace tracts
