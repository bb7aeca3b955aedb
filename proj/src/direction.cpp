#include "tracts/direction.hpp"

#include <algorithm>
#include <stdexcept>

namespace tracts {

Dir make_dir(BigInt x, BigInt y) {
  if (x == 0 && y == 0) throw std::domain_error("direction of zero");
  BigInt g = boost::multiprecision::gcd(boost::multiprecision::abs(x), boost::multiprecision::abs(y));
  return Dir{x / g, y / g};
}

Dir dir_of(const GRat& z) {
  if (z.is_zero()) throw std::domain_error("direction of zero");
  // a/b + (c/d) i  ->  ray (a*d, c*b), positive scale b*d cleared.
  BigInt a = boost::multiprecision::numerator(z.re);
  BigInt b = boost::multiprecision::denominator(z.re);
  BigInt c = boost::multiprecision::numerator(z.im);
  BigInt d = boost::multiprecision::denominator(z.im);
  return make_dir(a * d, c * b);
}

Dir dir_mul(const Dir& a, const Dir& b) {
  return make_dir(a.x * b.x - a.y * b.y, a.x * b.y + a.y * b.x);
}

Dir dir_inv(const Dir& a) {
  // 1/(x+yi) = (x-yi)/|.|^2; positive scale drops.
  return make_dir(a.x, -a.y);
}

Dir dir_conj(const Dir& a) { return Dir{a.x, -a.y}; }

Dir dir_neg(const Dir& a) { return Dir{-a.x, -a.y}; }

bool dir_antipodal(const Dir& a, const Dir& b) { return a == dir_neg(b); }

bool operator<(const Dir& a, const Dir& b) {
  if (a.x != b.x) return a.x < b.x;
  return a.y < b.y;
}

BigInt cross(const Dir& a, const Dir& b) { return a.x * b.y - a.y * b.x; }
BigInt dot(const Dir& a, const Dir& b) { return a.x * b.x + a.y * b.y; }

namespace {
// 0 for angle in [0, pi), 1 for [pi, 2pi)
int half_index(const Dir& d) { return (d.y > 0 || (d.y == 0 && d.x > 0)) ? 0 : 1; }
}  // namespace

bool angular_less(const Dir& a, const Dir& b) {
  int ha = half_index(a), hb = half_index(b);
  if (ha != hb) return ha < hb;
  return cross(a, b) > 0;
}

Dir rot90ccw(const Dir& a) { return Dir{-a.y, a.x}; }
Dir rot90cw(const Dir& a) { return Dir{a.y, -a.x}; }

namespace {

bool candidate_all_nonneg(const Dir& u, const std::vector<Dir>& dirs) {
  return std::all_of(dirs.begin(), dirs.end(), [&](const Dir& d) { return dot(d, u) >= 0; });
}

bool contains_ray(const std::vector<Dir>& dirs, const Dir& r) {
  return std::find(dirs.begin(), dirs.end(), r) != dirs.end();
}

}  // namespace

bool closed_halfplane_exists(const std::vector<Dir>& dirs) {
  if (dirs.empty()) throw std::domain_error("half-plane query on empty set");
  for (const Dir& d : dirs) {
    if (candidate_all_nonneg(rot90ccw(d), dirs)) return true;
    if (candidate_all_nonneg(rot90cw(d), dirs)) return true;
  }
  return false;
}

bool open_halfplane_exists(const std::vector<Dir>& dirs) {
  if (dirs.empty()) throw std::domain_error("half-plane query on empty set");
  // A weakly valid normal u can be tilted into a strict one unless both rays
  // orthogonal to u occur in D (an antipodal tight pair blocks any tilt).
  for (const Dir& d : dirs) {
    for (const Dir& u : {rot90ccw(d), rot90cw(d)}) {
      if (!candidate_all_nonneg(u, dirs)) continue;
      if (contains_ray(dirs, rot90ccw(u)) && contains_ray(dirs, rot90cw(u))) continue;
      return true;
    }
  }
  return false;
}

std::string format_dir(const Dir& d) { return "dir(" + d.x.str() + "," + d.y.str() + ")"; }

Dir parse_dir(const std::string& text) {
  auto fail = [&]() { throw std::invalid_argument("malformed direction '" + text + "'"); };
  size_t open = text.find('(');
  size_t comma = text.find(',');
  size_t close = text.find(')');
  if (open == std::string::npos || comma == std::string::npos || close == std::string::npos ||
      !(open < comma && comma < close) || close + 1 != text.size())
    fail();
  std::string head = text.substr(0, open);
  // accept "dir" and the scalar spellings "ph"/"tp" which share this payload
  if (head != "dir" && head != "ph" && head != "tp") fail();
  BigInt x(text.substr(open + 1, comma - open - 1));
  BigInt y(text.substr(comma + 1, close - comma - 1));
  return make_dir(x, y);
}

}  // namespace tracts
