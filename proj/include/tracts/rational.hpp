#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <string>

namespace tracts {

using BigInt = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

std::string format_int(const BigInt& n);

// "a" or "a/b", canonical: gcd-reduced, denominator positive and omitted when 1.
std::string format_rat(const Rat& q);
Rat parse_rat(const std::string& text);

Rat rat_abs(const Rat& q);
int rat_sign(const Rat& q);

// Exact square root when it exists in Q, nullopt otherwise.
std::optional<Rat> rat_exact_sqrt(const Rat& q);

// Gaussian rational a + b i.
struct GRat {
  Rat re;
  Rat im;

  GRat() = default;
  GRat(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}
  explicit GRat(const Rat& r) : re(r), im(0) {}

  bool is_zero() const { return re == 0 && im == 0; }
  friend bool operator==(const GRat&, const GRat&) = default;
};

GRat operator+(const GRat& a, const GRat& b);
GRat operator-(const GRat& a, const GRat& b);
GRat operator-(const GRat& a);
GRat operator*(const GRat& a, const GRat& b);
GRat grat_conj(const GRat& a);
GRat grat_inv(const GRat& a);  // throws std::domain_error on zero
GRat operator/(const GRat& a, const GRat& b);

// |a|^2 = re^2 + im^2, exact.
Rat grat_norm2(const GRat& a);
// Exact |a| when rational, nullopt otherwise.
std::optional<Rat> grat_exact_abs(const GRat& a);

// Canonical text: "0", "2", "-1/2", "i", "-i", "3i", "1+i", "1-2/3i".
std::string format_grat(const GRat& z);
GRat parse_grat(const std::string& text);

}  // namespace tracts
