#include "tracts/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace tracts {

std::string format_int(const BigInt& n) { return n.str(); }

std::string format_rat(const Rat& q) {
  BigInt num = boost::multiprecision::numerator(q);
  BigInt den = boost::multiprecision::denominator(q);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

namespace {

void skip_spaces(const std::string& s, size_t& pos) {
  while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
}

// [+-]? digits, throws if no digits
BigInt parse_int_at(const std::string& s, size_t& pos) {
  skip_spaces(s, pos);
  size_t start = pos;
  if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) ++pos;
  size_t digits_start = pos;
  while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
  if (pos == digits_start) throw std::invalid_argument("expected integer in '" + s + "'");
  return BigInt(s.substr(start, pos - start));
}

Rat parse_rat_at(const std::string& s, size_t& pos) {
  BigInt num = parse_int_at(s, pos);
  skip_spaces(s, pos);
  if (pos < s.size() && s[pos] == '/') {
    ++pos;
    BigInt den = parse_int_at(s, pos);
    if (den == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    return Rat(num, den);
  }
  return Rat(num);
}

}  // namespace

Rat parse_rat(const std::string& text) {
  size_t pos = 0;
  Rat q = parse_rat_at(text, pos);
  skip_spaces(text, pos);
  if (pos != text.size()) throw std::invalid_argument("trailing input in rational '" + text + "'");
  return q;
}

Rat rat_abs(const Rat& q) { return q < 0 ? Rat(-q) : q; }

int rat_sign(const Rat& q) {
  if (q > 0) return 1;
  if (q < 0) return -1;
  return 0;
}

namespace {

std::optional<BigInt> int_exact_sqrt(const BigInt& n) {
  if (n < 0) return std::nullopt;
  BigInt r = boost::multiprecision::sqrt(n);
  if (r * r == n) return r;
  return std::nullopt;
}

}  // namespace

std::optional<Rat> rat_exact_sqrt(const Rat& q) {
  if (q < 0) return std::nullopt;
  auto sn = int_exact_sqrt(boost::multiprecision::numerator(q));
  if (!sn) return std::nullopt;
  auto sd = int_exact_sqrt(boost::multiprecision::denominator(q));
  if (!sd) return std::nullopt;
  return Rat(*sn, *sd);
}

GRat operator+(const GRat& a, const GRat& b) { return {a.re + b.re, a.im + b.im}; }
GRat operator-(const GRat& a, const GRat& b) { return {a.re - b.re, a.im - b.im}; }
GRat operator-(const GRat& a) { return {-a.re, -a.im}; }

GRat operator*(const GRat& a, const GRat& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

GRat grat_conj(const GRat& a) { return {a.re, -a.im}; }

GRat grat_inv(const GRat& a) {
  Rat n2 = grat_norm2(a);
  if (n2 == 0) throw std::domain_error("inversion of zero Gaussian rational");
  return {a.re / n2, -a.im / n2};
}

GRat operator/(const GRat& a, const GRat& b) { return a * grat_inv(b); }

Rat grat_norm2(const GRat& a) { return a.re * a.re + a.im * a.im; }

std::optional<Rat> grat_exact_abs(const GRat& a) { return rat_exact_sqrt(grat_norm2(a)); }

std::string format_grat(const GRat& z) {
  if (z.im == 0) return format_rat(z.re);
  std::string im_part;
  Rat ia = rat_abs(z.im);
  if (ia == 1)
    im_part = "i";
  else
    im_part = format_rat(ia) + "i";
  if (z.re == 0) return (z.im < 0 ? "-" : "") + im_part;
  return format_rat(z.re) + (z.im < 0 ? "-" : "+") + im_part;
}

GRat parse_grat(const std::string& text) {
  size_t pos = 0;
  skip_spaces(text, pos);
  // Each term: [+-]? (rational)? 'i'?  — a bare or trailing 'i' means coefficient 1.
  auto parse_term = [&](bool require_sign) -> std::pair<Rat, bool> {
    skip_spaces(text, pos);
    int sign = 1;
    bool saw_sign = false;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
      if (text[pos] == '-') sign = -1;
      ++pos;
      saw_sign = true;
      skip_spaces(text, pos);
    }
    if (require_sign && !saw_sign)
      throw std::invalid_argument("expected '+' or '-' in Gaussian rational '" + text + "'");
    Rat mag;
    if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      mag = parse_rat_at(text, pos);
    } else if (pos < text.size() && text[pos] == 'i') {
      mag = 1;
    } else {
      throw std::invalid_argument("malformed Gaussian rational '" + text + "'");
    }
    skip_spaces(text, pos);
    bool imag = false;
    if (pos < text.size() && text[pos] == 'i') {
      imag = true;
      ++pos;
    }
    return {sign * mag, imag};
  };

  auto [v1, imag1] = parse_term(false);
  GRat z = imag1 ? GRat(Rat(0), v1) : GRat(v1, Rat(0));
  skip_spaces(text, pos);
  if (pos < text.size()) {
    auto [v2, imag2] = parse_term(true);
    if (imag2 == imag1)
      throw std::invalid_argument("duplicate real or imaginary part in '" + text + "'");
    if (imag2)
      z.im = v2;
    else
      z.re = v2;
  }
  skip_spaces(text, pos);
  if (pos != text.size())
    throw std::invalid_argument("trailing input in Gaussian rational '" + text + "'");
  return z;
}

}  // namespace tracts
