#include "tracts/scalar.hpp"

#include <algorithm>

#include "tracts/errors.hpp"
#include "tracts/verdict.hpp"

namespace tracts {

std::string to_string(PropertyVerdict::Status s) {
  switch (s) {
    case PropertyVerdict::Status::Proven: return "Proven";
    case PropertyVerdict::Status::Refuted: return "Refuted";
    case PropertyVerdict::Status::Unknown: return "Unknown";
  }
  return "Unknown";
}

namespace {

bool is_prime(unsigned p) {
  if (p < 2) return false;
  for (unsigned d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

}  // namespace

TractId tract_q() { return {TractKind::FieldQ, 0}; }
TractId tract_qi() { return {TractKind::FieldQi, 0}; }
TractId tract_fp(unsigned p) {
  if (!is_prime(p)) throw ValidationError("fp modulus " + std::to_string(p) + " is not prime");
  return {TractKind::FieldFp, p};
}
TractId tract_krasner() { return {TractKind::Krasner, 0}; }
TractId tract_sign() { return {TractKind::Sign, 0}; }
TractId tract_phase() { return {TractKind::Phase, 0}; }
TractId tract_triangle() { return {TractKind::Triangle, 0}; }
TractId tract_tr() { return {TractKind::TropReal, 0}; }
TractId tract_tc() { return {TractKind::TropComplex, 0}; }
TractId tract_tp() { return {TractKind::TropPhase, 0}; }
TractId tract_ttriangle() { return {TractKind::UltraTriangle, 0}; }

bool tract_finite(const TractId& t) {
  switch (t.kind) {
    case TractKind::FieldFp:
    case TractKind::Krasner:
    case TractKind::Sign: return true;
    default: return false;
  }
}

unsigned long tract_carrier_size(const TractId& t) {
  switch (t.kind) {
    case TractKind::FieldFp: return t.p;
    case TractKind::Krasner: return 2;
    case TractKind::Sign: return 3;
    default: return 0;
  }
}

bool tract_has_conjugation(const TractId& t) {
  switch (t.kind) {
    case TractKind::FieldQi:
    case TractKind::Phase:
    case TractKind::TropComplex:
    case TractKind::TropPhase: return true;
    default: return false;
  }
}

std::string tract_name(const TractId& t) {
  switch (t.kind) {
    case TractKind::FieldQ: return "q";
    case TractKind::FieldQi: return "qi";
    case TractKind::FieldFp: return "fp:" + std::to_string(t.p);
    case TractKind::Krasner: return "krasner";
    case TractKind::Sign: return "sign";
    case TractKind::Phase: return "phase";
    case TractKind::Triangle: return "triangle";
    case TractKind::TropReal: return "tr";
    case TractKind::TropComplex: return "tc";
    case TractKind::TropPhase: return "tp";
    case TractKind::UltraTriangle: return "ttriangle";
  }
  throw std::logic_error("unreachable tract kind");
}

TractId parse_tract(const std::string& s) {
  if (s == "q") return tract_q();
  if (s == "qi") return tract_qi();
  if (s == "krasner") return tract_krasner();
  if (s == "sign") return tract_sign();
  if (s == "phase") return tract_phase();
  if (s == "triangle") return tract_triangle();
  if (s == "tr") return tract_tr();
  if (s == "tc") return tract_tc();
  if (s == "tp") return tract_tp();
  if (s == "ttriangle") return tract_ttriangle();
  if (s.rfind("fp:", 0) == 0) {
    unsigned long p = std::stoul(s.substr(3));
    return tract_fp(static_cast<unsigned>(p));
  }
  throw std::invalid_argument("unknown tract '" + s + "'");
}

// --- factories -------------------------------------------------------------

Scalar scalar_zero(const TractId& t) { return {t, ZeroVal{}}; }

Scalar scalar_one(const TractId& t) {
  switch (t.kind) {
    case TractKind::FieldQ: return {t, QVal{Rat(1)}};
    case TractKind::FieldQi: return {t, QiVal{GRat(Rat(1))}};
    case TractKind::FieldFp: return {t, FpVal{1}};
    case TractKind::Krasner: return {t, KOneVal{}};
    case TractKind::Sign: return {t, SignVal{1}};
    case TractKind::Phase: return {t, PhVal{make_dir(1, 0)}};
    case TractKind::Triangle: return {t, TriVal{Rat(1)}};
    case TractKind::TropReal: return {t, TRVal{Rat(1)}};
    case TractKind::TropComplex: return {t, TCVal{Rat(1), make_dir(1, 0)}};
    case TractKind::TropPhase: return {t, TPhVal{make_dir(1, 0)}};
    case TractKind::UltraTriangle: return {t, TTriVal{Rat(1)}};
  }
  throw std::logic_error("unreachable tract kind");
}

Scalar scalar_neg_one(const TractId& t) { return neg(scalar_one(t)); }

Scalar make_q(const Rat& v) {
  if (v == 0) return scalar_zero(tract_q());
  return {tract_q(), QVal{v}};
}

Scalar make_qi(const GRat& v) {
  if (v.is_zero()) return scalar_zero(tract_qi());
  return {tract_qi(), QiVal{v}};
}

Scalar make_fp(const TractId& t, long long v) {
  if (t.kind != TractKind::FieldFp) throw TractMismatchError("make_fp on non-fp tract");
  long long p = static_cast<long long>(t.p);
  long long r = ((v % p) + p) % p;
  if (r == 0) return scalar_zero(t);
  return {t, FpVal{static_cast<unsigned>(r)}};
}

Scalar make_kone() { return {tract_krasner(), KOneVal{}}; }

Scalar make_sign(int s) {
  if (s == 0) return scalar_zero(tract_sign());
  return {tract_sign(), SignVal{s > 0 ? 1 : -1}};
}

Scalar make_phase(const Dir& d) { return {tract_phase(), PhVal{d}}; }

Scalar make_tri(const Rat& m) {
  if (m < 0) throw ValidationError("triangle magnitude must be nonnegative");
  if (m == 0) return scalar_zero(tract_triangle());
  return {tract_triangle(), TriVal{m}};
}

Scalar make_tr(const Rat& v) {
  if (v == 0) return scalar_zero(tract_tr());
  return {tract_tr(), TRVal{v}};
}

Scalar make_tc(const Rat& m, const Dir& d) {
  if (m < 0) throw ValidationError("tropical complex magnitude must be nonnegative");
  if (m == 0) return scalar_zero(tract_tc());
  return {tract_tc(), TCVal{m, d}};
}

Scalar make_tph(const Dir& d) { return {tract_tp(), TPhVal{d}}; }

Scalar make_ttri(const Rat& m) {
  if (m < 0) throw ValidationError("ultra triangle magnitude must be nonnegative");
  if (m == 0) return scalar_zero(tract_ttriangle());
  return {tract_ttriangle(), TTriVal{m}};
}

void require_same_tract(const Scalar& a, const Scalar& b) {
  if (!(a.tract == b.tract))
    throw TractMismatchError("scalar tract mismatch: " + tract_name(a.tract) + " vs " +
                             tract_name(b.tract));
}

void require_tract(const TractId& t, const Scalar& a) {
  if (!(a.tract == t))
    throw TractMismatchError("scalar over " + tract_name(a.tract) + ", expected " + tract_name(t));
}

// --- group operations ------------------------------------------------------

namespace {

unsigned fp_mul(unsigned a, unsigned b, unsigned p) {
  return static_cast<unsigned>((static_cast<unsigned long long>(a) * b) % p);
}

unsigned fp_pow(unsigned a, unsigned e, unsigned p) {
  unsigned long long r = 1, base = a % p;
  while (e) {
    if (e & 1) r = (r * base) % p;
    base = (base * base) % p;
    e >>= 1;
  }
  return static_cast<unsigned>(r);
}

}  // namespace

Scalar mul(const Scalar& a, const Scalar& b) {
  require_same_tract(a, b);
  if (a.is_zero() || b.is_zero()) return scalar_zero(a.tract);
  const TractId& t = a.tract;
  switch (t.kind) {
    case TractKind::FieldQ:
      return make_q(std::get<QVal>(a.payload).v * std::get<QVal>(b.payload).v);
    case TractKind::FieldQi:
      return make_qi(std::get<QiVal>(a.payload).v * std::get<QiVal>(b.payload).v);
    case TractKind::FieldFp:
      return {t, FpVal{fp_mul(std::get<FpVal>(a.payload).r, std::get<FpVal>(b.payload).r, t.p)}};
    case TractKind::Krasner: return a;
    case TractKind::Sign:
      return {t, SignVal{std::get<SignVal>(a.payload).s * std::get<SignVal>(b.payload).s}};
    case TractKind::Phase:
      return {t, PhVal{dir_mul(std::get<PhVal>(a.payload).d, std::get<PhVal>(b.payload).d)}};
    case TractKind::Triangle:
      return {t, TriVal{std::get<TriVal>(a.payload).m * std::get<TriVal>(b.payload).m}};
    case TractKind::TropReal:
      return {t, TRVal{std::get<TRVal>(a.payload).v * std::get<TRVal>(b.payload).v}};
    case TractKind::TropComplex: {
      const auto& x = std::get<TCVal>(a.payload);
      const auto& y = std::get<TCVal>(b.payload);
      return {t, TCVal{x.m * y.m, dir_mul(x.d, y.d)}};
    }
    case TractKind::TropPhase:
      return {t, TPhVal{dir_mul(std::get<TPhVal>(a.payload).d, std::get<TPhVal>(b.payload).d)}};
    case TractKind::UltraTriangle:
      return {t, TTriVal{std::get<TTriVal>(a.payload).m * std::get<TTriVal>(b.payload).m}};
  }
  throw std::logic_error("unreachable tract kind");
}

Scalar inv(const Scalar& a) {
  if (a.is_zero()) throw TractError("inversion of zero in " + tract_name(a.tract));
  const TractId& t = a.tract;
  switch (t.kind) {
    case TractKind::FieldQ: return make_q(Rat(1) / std::get<QVal>(a.payload).v);
    case TractKind::FieldQi: return make_qi(grat_inv(std::get<QiVal>(a.payload).v));
    case TractKind::FieldFp:
      return {t, FpVal{fp_pow(std::get<FpVal>(a.payload).r, t.p - 2, t.p)}};
    case TractKind::Krasner: return a;
    case TractKind::Sign: return a;
    case TractKind::Phase: return {t, PhVal{dir_inv(std::get<PhVal>(a.payload).d)}};
    case TractKind::Triangle: return {t, TriVal{Rat(1) / std::get<TriVal>(a.payload).m}};
    case TractKind::TropReal: return {t, TRVal{Rat(1) / std::get<TRVal>(a.payload).v}};
    case TractKind::TropComplex: {
      const auto& x = std::get<TCVal>(a.payload);
      return {t, TCVal{Rat(1) / x.m, dir_inv(x.d)}};
    }
    case TractKind::TropPhase: return {t, TPhVal{dir_inv(std::get<TPhVal>(a.payload).d)}};
    case TractKind::UltraTriangle: return {t, TTriVal{Rat(1) / std::get<TTriVal>(a.payload).m}};
  }
  throw std::logic_error("unreachable tract kind");
}

Scalar neg(const Scalar& a) {
  if (a.is_zero()) return a;
  const TractId& t = a.tract;
  switch (t.kind) {
    case TractKind::FieldQ: return make_q(-std::get<QVal>(a.payload).v);
    case TractKind::FieldQi: return make_qi(-std::get<QiVal>(a.payload).v);
    case TractKind::FieldFp: return {t, FpVal{t.p - std::get<FpVal>(a.payload).r}};
    case TractKind::Krasner: return a;  // -1 = 1
    case TractKind::Sign: return {t, SignVal{-std::get<SignVal>(a.payload).s}};
    case TractKind::Phase: return {t, PhVal{dir_neg(std::get<PhVal>(a.payload).d)}};
    case TractKind::Triangle: return a;  // -1 = 1
    case TractKind::TropReal: return {t, TRVal{-std::get<TRVal>(a.payload).v}};
    case TractKind::TropComplex: {
      const auto& x = std::get<TCVal>(a.payload);
      return {t, TCVal{x.m, dir_neg(x.d)}};
    }
    case TractKind::TropPhase: return {t, TPhVal{dir_neg(std::get<TPhVal>(a.payload).d)}};
    case TractKind::UltraTriangle: return a;  // -1 = 1
  }
  throw std::logic_error("unreachable tract kind");
}

Scalar conj(const Scalar& a) {
  if (a.is_zero()) return a;
  const TractId& t = a.tract;
  switch (t.kind) {
    case TractKind::FieldQi: return make_qi(grat_conj(std::get<QiVal>(a.payload).v));
    case TractKind::Phase: return {t, PhVal{dir_conj(std::get<PhVal>(a.payload).d)}};
    case TractKind::TropComplex: {
      const auto& x = std::get<TCVal>(a.payload);
      return {t, TCVal{x.m, dir_conj(x.d)}};
    }
    case TractKind::TropPhase: return {t, TPhVal{dir_conj(std::get<TPhVal>(a.payload).d)}};
    default: return a;
  }
}

Rat scalar_magnitude(const Scalar& a) {
  if (a.is_zero()) return Rat(0);
  switch (a.tract.kind) {
    case TractKind::FieldQ: return rat_abs(std::get<QVal>(a.payload).v);
    case TractKind::Triangle: return std::get<TriVal>(a.payload).m;
    case TractKind::TropReal: return rat_abs(std::get<TRVal>(a.payload).v);
    case TractKind::TropComplex: return std::get<TCVal>(a.payload).m;
    case TractKind::TropPhase: return Rat(1);
    case TractKind::UltraTriangle: return std::get<TTriVal>(a.payload).m;
    default:
      throw TractError("magnitude undefined for " + tract_name(a.tract));
  }
}

bool scalar_less(const Scalar& a, const Scalar& b) {
  require_same_tract(a, b);
  if (a.is_zero() || b.is_zero()) return a.is_zero() && !b.is_zero();
  auto dir_lt = [](const Dir& x, const Dir& y) { return x < y; };
  switch (a.tract.kind) {
    case TractKind::FieldQ: return std::get<QVal>(a.payload).v < std::get<QVal>(b.payload).v;
    case TractKind::FieldQi: {
      const GRat& x = std::get<QiVal>(a.payload).v;
      const GRat& y = std::get<QiVal>(b.payload).v;
      if (x.re != y.re) return x.re < y.re;
      return x.im < y.im;
    }
    case TractKind::FieldFp: return std::get<FpVal>(a.payload).r < std::get<FpVal>(b.payload).r;
    case TractKind::Krasner: return false;
    case TractKind::Sign: return std::get<SignVal>(a.payload).s < std::get<SignVal>(b.payload).s;
    case TractKind::Phase: return dir_lt(std::get<PhVal>(a.payload).d, std::get<PhVal>(b.payload).d);
    case TractKind::Triangle: return std::get<TriVal>(a.payload).m < std::get<TriVal>(b.payload).m;
    case TractKind::TropReal: return std::get<TRVal>(a.payload).v < std::get<TRVal>(b.payload).v;
    case TractKind::TropComplex: {
      const auto& x = std::get<TCVal>(a.payload);
      const auto& y = std::get<TCVal>(b.payload);
      if (x.m != y.m) return x.m < y.m;
      return dir_lt(x.d, y.d);
    }
    case TractKind::TropPhase:
      return dir_lt(std::get<TPhVal>(a.payload).d, std::get<TPhVal>(b.payload).d);
    case TractKind::UltraTriangle:
      return std::get<TTriVal>(a.payload).m < std::get<TTriVal>(b.payload).m;
  }
  throw std::logic_error("unreachable tract kind");
}

std::string scalar_format(const Scalar& a) {
  if (a.is_zero()) return "0";
  switch (a.tract.kind) {
    case TractKind::FieldQ: return format_rat(std::get<QVal>(a.payload).v);
    case TractKind::FieldQi: return format_grat(std::get<QiVal>(a.payload).v);
    case TractKind::FieldFp: return std::to_string(std::get<FpVal>(a.payload).r);
    case TractKind::Krasner: return "1";
    case TractKind::Sign: return std::get<SignVal>(a.payload).s > 0 ? "+" : "-";
    case TractKind::Phase: {
      const Dir& d = std::get<PhVal>(a.payload).d;
      return "ph(" + d.x.str() + "," + d.y.str() + ")";
    }
    case TractKind::Triangle: return format_rat(std::get<TriVal>(a.payload).m);
    case TractKind::TropReal: return format_rat(std::get<TRVal>(a.payload).v);
    case TractKind::TropComplex: {
      const auto& x = std::get<TCVal>(a.payload);
      return "tc(" + format_rat(x.m) + ";" + x.d.x.str() + "," + x.d.y.str() + ")";
    }
    case TractKind::TropPhase: {
      const Dir& d = std::get<TPhVal>(a.payload).d;
      return "tp(" + d.x.str() + "," + d.y.str() + ")";
    }
    case TractKind::UltraTriangle: return format_rat(std::get<TTriVal>(a.payload).m);
  }
  throw std::logic_error("unreachable tract kind");
}

Scalar scalar_parse(const TractId& t, const std::string& raw) {
  std::string s;
  for (char c : raw)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw std::invalid_argument("empty scalar literal");
  if (s == "0" && t.kind != TractKind::FieldQ && t.kind != TractKind::FieldQi &&
      t.kind != TractKind::FieldFp)
    return scalar_zero(t);
  switch (t.kind) {
    case TractKind::FieldQ: return make_q(parse_rat(s));
    case TractKind::FieldQi: return make_qi(parse_grat(s));
    case TractKind::FieldFp: return make_fp(t, std::stoll(s));
    case TractKind::Krasner:
      if (s == "1") return make_kone();
      throw std::invalid_argument("krasner literal must be 0 or 1, got '" + raw + "'");
    case TractKind::Sign:
      if (s == "+") return make_sign(1);
      if (s == "-") return make_sign(-1);
      throw std::invalid_argument("sign literal must be 0, + or -, got '" + raw + "'");
    case TractKind::Phase:
      if (s == "1") return scalar_one(t);
      if (s == "-1") return scalar_neg_one(t);
      if (s == "i") return make_phase(make_dir(0, 1));
      if (s == "-i") return make_phase(make_dir(0, -1));
      return make_phase(parse_dir(s));
    case TractKind::Triangle: return make_tri(parse_rat(s));
    case TractKind::TropReal: return make_tr(parse_rat(s));
    case TractKind::TropComplex: {
      if (s.rfind("tc(", 0) != 0 || s.back() != ')')
        throw std::invalid_argument("malformed tc literal '" + raw + "'");
      size_t semi = s.find(';');
      if (semi == std::string::npos)
        throw std::invalid_argument("malformed tc literal '" + raw + "'");
      Rat m = parse_rat(s.substr(3, semi - 3));
      std::string dir_part = s.substr(semi + 1, s.size() - semi - 2);
      size_t comma = dir_part.find(',');
      if (comma == std::string::npos)
        throw std::invalid_argument("malformed tc literal '" + raw + "'");
      BigInt x(dir_part.substr(0, comma));
      BigInt y(dir_part.substr(comma + 1));
      return make_tc(m, make_dir(x, y));
    }
    case TractKind::TropPhase:
      if (s == "1") return scalar_one(t);
      if (s == "-1") return scalar_neg_one(t);
      if (s == "i") return make_tph(make_dir(0, 1));
      if (s == "-i") return make_tph(make_dir(0, -1));
      return make_tph(parse_dir(s));
    case TractKind::UltraTriangle: return make_ttri(parse_rat(s));
  }
  throw std::logic_error("unreachable tract kind");
}

std::vector<Scalar> carrier_elements(const TractId& t) {
  switch (t.kind) {
    case TractKind::Krasner: return {scalar_zero(t), make_kone()};
    case TractKind::Sign: return {scalar_zero(t), make_sign(-1), make_sign(1)};
    case TractKind::FieldFp: {
      std::vector<Scalar> out;
      for (unsigned r = 0; r < t.p; ++r) out.push_back(make_fp(t, r));
      return out;
    }
    default:
      throw InfiniteTractError("carrier of " + tract_name(t) + " is infinite");
  }
}

}  // namespace tracts
