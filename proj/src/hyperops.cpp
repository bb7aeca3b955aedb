#include "tracts/hyperops.hpp"

#include <algorithm>
#include <set>

#include "tracts/errors.hpp"

namespace tracts {

namespace {

std::vector<Scalar> nonzero_terms(const TractId& t, const std::vector<Scalar>& terms) {
  std::vector<Scalar> out;
  for (const Scalar& s : terms) {
    require_tract(t, s);
    if (!s.is_zero()) out.push_back(s);
  }
  return out;
}

std::vector<Dir> distinct_dirs(const std::vector<Dir>& dirs) {
  std::set<Dir> uniq(dirs.begin(), dirs.end());
  return {uniq.begin(), uniq.end()};
}

bool phase_zero_criterion(const std::vector<Dir>& raw) {
  std::vector<Dir> dirs = distinct_dirs(raw);
  if (dirs.empty()) return true;
  if (dirs.size() == 2 && dir_antipodal(dirs[0], dirs[1])) return true;
  return !closed_halfplane_exists(dirs);
}

bool max_dirs_no_open_halfplane(const std::vector<std::pair<Rat, Dir>>& terms) {
  if (terms.empty()) return true;
  Rat mx(0);
  for (const auto& [m, d] : terms) mx = std::max(mx, m);
  std::vector<Dir> dirs;
  for (const auto& [m, d] : terms)
    if (m == mx) dirs.push_back(d);
  return !open_halfplane_exists(distinct_dirs(dirs));
}

}  // namespace

bool zero_in_hypersum(const TractId& t, const std::vector<Scalar>& all_terms) {
  std::vector<Scalar> terms = nonzero_terms(t, all_terms);
  switch (t.kind) {
    case TractKind::FieldQ: {
      Rat sum(0);
      for (const Scalar& s : terms) sum += std::get<QVal>(s.payload).v;
      return sum == 0;
    }
    case TractKind::FieldQi: {
      GRat sum;
      for (const Scalar& s : terms) sum = sum + std::get<QiVal>(s.payload).v;
      return sum.is_zero();
    }
    case TractKind::FieldFp: {
      unsigned long long sum = 0;
      for (const Scalar& s : terms) sum += std::get<FpVal>(s.payload).r;
      return sum % t.p == 0;
    }
    case TractKind::Krasner:
      return terms.size() != 1;
    case TractKind::Sign: {
      bool pos = false, neg_seen = false;
      for (const Scalar& s : terms) (std::get<SignVal>(s.payload).s > 0 ? pos : neg_seen) = true;
      return terms.empty() || (pos && neg_seen);
    }
    case TractKind::Phase: {
      std::vector<Dir> dirs;
      for (const Scalar& s : terms) dirs.push_back(std::get<PhVal>(s.payload).d);
      return phase_zero_criterion(dirs);
    }
    case TractKind::Triangle: {
      // max term no larger than the sum of the others
      Rat total(0), mx(0);
      for (const Scalar& s : terms) {
        const Rat& m = std::get<TriVal>(s.payload).m;
        total += m;
        mx = std::max(mx, m);
      }
      return mx <= total - mx;
    }
    case TractKind::TropReal: {
      // maximum-magnitude terms must include some value and its negative
      Rat mx(0);
      for (const Scalar& s : terms) mx = std::max(mx, rat_abs(std::get<TRVal>(s.payload).v));
      if (mx == 0) return true;
      bool plus = false, minus = false;
      for (const Scalar& s : terms) {
        const Rat& v = std::get<TRVal>(s.payload).v;
        if (v == mx) plus = true;
        if (v == -mx) minus = true;
      }
      return plus && minus;
    }
    case TractKind::TropComplex: {
      std::vector<std::pair<Rat, Dir>> md;
      for (const Scalar& s : terms) {
        const auto& x = std::get<TCVal>(s.payload);
        md.emplace_back(x.m, x.d);
      }
      return max_dirs_no_open_halfplane(md);
    }
    case TractKind::TropPhase: {
      std::vector<std::pair<Rat, Dir>> md;
      for (const Scalar& s : terms) md.emplace_back(Rat(1), std::get<TPhVal>(s.payload).d);
      return max_dirs_no_open_halfplane(md);
    }
    case TractKind::UltraTriangle: {
      // at least two terms attain the maximum
      Rat mx(0);
      for (const Scalar& s : terms) mx = std::max(mx, std::get<TTriVal>(s.payload).m);
      if (terms.empty()) return true;
      int attain = 0;
      for (const Scalar& s : terms)
        if (std::get<TTriVal>(s.payload).m == mx) ++attain;
      return attain >= 2;
    }
  }
  throw std::logic_error("unreachable tract kind");
}

bool in_hypersum(const Scalar& b, const std::vector<Scalar>& terms) {
  std::vector<Scalar> with_b;
  with_b.reserve(terms.size() + 1);
  with_b.push_back(neg(b));
  with_b.insert(with_b.end(), terms.begin(), terms.end());
  return zero_in_hypersum(b.tract, with_b);
}

namespace {

Dir mediant(const Dir& a, const Dir& b) { return make_dir(a.x + b.x, a.y + b.y); }

void push_unique(std::vector<Scalar>& out, const Scalar& s) {
  if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(s);
}

}  // namespace

std::vector<Scalar> pair_sum_candidates(const Scalar& a, const Scalar& b) {
  require_same_tract(a, b);
  const TractId& t = a.tract;
  if (a.is_zero()) return {b};
  if (b.is_zero()) return {a};
  std::vector<Scalar> out;
  switch (t.kind) {
    case TractKind::FieldQ:
    case TractKind::FieldQi:
    case TractKind::FieldFp: {
      if (t.kind == TractKind::FieldQ)
        out.push_back(make_q(std::get<QVal>(a.payload).v + std::get<QVal>(b.payload).v));
      else if (t.kind == TractKind::FieldQi)
        out.push_back(make_qi(std::get<QiVal>(a.payload).v + std::get<QiVal>(b.payload).v));
      else
        out.push_back(make_fp(t, static_cast<long long>(std::get<FpVal>(a.payload).r) +
                                     std::get<FpVal>(b.payload).r));
      break;
    }
    case TractKind::Krasner: {
      out = {scalar_zero(t), make_kone()};
      break;
    }
    case TractKind::Sign: {
      int sa = std::get<SignVal>(a.payload).s, sb = std::get<SignVal>(b.payload).s;
      if (sa == sb)
        out = {a};
      else
        out = {scalar_zero(t), make_sign(1), make_sign(-1)};
      break;
    }
    case TractKind::Phase: {
      const Dir& x = std::get<PhVal>(a.payload).d;
      const Dir& y = std::get<PhVal>(b.payload).d;
      if (x == y) {
        out = {a};
      } else if (dir_antipodal(x, y)) {
        out = {scalar_zero(t), a, b};
      } else {
        // open arc strictly between x and y: interior witnesses only
        Dir m = mediant(x, y);
        out = {make_phase(m), make_phase(mediant(x, m)), make_phase(mediant(m, y))};
      }
      break;
    }
    case TractKind::Triangle: {
      const Rat& ma = std::get<TriVal>(a.payload).m;
      const Rat& mb = std::get<TriVal>(b.payload).m;
      Rat lo = ma > mb ? ma - mb : mb - ma;
      Rat hi = ma + mb;
      push_unique(out, make_tri(lo));  // zero when ma == mb
      push_unique(out, make_tri(hi));
      push_unique(out, make_tri((lo + hi) / 2));
      push_unique(out, make_tri(std::max(ma, mb)));
      break;
    }
    case TractKind::TropReal: {
      const Rat& va = std::get<TRVal>(a.payload).v;
      const Rat& vb = std::get<TRVal>(b.payload).v;
      if (rat_abs(va) > rat_abs(vb)) {
        out = {a};
      } else if (rat_abs(va) < rat_abs(vb)) {
        out = {b};
      } else if (va == vb) {
        out = {a};
      } else {
        // va = -vb: the interval |z| <= |va|
        Rat m = rat_abs(va);
        out = {scalar_zero(t), make_tr(m), make_tr(-m), make_tr(m / 2), make_tr(-m / 2)};
      }
      break;
    }
    case TractKind::TropComplex: {
      const auto& x = std::get<TCVal>(a.payload);
      const auto& y = std::get<TCVal>(b.payload);
      if (x.m > y.m) {
        out = {a};
      } else if (x.m < y.m) {
        out = {b};
      } else if (x.d == y.d) {
        out = {a};
      } else if (dir_antipodal(x.d, y.d)) {
        // full disk of radius m
        out = {scalar_zero(t),
               a,
               b,
               make_tc(x.m, rot90ccw(x.d)),
               make_tc(x.m, rot90cw(x.d)),
               make_tc(x.m / 2, x.d),
               make_tc(x.m / 2, rot90ccw(x.d))};
      } else {
        // closed short arc at radius m, endpoints attained
        out = {a, b, make_tc(x.m, mediant(x.d, y.d))};
      }
      break;
    }
    case TractKind::TropPhase: {
      const Dir& x = std::get<TPhVal>(a.payload).d;
      const Dir& y = std::get<TPhVal>(b.payload).d;
      if (x == y) {
        out = {a};
      } else if (dir_antipodal(x, y)) {
        // all of F
        out = {scalar_zero(t), a, b, make_tph(rot90ccw(x)), make_tph(rot90cw(x)),
               make_tph(mediant(x, rot90ccw(x)))};
      } else {
        // closed short arc, endpoints attained
        out = {a, b, make_tph(mediant(x, y))};
      }
      break;
    }
    case TractKind::UltraTriangle: {
      const Rat& ma = std::get<TTriVal>(a.payload).m;
      const Rat& mb = std::get<TTriVal>(b.payload).m;
      if (ma > mb) {
        out = {a};
      } else if (ma < mb) {
        out = {b};
      } else {
        // [0, ma]
        out = {scalar_zero(t), make_ttri(ma), make_ttri(ma / 2)};
      }
      break;
    }
  }
  return out;
}

PropertyVerdict inflation_property(const TractId& t) {
  switch (t.kind) {
    case TractKind::Krasner:
    case TractKind::Sign:
      return PropertyVerdict::proven("exhaustive over the finite carrier");
    case TractKind::TropPhase:
      return PropertyVerdict::proven("1 ⊞ -1 is all of F (antipodal pair sum)");
    case TractKind::FieldQ:
    case TractKind::FieldQi:
    case TractKind::FieldFp:
      return PropertyVerdict::refuted("1 ⊞ -1 = {0} does not contain 1");
    case TractKind::Phase:
      return PropertyVerdict::refuted("1 ⊞ -1 = {0,1,-1} does not contain i");
    case TractKind::Triangle:
      return PropertyVerdict::refuted("1 ⊞ -1 = [0,2] does not contain 3");
    case TractKind::TropReal:
      return PropertyVerdict::refuted("1 ⊞ -1 = [-1,1] does not contain 2");
    case TractKind::TropComplex:
      return PropertyVerdict::refuted("1 ⊞ -1 = {|z| <= 1} does not contain tc(2;1,0)");
    case TractKind::UltraTriangle:
      return PropertyVerdict::refuted("1 ⊞ -1 = [0,1] does not contain 2");
  }
  throw std::logic_error("unreachable tract kind");
}

}  // namespace tracts
