#include "tracts/fvector.hpp"

#include <algorithm>

#include "tracts/errors.hpp"
#include "tracts/hyperops.hpp"

namespace tracts {

bool GroundSet::has(const std::string& label) const {
  return std::find(labels.begin(), labels.end(), label) != labels.end();
}

size_t GroundSet::index(const std::string& label) const {
  auto it = std::find(labels.begin(), labels.end(), label);
  if (it == labels.end()) throw ValidationError("unknown ground label: " + label);
  return static_cast<size_t>(it - labels.begin());
}

GroundSet make_ground(std::vector<std::string> labels) {
  for (size_t i = 0; i < labels.size(); ++i)
    for (size_t j = i + 1; j < labels.size(); ++j)
      if (labels[i] == labels[j]) throw ValidationError("duplicate ground label: " + labels[i]);
  return GroundSet{std::move(labels)};
}

GroundSet numbered_ground(int n) {
  if (n < 0) throw ValidationError("negative ground size");
  std::vector<std::string> labels;
  for (int i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
  return GroundSet{std::move(labels)};
}

const Scalar& FVector::at(const std::string& label) const { return entries[ground.index(label)]; }

bool FVector::is_zero() const {
  for (const Scalar& s : entries)
    if (!s.is_zero()) return false;
  return true;
}

FVector make_fvector(const TractId& tract, const GroundSet& ground,
                     std::vector<Scalar> entries) {
  if (entries.size() != ground.size())
    throw ValidationError("entry count does not match the ground set");
  for (const Scalar& s : entries) require_tract(tract, s);
  return FVector{tract, ground, std::move(entries)};
}

FVector fvector_zero(const TractId& tract, const GroundSet& ground) {
  return FVector{tract, ground,
                 std::vector<Scalar>(ground.size(), scalar_zero(tract))};
}

std::set<std::string> support(const FVector& x) {
  std::set<std::string> out;
  for (size_t i = 0; i < x.entries.size(); ++i)
    if (!x.entries[i].is_zero()) out.insert(x.ground.labels[i]);
  return out;
}

std::set<std::string> zero_set(const FVector& x) {
  std::set<std::string> out;
  for (size_t i = 0; i < x.entries.size(); ++i)
    if (x.entries[i].is_zero()) out.insert(x.ground.labels[i]);
  return out;
}

uint32_t support_mask(const FVector& x) {
  uint32_t m = 0;
  for (size_t i = 0; i < x.entries.size(); ++i)
    if (!x.entries[i].is_zero()) m |= (1u << i);
  return m;
}

FVector scalar_mul(const Scalar& a, const FVector& x) {
  require_tract(x.tract, a);
  FVector out = x;
  for (Scalar& s : out.entries) s = mul(a, s);
  return out;
}

FVector restrict_away(const FVector& x, const std::set<std::string>& a) {
  for (const std::string& label : a) x.ground.index(label);
  std::vector<std::string> labels;
  std::vector<Scalar> entries;
  for (size_t i = 0; i < x.entries.size(); ++i) {
    if (a.count(x.ground.labels[i])) continue;
    labels.push_back(x.ground.labels[i]);
    entries.push_back(x.entries[i]);
  }
  return FVector{x.tract, GroundSet{std::move(labels)}, std::move(entries)};
}

FVector extend(const FVector& x, const std::string& label, const Scalar& value) {
  require_tract(x.tract, value);
  if (x.ground.has(label)) throw ValidationError("ground label already present: " + label);
  FVector out = x;
  out.ground.labels.push_back(label);
  out.entries.push_back(value);
  return out;
}

bool is_orthogonal(const FVector& x, const FVector& y) {
  if (x.tract != y.tract) throw TractMismatchError("inner product across tracts");
  if (x.ground != y.ground) throw ValidationError("inner product across ground sets");
  std::vector<Scalar> terms;
  for (size_t i = 0; i < x.entries.size(); ++i) terms.push_back(mul(x.entries[i], conj(y.entries[i])));
  return zero_in_hypersum(x.tract, terms);
}

bool in_perp(const FVector& x, const std::vector<FVector>& s) {
  for (const FVector& y : s)
    if (!is_orthogonal(x, y)) return false;
  return true;
}

bool vec_in_hypersum(const FVector& z, const std::vector<FVector>& xs) {
  for (const FVector& x : xs) {
    if (x.tract != z.tract) throw TractMismatchError("hypersum across tracts");
    if (x.ground != z.ground) throw ValidationError("hypersum across ground sets");
  }
  for (size_t i = 0; i < z.entries.size(); ++i) {
    std::vector<Scalar> terms;
    for (const FVector& x : xs) terms.push_back(x.entries[i]);
    if (!in_hypersum(z.entries[i], terms)) return false;
  }
  return true;
}

std::vector<FVector> minsupp(const std::vector<FVector>& s) {
  std::vector<FVector> out;
  for (const FVector& x : s) {
    if (x.is_zero()) continue;
    uint32_t mx = support_mask(x);
    bool minimal = true;
    for (const FVector& y : s) {
      if (y.is_zero()) continue;
      uint32_t my = support_mask(y);
      if (my != mx && (my & mx) == my) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(x);
  }
  return out;
}

FVector normalize_rep(const FVector& x) {
  for (const Scalar& s : x.entries)
    if (!s.is_zero()) return scalar_mul(inv(s), x);
  return x;
}

bool fvector_less(const FVector& a, const FVector& b) {
  uint32_t ma = support_mask(a), mb = support_mask(b);
  if (ma != mb) return ma < mb;
  for (size_t i = 0; i < a.entries.size() && i < b.entries.size(); ++i) {
    if (a.entries[i] == b.entries[i]) continue;
    return scalar_less(a.entries[i], b.entries[i]);
  }
  return a.entries.size() < b.entries.size();
}

std::vector<FVector> dedupe_reps(std::vector<FVector> reps) {
  for (FVector& x : reps) x = normalize_rep(x);
  std::sort(reps.begin(), reps.end(), fvector_less);
  reps.erase(std::unique(reps.begin(), reps.end()), reps.end());
  return reps;
}

std::string format_fvector(const FVector& x) {
  std::string out = "(";
  for (size_t i = 0; i < x.entries.size(); ++i) {
    if (i) out += ", ";
    out += scalar_format(x.entries[i]);
  }
  out += ")";
  return out;
}

FVector parse_fvector(const TractId& tract, const GroundSet& ground, const std::string& text) {
  std::string body = text;
  if (!body.empty() && body.front() == '(' && body.back() == ')')
    body = body.substr(1, body.size() - 2);
  std::vector<Scalar> entries;
  size_t pos = 0;
  int depth = 0;
  std::string cur;
  auto flush = [&]() {
    size_t a = cur.find_first_not_of(" \t");
    if (a == std::string::npos) throw std::invalid_argument("empty vector entry");
    size_t b = cur.find_last_not_of(" \t");
    entries.push_back(scalar_parse(tract, cur.substr(a, b - a + 1)));
    cur.clear();
  };
  for (; pos < body.size(); ++pos) {
    char c = body[pos];
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0) {
      flush();
      continue;
    }
    cur += c;
  }
  flush();
  return make_fvector(tract, ground, std::move(entries));
}

}  // namespace tracts
