#include "tracts/matroid.hpp"

#include <algorithm>

#include "tracts/errors.hpp"

namespace tracts {

namespace {

constexpr size_t kMaxGround = 12;

std::string describe(const GroundSet& ground, uint32_t mask) {
  std::string out = "{";
  bool first = true;
  for (size_t i = 0; i < ground.size(); ++i) {
    if (!(mask & (1u << i))) continue;
    if (!first) out += ",";
    out += ground.labels[i];
    first = false;
  }
  return out + "}";
}

bool contains_circuit(const std::vector<uint32_t>& circuits, uint32_t subset) {
  for (uint32_t c : circuits)
    if ((c & subset) == c) return true;
  return false;
}

}  // namespace

uint32_t mask_of_labels(const GroundSet& ground, const std::set<std::string>& labels) {
  uint32_t m = 0;
  for (const std::string& l : labels) m |= (1u << ground.index(l));
  return m;
}

std::set<std::string> labels_of_mask(const GroundSet& ground, uint32_t mask) {
  std::set<std::string> out;
  for (size_t i = 0; i < ground.size(); ++i)
    if (mask & (1u << i)) out.insert(ground.labels[i]);
  return out;
}

Matroid from_circuit_masks(const GroundSet& ground, std::vector<uint32_t> circuits,
                           bool validate) {
  if (ground.size() == 0 || ground.size() > kMaxGround)
    throw ValidationError("ground set size out of range");
  uint32_t full_mask = (1u << ground.size()) - 1u;
  for (uint32_t c : circuits)
    if (c & ~full_mask) throw ValidationError("circuit mask outside the ground set");
  std::sort(circuits.begin(), circuits.end());
  circuits.erase(std::unique(circuits.begin(), circuits.end()), circuits.end());

  if (validate) {
    for (uint32_t c : circuits)
      if (c == 0) throw ValidationError("empty circuit");
    for (uint32_t a : circuits)
      for (uint32_t b : circuits)
        if (a != b && (a & b) == a)
          throw ValidationError("circuits are not an antichain: " + describe(ground, a) +
                                " inside " + describe(ground, b));
    for (uint32_t a : circuits)
      for (uint32_t b : circuits) {
        if (a >= b) continue;
        uint32_t common = a & b;
        for (size_t e = 0; e < ground.size(); ++e) {
          if (!(common & (1u << e))) continue;
          uint32_t pool = (a | b) & ~(1u << e);
          if (!contains_circuit(circuits, pool))
            throw ValidationError("circuit exchange fails for " + describe(ground, a) + ", " +
                                  describe(ground, b) + " at " + ground.labels[e]);
        }
      }
  }

  uint32_t full = (1u << ground.size()) - 1u;
  std::vector<uint32_t> maximal;
  int rank = 0;
  for (uint32_t s = 0; s <= full; ++s) {
    if (contains_circuit(circuits, s)) continue;
    bool is_max = true;
    for (size_t e = 0; e < ground.size() && is_max; ++e) {
      uint32_t bigger = s | (1u << e);
      if (bigger != s && !contains_circuit(circuits, bigger)) is_max = false;
    }
    if (!is_max) continue;
    maximal.push_back(s);
    rank = std::max(rank, __builtin_popcount(s));
  }
  if (validate) {
    for (uint32_t b : maximal)
      if (__builtin_popcount(b) != rank)
        throw ValidationError("maximal independent sets of unequal size: " + describe(ground, b));
  } else {
    std::erase_if(maximal, [&](uint32_t b) { return __builtin_popcount(b) != rank; });
  }
  return Matroid{ground, std::move(circuits), std::move(maximal), rank};
}

Matroid from_circuits(const GroundSet& ground, const std::vector<std::set<std::string>>& circuits,
                      bool validate) {
  std::vector<uint32_t> masks;
  for (const auto& c : circuits) masks.push_back(mask_of_labels(ground, c));
  return from_circuit_masks(ground, std::move(masks), validate);
}

bool is_independent(const Matroid& m, uint32_t subset) {
  return !contains_circuit(m.circuits, subset);
}

bool is_independent(const Matroid& m, const std::set<std::string>& subset) {
  return is_independent(m, mask_of_labels(m.ground, subset));
}

std::vector<std::set<std::string>> bases(const Matroid& m) {
  std::vector<std::set<std::string>> out;
  for (uint32_t b : m.basis_list) out.push_back(labels_of_mask(m.ground, b));
  return out;
}

bool is_basis(const Matroid& m, uint32_t subset) {
  return std::binary_search(m.basis_list.begin(), m.basis_list.end(), subset);
}

uint32_t fundamental_circuit_mask(const Matroid& m, size_t e, uint32_t basis) {
  if (!is_basis(m, basis)) throw ValidationError("not a basis: " + describe(m.ground, basis));
  uint32_t bit = 1u << e;
  if (basis & bit) throw ValidationError("element already in the basis: " + m.ground.labels[e]);
  uint32_t pool = basis | bit;
  uint32_t found = 0;
  for (uint32_t c : m.circuits) {
    if ((c & pool) != c) continue;
    if (found) throw ValidationError("fundamental circuit is not unique");
    found = c;
  }
  if (!found) throw ValidationError("no circuit inside the extended basis");
  return found;
}

std::set<std::string> fundamental_circuit_support(const Matroid& m, const std::string& e,
                                                  const std::set<std::string>& basis) {
  return labels_of_mask(
      m.ground, fundamental_circuit_mask(m, m.ground.index(e), mask_of_labels(m.ground, basis)));
}

Matroid dual(const Matroid& m) {
  uint32_t full = (1u << m.ground.size()) - 1u;
  std::vector<uint32_t> cobases;
  for (uint32_t b : m.basis_list) cobases.push_back(full & ~b);
  std::sort(cobases.begin(), cobases.end());

  // circuits of the dual: minimal subsets contained in no dual basis
  auto coindependent = [&](uint32_t s) {
    for (uint32_t b : cobases)
      if ((s & b) == s) return true;
    return false;
  };
  std::vector<uint32_t> circuits;
  for (uint32_t s = 1; s <= full; ++s) {
    if (coindependent(s)) continue;
    bool minimal = true;
    for (size_t e = 0; e < m.ground.size() && minimal; ++e) {
      uint32_t smaller = s & ~(1u << e);
      if (smaller != s && !coindependent(smaller)) minimal = false;
    }
    if (minimal) circuits.push_back(s);
  }
  int rank = static_cast<int>(m.ground.size()) - m.rank;
  return Matroid{m.ground, std::move(circuits), std::move(cobases), rank};
}

std::vector<uint32_t> cocircuit_masks(const Matroid& m) { return dual(m).circuits; }

std::vector<std::set<std::string>> cocircuit_supports(const Matroid& m) {
  std::vector<std::set<std::string>> out;
  for (uint32_t c : cocircuit_masks(m)) out.push_back(labels_of_mask(m.ground, c));
  return out;
}

std::vector<uint32_t> hyperplane_masks(const Matroid& m) {
  uint32_t full = (1u << m.ground.size()) - 1u;
  std::vector<uint32_t> out;
  for (uint32_t c : cocircuit_masks(m)) out.push_back(full & ~c);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::set<std::string>> hyperplanes(const Matroid& m) {
  std::vector<std::set<std::string>> out;
  for (uint32_t h : hyperplane_masks(m)) out.push_back(labels_of_mask(m.ground, h));
  return out;
}

std::vector<uint32_t> flat_masks(const Matroid& m) {
  uint32_t full = (1u << m.ground.size()) - 1u;
  std::vector<uint32_t> hp = hyperplane_masks(m);
  std::set<uint32_t> flats = {full};
  // close under intersection with hyperplanes
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<uint32_t> cur(flats.begin(), flats.end());
    for (uint32_t f : cur)
      for (uint32_t h : hp)
        if (flats.insert(f & h).second) grew = true;
  }
  return std::vector<uint32_t>(flats.begin(), flats.end());
}

std::vector<std::set<std::string>> flats(const Matroid& m) {
  std::vector<std::set<std::string>> out;
  for (uint32_t f : flat_masks(m)) out.push_back(labels_of_mask(m.ground, f));
  return out;
}

std::set<std::string> loops(const Matroid& m) {
  std::set<std::string> out;
  for (uint32_t c : m.circuits)
    if (__builtin_popcount(c) == 1)
      out.insert(m.ground.labels[static_cast<size_t>(__builtin_ctz(c))]);
  return out;
}

std::set<std::string> coloops(const Matroid& m) {
  uint32_t in_all = (1u << m.ground.size()) - 1u;
  for (uint32_t b : m.basis_list) in_all &= b;
  return labels_of_mask(m.ground, in_all);
}

std::vector<uint32_t> support_basis_masks(size_t ground_size,
                                          const std::vector<uint32_t>& supports) {
  std::vector<uint32_t> nonzero;
  for (uint32_t s : supports)
    if (s != 0) nonzero.push_back(s);
  uint32_t full = ground_size ? (1u << ground_size) - 1u : 0u;
  auto hits_all = [&](uint32_t b) {
    for (uint32_t s : nonzero)
      if (!(b & s)) return false;
    return true;
  };
  std::vector<uint32_t> out;
  for (uint32_t b = 0; b <= full; ++b) {
    if (!hits_all(b)) continue;
    bool minimal = true;
    for (size_t e = 0; e < ground_size && minimal; ++e) {
      uint32_t smaller = b & ~(1u << e);
      if (smaller != b && hits_all(smaller)) minimal = false;
    }
    if (minimal) out.push_back(b);
  }
  return out;
}

std::vector<std::set<std::string>> support_bases(const std::vector<FVector>& w) {
  if (w.empty()) return {{}};
  std::vector<uint32_t> supports;
  for (const FVector& x : w) supports.push_back(support_mask(x));
  std::vector<std::set<std::string>> out;
  for (uint32_t b : support_basis_masks(w.front().ground.size(), supports))
    out.push_back(labels_of_mask(w.front().ground, b));
  return out;
}

int SupportLattice::height_of(uint32_t element) const {
  auto it = std::lower_bound(elements.begin(), elements.end(), element);
  if (it == elements.end() || *it != element)
    throw ValidationError("element is not a union of circuit supports");
  return height[static_cast<size_t>(it - elements.begin())];
}

SupportLattice support_lattice(const Matroid& m) {
  std::set<uint32_t> closed = {0u};
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<uint32_t> cur(closed.begin(), closed.end());
    for (uint32_t u : cur)
      for (uint32_t c : m.circuits)
        if (closed.insert(u | c).second) grew = true;
  }
  SupportLattice lat;
  lat.elements.assign(closed.begin(), closed.end());
  lat.height.assign(lat.elements.size(), 0);
  // elements are sorted ascending, so strict subsets come earlier; longest chain DP
  for (size_t i = 0; i < lat.elements.size(); ++i) {
    for (size_t j = 0; j < i; ++j) {
      uint32_t a = lat.elements[j], b = lat.elements[i];
      if (a != b && (a & b) == a) lat.height[i] = std::max(lat.height[i], lat.height[j] + 1);
    }
  }
  return lat;
}

bool is_modular_family(const Matroid& m, const std::vector<uint32_t>& supports) {
  uint32_t u = 0;
  for (uint32_t s : supports) {
    if (!std::binary_search(m.circuits.begin(), m.circuits.end(), s))
      throw ValidationError("not a circuit support: " + describe(m.ground, s));
    u |= s;
  }
  if (supports.empty()) return true;
  return support_lattice(m).height_of(u) == static_cast<int>(supports.size());
}

}  // namespace tracts
