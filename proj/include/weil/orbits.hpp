#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "weil/group.hpp"

namespace weil {

// One automorphism of K = A x A^, given concretely on coordinates.
struct KAutomorphism {
  std::string name;
  std::function<KElement(const KElement&)> apply;
};

// The generating family used for orbit closure:
//   - per-coordinate Fourier swaps  e_i -> eps_i, eps_i -> -e_i
//   - transvections (a, chi) -> (a, chi - b*a_i eps_i) for every b
//   - diagonal pairs (a, chi) -> (g(a), g^{-*}(chi)) for unit scalings by a
//     primitive root and for elementary shear maps between coordinates.
// Whether these generate the full symplectic group is never assumed: orbit
// closure validates its output against the ideal count and fails loudly.
std::vector<KAutomorphism> symplectic_generators(const GroupSpec& G);

// Checks c(gk, gl) = c(k, l) exactly. All pairs when |K|^2 <= pair_budget,
// otherwise a deterministic stride that still covers every k once.
bool preserves_cocycle(const GroupSpec& G, const KAutomorphism& g,
                       std::int64_t pair_budget = 2000000);

bool verify_generators_symplectic(const GroupSpec& G,
                                  std::int64_t pair_budget = 2000000);

// Reduces k to (a, 0) coordinate by coordinate (swap where the dual side is
// deeper, then clear the dual side with a transvection) and returns the
// ideal of the reduced element. Total: never fails.
OrderIdeal canonicalize(const GroupSpec& G, const KElement& k);

struct Orbit {
  OrderIdeal label;
  KElement representative;            // (a(label), 0)
  std::vector<std::int64_t> members;  // canonical K indices, sorted
};

// Breadth-first closure under the generator family, validated: the number of
// orbits must equal the number of order ideals and each orbit must contain
// exactly one representative pair (a(I), 0). Orbits are returned in the
// canonical order of their labels.
std::vector<Orbit> closure_orbits(const GroupSpec& G, std::int64_t cap = 6561);

// smallest primitive root modulo p^k
std::int64_t primitive_root(std::int64_t p, int k);

}  // namespace weil
