#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "weil/partition.hpp"
#include "weil/poset.hpp"
#include "weil/rational.hpp"

namespace weil {

// An exact phase exp(2*pi*i*t) with t rational mod 1. Denominators divide
// p^{lambda_1}, so 64-bit arithmetic suffices at the scales this library
// enumerates.
struct Phase {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Phase() = default;
  Phase(std::int64_t n, std::int64_t d);

  bool is_zero() const { return num == 0; }
  Phase operator+(const Phase& o) const;
  Phase operator-(const Phase& o) const;
  Phase negate() const { return Phase(-num, den); }
  bool operator==(const Phase& o) const { return num == o.num && den == o.den; }
  bool operator!=(const Phase& o) const { return !(*this == o); }
  double turns() const { return static_cast<double>(num) / static_cast<double>(den); }
  std::string to_string() const {
    return std::to_string(num) + "/" + std::to_string(den);
  }
};

// Coordinates of an element of A = Z/p^{l1} x ... x Z/p^{ll}; the same shape
// serves the dual group via the basis pairing eps_j(e_k) = delta_jk / p^{lj}.
using GroupElement = std::vector<std::int64_t>;
using CharacterElement = std::vector<std::int64_t>;

struct KElement {
  GroupElement a;
  CharacterElement chi;
  bool operator==(const KElement& o) const { return a == o.a && chi == o.chi; }
};

// The group A of type lambda over an odd prime p, together with its poset.
// Pure value type; all member functions are const.
class GroupSpec {
 public:
  GroupSpec(std::int64_t p, Partition lambda);

  std::int64_t p() const { return p_; }
  const Partition& partition() const { return lambda_; }
  const PLambdaPoset& poset() const { return *poset_; }
  int length() const { return lambda_.length(); }
  std::int64_t modulus(int i) const { return moduli_[i]; }     // p^{lambda_i}
  std::int64_t half(int i) const { return inv2_[i]; }          // 2^{-1} mod p^{lambda_i}
  Int order() const;                                           // |A|
  std::int64_t order_i64() const;                              // throws if huge

  std::int64_t reduce(int i, std::int64_t x) const {
    std::int64_t r = x % moduli_[i];
    return r < 0 ? r + moduli_[i] : r;
  }

  GroupElement zero_element() const { return GroupElement(length(), 0); }
  GroupElement add(const GroupElement& a, const GroupElement& b) const;
  GroupElement negate(const GroupElement& a) const;

  // Mixed-radix enumeration of A with coordinate 0 most significant.
  GroupElement element_at(std::int64_t index) const;
  std::int64_t element_index(const GroupElement& a) const;

  std::int64_t k_index(const KElement& k) const;
  KElement k_at(std::int64_t index) const;
  std::int64_t k_order_i64() const;

  // p-adic valuation in Z/p^{lambda_i}, with v(0) = lambda_i.
  int valuation(int i, std::int64_t x) const;

  // chi(a) as an exact phase.
  Phase pairing(const CharacterElement& chi, const GroupElement& a) const;

  // c(k, l) = chi(y/2) * mu(x/2)^{-1} for k = (x, chi), l = (y, mu); the sign
  // convention is pinned by the operator identity W_k W_l = c(k,l) W_{k+l}.
  Phase cocycle(const KElement& k, const KElement& l) const;

 private:
  std::int64_t p_;
  Partition lambda_;
  std::vector<std::int64_t> moduli_;
  std::vector<std::int64_t> inv2_;
  std::shared_ptr<const PLambdaPoset> poset_;
};

// The ideal I(a) generated by the points (v(a_i), lambda_i) over nonzero
// coordinates.
OrderIdeal element_ideal(const GroupSpec& G, const GroupElement& a);

// The orbit representative a(I): for each maximal (v,k) of I, p^v in the
// left-most coordinate of exponent k.
GroupElement canonical_element(const GroupSpec& G, const OrderIdeal& I);

// Per-coordinate depth thresholds of A_I: coordinate i ranges over
// p^{t_i} Z / p^{lambda_i} Z.
std::vector<int> characteristic_thresholds(const GroupSpec& G,
                                           const OrderIdeal& I);

bool characteristic_contains(const GroupSpec& G, const std::vector<int>& t,
                             const GroupElement& a);

// Full member list of A_I = {a : I(a) subset I}, of order p^{[I]}.
std::vector<GroupElement> characteristic_members(const GroupSpec& G,
                                                 const OrderIdeal& I,
                                                 std::int64_t cap = 1000000);

// Enumerates the annihilator of A_I inside the character group and compares
// it with the image of A_{I^perp} under e_i -> eps_i. This is the oracle
// that gates the reflection formula behind perp().
bool dual_subgroup_check(const GroupSpec& G, const OrderIdeal& I,
                         std::int64_t cap = 1000000);

// Splits a composite-order group given by invariant factors (all odd, > 1)
// into one GroupSpec per prime.
std::vector<GroupSpec> primary_split(const std::vector<std::int64_t>& factors);

}  // namespace weil
