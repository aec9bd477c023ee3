#include "weil/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace weil {

namespace {

std::int64_t gcd_i64(std::int64_t a, std::int64_t b) {
  while (b) {
    std::int64_t t = a % b;
    a = b;
    b = t;
  }
  return a < 0 ? -a : a;
}

// Modular inverse by extended Euclid; m odd here.
std::int64_t inv_mod(std::int64_t a, std::int64_t m) {
  std::int64_t r0 = m, r1 = ((a % m) + m) % m, s0 = 0, s1 = 1;
  while (r1) {
    std::int64_t q = r0 / r1;
    std::int64_t r2 = r0 - q * r1;
    std::int64_t s2 = s0 - q * s1;
    r0 = r1;
    r1 = r2;
    s0 = s1;
    s1 = s2;
  }
  if (r0 != 1) throw std::invalid_argument("inv_mod: not invertible");
  return ((s0 % m) + m) % m;
}

}  // namespace

Phase::Phase(std::int64_t n, std::int64_t d) {
  if (d <= 0) throw std::invalid_argument("phase: nonpositive denominator");
  std::int64_t g = gcd_i64(n, d);
  if (g > 1) {
    n /= g;
    d /= g;
  }
  n %= d;
  if (n < 0) n += d;
  num = n;
  den = d;
}

Phase Phase::operator+(const Phase& o) const {
  std::int64_t g = gcd_i64(den, o.den);
  std::int64_t lcm = den / g * o.den;
  return Phase(num * (lcm / den) + o.num * (lcm / o.den), lcm);
}

Phase Phase::operator-(const Phase& o) const { return *this + o.negate(); }

GroupSpec::GroupSpec(std::int64_t p, Partition lambda)
    : p_(p), lambda_(std::move(lambda)) {
  lambda_.validate();
  if (p < 3 || p % 2 == 0) throw std::invalid_argument("group: p must be odd, >= 3");
  for (int i = 0; i < lambda_.length(); ++i) {
    std::int64_t m = 1;
    for (int e = 0; e < lambda_.parts[i]; ++e) {
      if (m > (std::int64_t(1) << 31) / p)
        throw std::invalid_argument("group: coordinate modulus too large");
      m *= p;
    }
    moduli_.push_back(m);
    inv2_.push_back(inv_mod(2, m));
  }
  poset_ = std::make_shared<const PLambdaPoset>(lambda_);
}

Int GroupSpec::order() const { return pow_int(Int(p_), lambda_.sum()); }

std::int64_t GroupSpec::order_i64() const {
  Int n = order();
  if (n > Int((std::int64_t(1) << 62)))
    throw std::runtime_error("group: order does not fit in 64 bits");
  return n.convert_to<std::int64_t>();
}

GroupElement GroupSpec::add(const GroupElement& a, const GroupElement& b) const {
  GroupElement r(length());
  for (int i = 0; i < length(); ++i) r[i] = reduce(i, a[i] + b[i]);
  return r;
}

GroupElement GroupSpec::negate(const GroupElement& a) const {
  GroupElement r(length());
  for (int i = 0; i < length(); ++i) r[i] = reduce(i, -a[i]);
  return r;
}

GroupElement GroupSpec::element_at(std::int64_t index) const {
  GroupElement a(length());
  for (int i = length() - 1; i >= 0; --i) {
    a[i] = index % moduli_[i];
    index /= moduli_[i];
  }
  if (index != 0) throw std::out_of_range("element_at: index out of range");
  return a;
}

std::int64_t GroupSpec::element_index(const GroupElement& a) const {
  std::int64_t idx = 0;
  for (int i = 0; i < length(); ++i) idx = idx * moduli_[i] + reduce(i, a[i]);
  return idx;
}

std::int64_t GroupSpec::k_order_i64() const {
  std::int64_t n = order_i64();
  if (n > (std::int64_t(1) << 31))
    throw std::runtime_error("group: |K| does not fit in 64 bits");
  return n * n;
}

std::int64_t GroupSpec::k_index(const KElement& k) const {
  return element_index(k.a) * order_i64() + element_index(k.chi);
}

KElement GroupSpec::k_at(std::int64_t index) const {
  std::int64_t n = order_i64();
  return KElement{element_at(index / n), element_at(index % n)};
}

int GroupSpec::valuation(int i, std::int64_t x) const {
  x = reduce(i, x);
  if (x == 0) return lambda_.parts[i];
  int v = 0;
  while (x % p_ == 0) {
    x /= p_;
    ++v;
  }
  return v;
}

Phase GroupSpec::pairing(const CharacterElement& chi, const GroupElement& a) const {
  Phase t;
  for (int i = 0; i < length(); ++i) {
    std::int64_t prod = (reduce(i, chi[i]) * reduce(i, a[i])) % moduli_[i];
    t = t + Phase(prod, moduli_[i]);
  }
  return t;
}

Phase GroupSpec::cocycle(const KElement& k, const KElement& l) const {
  Phase t;
  for (int i = 0; i < length(); ++i) {
    const std::int64_t m = moduli_[i];
    std::int64_t y_half = (reduce(i, l.a[i]) * inv2_[i]) % m;
    std::int64_t x_half = (reduce(i, k.a[i]) * inv2_[i]) % m;
    std::int64_t val = (reduce(i, k.chi[i]) * y_half - reduce(i, l.chi[i]) * x_half) % m;
    t = t + Phase(val, m);
  }
  return t;
}

OrderIdeal element_ideal(const GroupSpec& G, const GroupElement& a) {
  std::vector<PosetPoint> gens;
  for (int i = 0; i < G.length(); ++i) {
    std::int64_t x = G.reduce(i, a[i]);
    if (x == 0) continue;
    gens.push_back(PosetPoint{G.valuation(i, x), G.partition().parts[i]});
  }
  return G.poset().ideal_generated_by(gens);
}

GroupElement canonical_element(const GroupSpec& G, const OrderIdeal& I) {
  const PLambdaPoset& P = G.poset();
  GroupElement a = G.zero_element();
  for (int idx : P.maximal_elements(I.mask)) {
    const PosetPoint& x = P.point(idx);
    // left-most coordinate with this exponent
    for (int i = 0; i < G.length(); ++i) {
      if (G.partition().parts[i] == x.k) {
        std::int64_t pv = 1;
        for (int e = 0; e < x.v; ++e) pv *= G.p();
        a[i] = G.reduce(i, a[i] + pv);
        break;
      }
    }
  }
  return a;
}

std::vector<int> characteristic_thresholds(const GroupSpec& G,
                                           const OrderIdeal& I) {
  const PLambdaPoset& P = G.poset();
  std::vector<int> t(G.length());
  for (int i = 0; i < G.length(); ++i) {
    int k = G.partition().parts[i];
    int ti = k;  // column disjoint from I: coordinate forced to zero
    for (int v = 0; v < k; ++v)
      if (I.contains(P.index_of(v, k))) {
        ti = v;  // ideals meet a column in its lower tail {v' >= v}
        break;
      }
    t[i] = ti;
  }
  return t;
}

bool characteristic_contains(const GroupSpec& G, const std::vector<int>& t,
                             const GroupElement& a) {
  for (int i = 0; i < G.length(); ++i)
    if (G.valuation(i, a[i]) < t[i]) return false;
  return true;
}

std::vector<GroupElement> characteristic_members(const GroupSpec& G,
                                                 const OrderIdeal& I,
                                                 std::int64_t cap) {
  std::vector<int> t = characteristic_thresholds(G, I);
  Int size = 1;
  for (int i = 0; i < G.length(); ++i)
    size *= pow_int(Int(G.p()), G.partition().parts[i] - t[i]);
  if (size > Int(cap))
    throw std::runtime_error("characteristic_members: cap exceeded");

  std::vector<GroupElement> out{G.zero_element()};
  for (int i = 0; i < G.length(); ++i) {
    std::int64_t step = 1;
    for (int e = 0; e < t[i]; ++e) step *= G.p();
    std::int64_t count = G.modulus(i) / step;
    std::vector<GroupElement> next;
    next.reserve(out.size() * count);
    for (const auto& base : out)
      for (std::int64_t j = 0; j < count; ++j) {
        GroupElement a = base;
        a[i] = j * step;
        next.push_back(std::move(a));
      }
    out = std::move(next);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool dual_subgroup_check(const GroupSpec& G, const OrderIdeal& I,
                         std::int64_t cap) {
  if (G.order() > Int(cap))
    throw std::runtime_error("dual_subgroup_check: cap exceeded");
  const std::int64_t n = G.order_i64();
  std::vector<GroupElement> a_i = characteristic_members(G, I, cap);
  std::vector<int> t_perp = characteristic_thresholds(G, G.poset().perp(I));

  for (std::int64_t ci = 0; ci < n; ++ci) {
    CharacterElement chi = G.element_at(ci);
    bool annihilates = true;
    for (const auto& a : a_i)
      if (!G.pairing(chi, a).is_zero()) {
        annihilates = false;
        break;
      }
    // Image of A_{I^perp} under e_i -> eps_i: same coordinate thresholds.
    bool in_image = characteristic_contains(G, t_perp, chi);
    if (annihilates != in_image) return false;
  }
  return true;
}

std::vector<GroupSpec> primary_split(const std::vector<std::int64_t>& factors) {
  if (factors.empty()) throw std::invalid_argument("primary_split: empty input");
  std::map<std::int64_t, std::vector<int>> exponents;
  for (std::int64_t f : factors) {
    if (f <= 1) throw std::invalid_argument("primary_split: factors must be > 1");
    if (f % 2 == 0) throw std::invalid_argument("primary_split: even factor");
    for (std::int64_t d = 3; f > 1; d += 2) {
      if (d * d > f) {
        exponents[f].push_back(1);
        break;
      }
      if (f % d) continue;
      int e = 0;
      while (f % d == 0) {
        f /= d;
        ++e;
      }
      exponents[d].push_back(e);
    }
  }
  std::vector<GroupSpec> out;
  for (auto& [p, exps] : exponents) {
    std::sort(exps.begin(), exps.end(), std::greater<int>());
    out.emplace_back(p, Partition(exps));
  }
  return out;
}

}  // namespace weil
