#include "weil/orbits.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>

namespace weil {

namespace {

std::int64_t pow_i64(std::int64_t b, int e) {
  std::int64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

std::int64_t powmod(std::int64_t b, std::int64_t e, std::int64_t m) {
  std::int64_t r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1) r = r * b % m;
    b = b * b % m;
    e >>= 1;
  }
  return r;
}

std::int64_t inv_mod(std::int64_t a, std::int64_t m) {
  std::int64_t r0 = m, r1 = ((a % m) + m) % m, s0 = 0, s1 = 1;
  while (r1) {
    std::int64_t q = r0 / r1;
    std::int64_t t = r0 - q * r1;
    r0 = r1;
    r1 = t;
    t = s0 - q * s1;
    s0 = s1;
    s1 = t;
  }
  if (r0 != 1) throw std::invalid_argument("inv_mod: not invertible");
  return ((s0 % m) + m) % m;
}

std::vector<std::int64_t> prime_factors(std::int64_t n) {
  std::vector<std::int64_t> out;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

std::int64_t primitive_root(std::int64_t p, int k) {
  const std::int64_t m = pow_i64(p, k);
  const std::int64_t phi = m / p * (p - 1);
  auto qs = prime_factors(phi);
  for (std::int64_t g = 2; g < m; ++g) {
    if (g % p == 0) continue;
    bool ok = true;
    for (std::int64_t q : qs)
      if (powmod(g, phi / q, m) == 1) {
        ok = false;
        break;
      }
    if (ok) return g;
  }
  throw std::logic_error("primitive_root: none found");
}

std::vector<KAutomorphism> symplectic_generators(const GroupSpec& G) {
  std::vector<KAutomorphism> gens;
  const int l = G.length();

  for (int i = 0; i < l; ++i) {
    gens.push_back({"fourier_" + std::to_string(i), [&G, i](const KElement& k) {
                      KElement r = k;
                      r.a[i] = G.reduce(i, -k.chi[i]);
                      r.chi[i] = k.a[i];
                      return r;
                    }});
  }

  for (int i = 0; i < l; ++i)
    for (std::int64_t b = 1; b < G.modulus(i); ++b) {
      gens.push_back({"transvection_" + std::to_string(i) + "_" + std::to_string(b),
                      [&G, i, b](const KElement& k) {
                        KElement r = k;
                        r.chi[i] = G.reduce(i, k.chi[i] - b * k.a[i]);
                        return r;
                      }});
    }

  for (int i = 0; i < l; ++i) {
    std::int64_t u = primitive_root(G.p(), G.partition().parts[i]);
    std::int64_t uinv = inv_mod(u, G.modulus(i));
    gens.push_back({"scaling_" + std::to_string(i), [&G, i, u, uinv](const KElement& k) {
                      KElement r = k;
                      r.a[i] = G.reduce(i, u * k.a[i]);
                      r.chi[i] = G.reduce(i, uinv * k.chi[i]);
                      return r;
                    }});
  }

  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j) {
      if (i == j) continue;
      // e_j -> e_j + p^{max(0, li-lj)} e_i on A, compensated on characters
      std::int64_t c = pow_i64(G.p(), std::max(0, G.partition().parts[i] -
                                                       G.partition().parts[j]));
      std::int64_t cd = pow_i64(G.p(), std::max(0, G.partition().parts[j] -
                                                        G.partition().parts[i]));
      gens.push_back({"shear_" + std::to_string(i) + "_" + std::to_string(j),
                      [&G, i, j, c, cd](const KElement& k) {
                        KElement r = k;
                        r.a[i] = G.reduce(i, k.a[i] + c * k.a[j]);
                        r.chi[j] = G.reduce(j, k.chi[j] - cd * k.chi[i]);
                        return r;
                      }});
    }

  return gens;
}

bool preserves_cocycle(const GroupSpec& G, const KAutomorphism& g,
                       std::int64_t pair_budget) {
  const std::int64_t nk = G.k_order_i64();
  std::int64_t stride = 1;
  if (nk > 0 && nk > pair_budget / nk)
    stride = (nk * nk + pair_budget - 1) / pair_budget;
  std::vector<KElement> images(nk);
  for (std::int64_t i = 0; i < nk; ++i) images[i] = g.apply(G.k_at(i));
  for (std::int64_t i = 0; i < nk; ++i) {
    const KElement k = G.k_at(i);
    for (std::int64_t j = i % stride; j < nk; j += stride) {
      const KElement l = G.k_at(j);
      if (G.cocycle(images[i], images[j]) != G.cocycle(k, l)) return false;
    }
  }
  return true;
}

bool verify_generators_symplectic(const GroupSpec& G, std::int64_t pair_budget) {
  for (const auto& g : symplectic_generators(G))
    if (!preserves_cocycle(G, g, pair_budget)) return false;
  return true;
}

OrderIdeal canonicalize(const GroupSpec& G, const KElement& k) {
  KElement cur = k;
  for (int i = 0; i < G.length(); ++i) {
    if (G.valuation(i, cur.a[i]) > G.valuation(i, cur.chi[i])) {
      std::int64_t ai = cur.a[i];
      cur.a[i] = G.reduce(i, -cur.chi[i]);
      cur.chi[i] = ai;
    }
    if (cur.a[i] == 0) {
      if (cur.chi[i] != 0)
        throw std::logic_error("canonicalize: dual part survived a zero slot");
      continue;
    }
    // solve b * a_i = chi_i; possible because v(a_i) <= v(chi_i)
    int v = G.valuation(i, cur.a[i]);
    std::int64_t pv = 1;
    for (int e = 0; e < v; ++e) pv *= G.p();
    std::int64_t mred = G.modulus(i) / pv;
    std::int64_t unit = (cur.a[i] / pv) % mred;
    std::int64_t b = (cur.chi[i] / pv) % mred * inv_mod(unit, mred) % mred;
    cur.chi[i] = G.reduce(i, cur.chi[i] - b * cur.a[i]);
    if (cur.chi[i] != 0)
      throw std::logic_error("canonicalize: transvection failed to clear");
  }
  return element_ideal(G, cur.a);
}

std::vector<Orbit> closure_orbits(const GroupSpec& G, std::int64_t cap) {
  const std::int64_t nk = G.k_order_i64();
  if (nk > cap)
    throw std::runtime_error("closure_orbits: |K| exceeds cap " +
                             std::to_string(cap));
  auto gens = symplectic_generators(G);

  std::vector<std::int32_t> orbit_of(nk, -1);
  std::vector<std::vector<std::int64_t>> members;
  for (std::int64_t seed = 0; seed < nk; ++seed) {
    if (orbit_of[seed] >= 0) continue;
    const std::int32_t id = static_cast<std::int32_t>(members.size());
    members.emplace_back();
    std::deque<std::int64_t> queue{seed};
    orbit_of[seed] = id;
    while (!queue.empty()) {
      std::int64_t cur = queue.front();
      queue.pop_front();
      members[id].push_back(cur);
      const KElement kc = G.k_at(cur);
      for (const auto& g : gens) {
        std::int64_t img = G.k_index(g.apply(kc));
        if (orbit_of[img] < 0) {
          orbit_of[img] = id;
          queue.push_back(img);
        }
      }
    }
    std::sort(members[id].begin(), members[id].end());
  }

  // Validation: generated-subgroup orbits refine the symplectic orbits; the
  // counts agreeing forces them equal.
  const PLambdaPoset& P = G.poset();
  auto ideals = P.enumerate_ideals();
  if (members.size() != ideals.size())
    throw std::runtime_error(
        "closure_orbits: orbit count " + std::to_string(members.size()) +
        " does not match ideal count " + std::to_string(ideals.size()));

  std::vector<Orbit> out;
  std::vector<std::int32_t> rep_orbit(members.size(), -1);
  for (const auto& I : ideals) {
    KElement rep{canonical_element(G, I), G.zero_element()};
    std::int32_t id = orbit_of[G.k_index(rep)];
    if (rep_orbit[id] >= 0)
      throw std::runtime_error(
          "closure_orbits: two representatives fell in one orbit");
    rep_orbit[id] = 1;
    Orbit o;
    o.label = I;
    o.representative = rep;
    o.members = std::move(members[id]);
    out.push_back(std::move(o));
  }
  return out;
}

}  // namespace weil
