#include "weil/alpha.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace weil {

Rat AlphaCoefficient::value_at(const Int& p) const {
  if (sign == 0) return Rat(0);
  Rat v(sign);
  if (p_exp >= 0)
    v *= Rat(pow_int(p, p_exp));
  else
    v /= Rat(pow_int(p, -p_exp));
  v /= Rat(pow_int(Int(2), two_exp));
  return v;
}

Poly AlphaCoefficient::as_poly() const {
  if (sign == 0) return Poly();
  return Poly::monomial(p_exp, Rat(sign, pow_int(Int(2), two_exp)));
}

namespace {

struct ComponentTerm {
  OrderIdeal ideal;  // in the component subposet
  int sign;          // +1 / -1
  int p_pow;         // power of p carried by this choice
  int doubled;       // 1 when the two sides merged on a self-perp ideal
};

// Terms of the one-component expansion: small ideals J with
// I+ - max I+ <= J+ <= I+, each entering once as Delta_J with weight
// p^{[J^perp - J]} and once as Delta_{J^perp} with weight (-1)^{phi}.
std::vector<ComponentTerm> component_terms(const PLambdaPoset& sub,
                                           const OrderIdeal& I_c, int phi) {
  std::map<std::uint64_t, OrderIdeal> small_by_plus;
  for (const auto& S : small_ideals(sub)) small_by_plus[sub.plus_part(S)] = S;

  const std::uint64_t iplus = sub.plus_part(I_c);
  std::vector<int> max_plus = sub.maximal_elements(iplus);
  const std::size_t m = max_plus.size();

  std::map<std::uint64_t, ComponentTerm> merged;
  for (std::uint64_t bits = 0; bits < (1ull << m); ++bits) {
    std::uint64_t jplus = iplus;
    int removed = 0;
    for (std::size_t t = 0; t < m; ++t)
      if ((bits >> t) & 1) {
        jplus &= ~(1ull << max_plus[t]);
        ++removed;
      }
    auto it = small_by_plus.find(jplus);
    if (it == small_by_plus.end())
      throw std::logic_error("alpha: no small ideal for a plus-part window");
    const OrderIdeal J = it->second;
    const OrderIdeal Jp = sub.perp(J);
    const int sign = removed % 2 ? -1 : 1;

    auto add = [&](const OrderIdeal& L, int p_pow, int term_sign) {
      auto [pos, fresh] = merged.try_emplace(
          L.mask, ComponentTerm{L, term_sign, p_pow, 0});
      if (fresh) return;
      ComponentTerm& ct = pos->second;
      // only the self-perp ideal can be hit twice, with p_pow zero both times
      if (ct.p_pow != p_pow)
        throw std::logic_error("alpha: colliding terms with distinct powers");
      if (ct.sign + term_sign == 0) {
        ct.sign = 0;
      } else {
        ct.doubled = 1;
      }
    };
    add(J, sub.weighted_size(Jp.mask & ~J.mask), sign);
    add(Jp, 0, phi ? -sign : sign);
  }

  std::vector<ComponentTerm> out;
  for (auto& [mask, ct] : merged)
    if (ct.sign != 0) out.push_back(ct);
  return out;
}

}  // namespace

std::vector<std::pair<OrderIdeal, AlphaCoefficient>> alpha_expansion(
    const PLambdaPoset& P, const QElement& qe) {
  auto split = P.connected_components(qe.ideal, P.perp(qe.ideal));
  const int c = static_cast<int>(split.components.size());
  const int lambda_sum = P.partition().sum();

  std::vector<PLambdaPoset> subs;
  std::vector<std::vector<ComponentTerm>> terms;
  for (int i = 0; i < c; ++i) {
    subs.push_back(split.components[i].subposet());
    terms.push_back(
        component_terms(subs[i], split.components[i].ideal_lower, qe.signs[i]));
  }

  std::map<std::uint64_t, AlphaCoefficient> table;
  std::vector<std::size_t> choice(c, 0);
  while (true) {
    std::uint64_t mask = qe.ideal.mask;
    int sign = 1, p_pow = 0, doubles = 0;
    for (int i = 0; i < c; ++i) {
      const ComponentTerm& ct = terms[i][choice[i]];
      sign *= ct.sign;
      p_pow += ct.p_pow;
      doubles += ct.doubled;
      for (int s = 0; s < subs[i].size(); ++s)
        if (ct.ideal.contains(s)) mask |= 1ull << P.index_of(subs[i].point(s));
    }
    if (!P.is_down_closed(mask))
      throw std::logic_error("alpha: glued support set is not an ideal");
    AlphaCoefficient coeff{sign, p_pow - lambda_sum, c - doubles};
    if (!table.emplace(mask, coeff).second)
      throw std::logic_error("alpha: one ideal reached twice across components");

    int t = c - 1;
    for (; t >= 0; --t) {
      if (++choice[t] < terms[t].size()) break;
      choice[t] = 0;
    }
    if (t < 0) break;  // with no components this leaves the single Delta_I term
  }

  std::vector<std::pair<OrderIdeal, AlphaCoefficient>> out;
  for (auto& [mask, coeff] : table) out.emplace_back(OrderIdeal{mask}, coeff);
  std::sort(out.begin(), out.end(), [&](const auto& a, const auto& b) {
    return P.ideal_less(a.first, b.first);
  });
  return out;
}

std::vector<OrderIdeal> alpha_support(const PLambdaPoset& P, const QElement& qe) {
  std::vector<OrderIdeal> out;
  for (const auto& [L, coeff] : alpha_expansion(P, qe)) out.push_back(L);
  return out;
}

AlphaCoefficient alpha_value(const PLambdaPoset& P, const QElement& qe,
                             const OrderIdeal& L) {
  for (const auto& [ideal, coeff] : alpha_expansion(P, qe))
    if (ideal == L) return coeff;
  return AlphaCoefficient{};
}

bool alpha_support_conditions(const PLambdaPoset& P, const QElement& qe,
                              const OrderIdeal& L) {
  auto split = P.connected_components(qe.ideal, P.perp(qe.ideal));
  for (const auto& comp : split.components) {
    PLambdaPoset sub = comp.subposet();
    std::uint64_t restricted = 0;
    for (int s = 0; s < sub.size(); ++s) {
      int parent = P.index_of(sub.point(s));
      if (L.contains(parent)) restricted |= 1ull << s;
    }
    if (!sub.is_down_closed(restricted)) return false;
    OrderIdeal Lc{restricted};
    if (!sub.is_small(Lc) && !sub.is_small(sub.perp(Lc))) return false;
  }
  OrderIdeal IL = L.intersect(P.perp(L));
  std::uint64_t iplus = P.plus_part(qe.ideal);
  std::uint64_t ilplus = P.plus_part(IL);
  std::uint64_t max_iplus = 0;
  for (int t : P.maximal_elements(iplus)) max_iplus |= 1ull << t;
  if ((ilplus & ~iplus) != 0) return false;
  if (((iplus & ~max_iplus) & ~ilplus) != 0) return false;
  return true;
}

Poly e_coefficient(const PLambdaPoset& P, const QElement& qe,
                   const OrderIdeal& J) {
  Poly total;
  for (const auto& [L, coeff] : alpha_expansion(P, qe))
    if (J.subset_of(L)) total += coeff.as_poly();
  return total;
}

MobiusTable mobius_for_ideals(const PLambdaPoset& P,
                              const std::vector<OrderIdeal>& ideals) {
  return MobiusTable(ideals.size(), [&](int i, int j) {
    return ideals[i].subset_of(ideals[j]);
  });
}

std::vector<Rat> delta_to_T(const PLambdaPoset& P,
                            const std::vector<OrderIdeal>& ideals,
                            const std::vector<Rat>& delta_coeffs) {
  std::vector<Rat> out(ideals.size(), Rat(0));
  for (std::size_t j = 0; j < ideals.size(); ++j)
    for (std::size_t i = 0; i < ideals.size(); ++i)
      if (ideals[j].subset_of(ideals[i])) out[j] += delta_coeffs[i];
  return out;
}

std::vector<Rat> T_to_delta(const PLambdaPoset& P,
                            const std::vector<OrderIdeal>& ideals,
                            const std::vector<Rat>& t_coeffs,
                            const MobiusTable& mobius) {
  std::vector<Rat> out(ideals.size(), Rat(0));
  for (std::size_t j = 0; j < ideals.size(); ++j)
    for (std::size_t i = 0; i < ideals.size(); ++i)
      if (mobius.leq(j, i)) out[j] += Rat(mobius.value(j, i)) * t_coeffs[i];
  return out;
}

}  // namespace weil
