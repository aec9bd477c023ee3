#pragma once

#include <vector>

#include "weil/decomposition.hpp"
#include "weil/polynomial.hpp"
#include "weil/poset.hpp"

namespace weil {

// A projector coefficient in factored form: sign * p^{p_exp} / 2^{two_exp}.
// p_exp is the net exponent (the group order is already divided out) and is
// usually negative. sign == 0 encodes an exact zero.
struct AlphaCoefficient {
  int sign = 0;
  int p_exp = 0;
  int two_exp = 0;

  bool is_zero() const { return sign == 0; }
  Rat value_at(const Int& p) const;
  Poly as_poly() const;  // Laurent monomial in p
  bool operator==(const AlphaCoefficient& o) const {
    return sign == o.sign && p_exp == o.p_exp && two_exp == o.two_exp;
  }
};

// The expansion of the projector onto the irreducible subspace of qe over
// the Delta basis, as (ideal, coefficient) pairs in canonical ideal order.
// Built per connected component: each component contributes terms indexed by
// small ideals J in a window around I(C) and by a side (J itself, weighted
// by p^{[J^perp-J]}, or J^perp, weighted by the component sign). When J is
// its own perp the two sides collide on the same ideal and are summed; for
// odd component sign they cancel exactly, which is the one place the naive
// closed form would overcount the support.
std::vector<std::pair<OrderIdeal, AlphaCoefficient>> alpha_expansion(
    const PLambdaPoset& P, const QElement& qe);

std::vector<OrderIdeal> alpha_support(const PLambdaPoset& P, const QElement& qe);

AlphaCoefficient alpha_value(const PLambdaPoset& P, const QElement& qe,
                             const OrderIdeal& L);

// The literal closed-form support test: (1) per component, the restriction
// of L or its perp is small; (2) I+ - max I+ <= I_L+ <= I+. Equivalent to a
// nonzero coefficient except at the self-perp collisions described above.
bool alpha_support_conditions(const PLambdaPoset& P, const QElement& qe,
                              const OrderIdeal& L);

// Weyl-basis coefficient for the orbit labelled J: sum of alpha over support
// ideals containing J. Laurent polynomial in p.
Poly e_coefficient(const PLambdaPoset& P, const QElement& qe,
                   const OrderIdeal& J);

// Moebius table of the ideal lattice under containment, aligned with the
// canonical enumeration order.
MobiusTable mobius_for_ideals(const PLambdaPoset& P,
                              const std::vector<OrderIdeal>& ideals);

// Basis changes between the orbit-sum basis T and the subgroup-sum basis
// Delta of the commuting algebra. Coefficient vectors are aligned with
// `ideals` (canonical order). Delta_I = sum_{J <= I} T_J, so going to the T
// basis is an up-set sum and coming back is its Moebius inverse.
std::vector<Rat> delta_to_T(const PLambdaPoset& P,
                            const std::vector<OrderIdeal>& ideals,
                            const std::vector<Rat>& delta_coeffs);
std::vector<Rat> T_to_delta(const PLambdaPoset& P,
                            const std::vector<OrderIdeal>& ideals,
                            const std::vector<Rat>& t_coeffs,
                            const MobiusTable& mobius);

}  // namespace weil
