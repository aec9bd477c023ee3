#pragma once

#include <functional>
#include <string>
#include <vector>

#include "weil/polynomial.hpp"
#include "weil/poset.hpp"

namespace weil {

// A parameter (I, phi): a small order ideal together with one sign per
// connected component of I^perp - I. Signs are stored in component order
// (components sorted by their smallest coordinate index), which makes the
// vector a stable key across runs.
struct QElement {
  OrderIdeal ideal;
  std::vector<int> signs;

  bool operator==(const QElement& o) const {
    return ideal == o.ideal && signs == o.signs;
  }
  bool operator!=(const QElement& o) const { return !(*this == o); }
};

// Small ideals in canonical ideal order.
std::vector<OrderIdeal> small_ideals(const PLambdaPoset& P);

// All of Q_lambda: small ideals in canonical order, sign vectors in
// lexicographic order within each ideal.
std::vector<QElement> enumerate_q(const PLambdaPoset& P,
                                  std::size_t cap = 1000000);

// Containment order of the invariant subspaces: (I',phi') <= (I,phi) iff
// I contains... see q_leq's definition: x <= y means the subspace of x is
// contained in the subspace of y. Requires y.ideal subset x.ideal and, for
// each component P of y's difference, y's sign equals the mod-2 sum of x's
// signs over components inside P.
bool q_leq(const PLambdaPoset& P, const QElement& x, const QElement& y);

// Mutually inverse bijections between Q_lambda and the full ideal lattice.
OrderIdeal theta(const PLambdaPoset& P, const QElement& qe);
QElement psi(const PLambdaPoset& P, const OrderIdeal& J);

// dim L^2(A)_{I,phi} = prod over components of (p^{[C]} + (-1)^{phi(C)})/2.
Poly subspace_dim(const PLambdaPoset& P, const QElement& qe);

// Dimension of the irreducible attached to a connected difference:
//   (p^{[I^perp-I]} + (-1)^eps)/2                    if I+ is empty,
//   p^{[I^perp-I]} * prod_{x in max I+} (1 - p^{-2m(x)}) / 2   otherwise.
Poly dim_connected(const Partition& lambda_c, const OrderIdeal& I_c, int eps);

// Product of dim_connected over the components of I^perp - I.
Poly dim_irreducible(const PLambdaPoset& P, const QElement& qe);

// Moebius function of an arbitrary finite poset given by a comparison
// predicate. values(i, j) is defined when leq(i, j).
class MobiusTable {
 public:
  MobiusTable(std::size_t n, const std::function<bool(int, int)>& leq);

  bool leq(int i, int j) const { return leq_[i * n_ + j]; }
  const Int& value(int i, int j) const;  // mu(i, j), requires i <= j
  std::size_t size() const { return n_; }

 private:
  std::size_t n_;
  std::vector<char> leq_;
  std::vector<Int> mu_;
};

MobiusTable mobius_for_q(const PLambdaPoset& P, const std::vector<QElement>& q);

// The same dimension through Moebius inversion of the subspace dimensions
// over Q_lambda. Kept alongside dim_irreducible so the two formulas gate
// each other.
Poly dim_via_mobius(const PLambdaPoset& P, const std::vector<QElement>& q,
                    const MobiusTable& mobius, std::size_t index);

// Signs keyed by the smallest 1-based coordinate index of each component.
std::vector<std::pair<int, int>> signs_by_segment(const PLambdaPoset& P,
                                                  const QElement& qe);

std::string q_to_string(const PLambdaPoset& P, const QElement& qe);

// Hasse diagram of Q_lambda in DOT, nodes labelled by dimension polynomials.
std::string q_hasse_dot(const PLambdaPoset& P);

}  // namespace weil
