#include "weil/decomposition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace weil {

std::vector<OrderIdeal> small_ideals(const PLambdaPoset& P) {
  std::vector<OrderIdeal> out;
  for (const auto& I : P.enumerate_ideals())
    if (P.is_small(I)) out.push_back(I);
  return out;
}

std::vector<QElement> enumerate_q(const PLambdaPoset& P, std::size_t cap) {
  std::vector<QElement> out;
  for (const auto& I : small_ideals(P)) {
    auto split = P.connected_components(I, P.perp(I));
    const std::size_t c = split.components.size();
    for (std::uint64_t bits = 0; bits < (1ull << c); ++bits) {
      QElement qe;
      qe.ideal = I;
      for (std::size_t j = 0; j < c; ++j)
        qe.signs.push_back((bits >> (c - 1 - j)) & 1);  // lexicographic
      out.push_back(std::move(qe));
      if (out.size() > cap) throw std::runtime_error("enumerate_q: cap exceeded");
    }
  }
  return out;
}

bool q_leq(const PLambdaPoset& P, const QElement& x, const QElement& y) {
  if (!y.ideal.subset_of(x.ideal)) return false;
  auto split_y = P.connected_components(y.ideal, P.perp(y.ideal));
  auto split_x = P.connected_components(x.ideal, P.perp(x.ideal));
  for (std::size_t i = 0; i < split_y.components.size(); ++i) {
    const std::uint64_t big = split_y.components[i].points;
    int total = 0;
    for (std::size_t j = 0; j < split_x.components.size(); ++j)
      if ((split_x.components[j].points & ~big) == 0)
        total ^= x.signs[j];
    if (total != y.signs[i]) return false;
  }
  return true;
}

OrderIdeal theta(const PLambdaPoset& P, const QElement& qe) {
  auto split = P.connected_components(qe.ideal, P.perp(qe.ideal));
  std::uint64_t mask = qe.ideal.mask;
  for (std::size_t i = 0; i < split.components.size(); ++i)
    if (qe.signs[i]) mask |= split.components[i].points;
  return {mask};
}

QElement psi(const PLambdaPoset& P, const OrderIdeal& J) {
  OrderIdeal Jp = P.perp(J);
  OrderIdeal I = J.intersect(Jp);
  QElement qe;
  qe.ideal = I;
  auto split = P.connected_components(I, P.perp(I));
  for (const auto& comp : split.components) {
    bool meets_j = (comp.points & J.mask) != 0;
    bool meets_jp = (comp.points & Jp.mask & ~I.mask) != 0;
    if (meets_j && meets_jp)
      throw std::logic_error("psi: component split between J and J^perp");
    qe.signs.push_back(meets_j ? 1 : 0);
  }
  return qe;
}

Poly subspace_dim(const PLambdaPoset& P, const QElement& qe) {
  auto split = P.connected_components(qe.ideal, P.perp(qe.ideal));
  Poly result{Rat(1)};
  for (std::size_t i = 0; i < split.components.size(); ++i) {
    int wc = P.weighted_size(split.components[i].points);
    Rat sign = qe.signs[i] ? Rat(-1) : Rat(1);
    result = result * ((Poly::monomial(wc) + Poly(sign)) / Rat(2));
  }
  return result;
}

Poly dim_connected(const Partition& lambda_c, const OrderIdeal& I_c, int eps) {
  PLambdaPoset sub(lambda_c);
  OrderIdeal Ip = sub.perp(I_c);
  if (!I_c.subset_of(Ip)) throw std::invalid_argument("dim_connected: not small");
  if (sub.connected_components(I_c, Ip).components.size() != 1)
    throw std::invalid_argument("dim_connected: difference not connected");

  int w = sub.weighted_size(Ip.mask & ~I_c.mask);
  std::uint64_t plus = sub.plus_part(I_c);
  if (plus == 0) {
    Rat sign = eps ? Rat(-1) : Rat(1);
    return (Poly::monomial(w) + Poly(sign)) / Rat(2);
  }
  Poly result = Poly::monomial(w);
  for (int x : sub.maximal_elements(plus))
    result = result * (Poly(Rat(1)) - Poly::monomial(-2 * sub.multiplicity(x)));
  result = result / Rat(2);
  if (!result.is_polynomial())
    throw std::logic_error("dim_connected: negative exponent survived");
  return result;
}

Poly dim_irreducible(const PLambdaPoset& P, const QElement& qe) {
  auto split = P.connected_components(qe.ideal, P.perp(qe.ideal));
  Poly result{Rat(1)};
  for (std::size_t i = 0; i < split.components.size(); ++i) {
    const auto& comp = split.components[i];
    result = result * dim_connected(comp.lambda_c, comp.ideal_lower, qe.signs[i]);
  }
  return result;
}

MobiusTable::MobiusTable(std::size_t n, const std::function<bool(int, int)>& leq)
    : n_(n), leq_(n * n, 0), mu_(n * n, 0) {
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) leq_[i * n + j] = leq(i, j);

  // process targets in a linear extension so all intermediate values exist
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    std::size_t da = 0, db = 0;
    for (std::size_t z = 0; z < n; ++z) {
      da += leq_[z * n + a];
      db += leq_[z * n + b];
    }
    return da < db;
  });
  for (std::size_t i = 0; i < n; ++i) {
    for (int j : order) {
      if (!leq_[i * n + j]) continue;
      if (static_cast<std::size_t>(j) == i) {
        mu_[i * n + j] = 1;
        continue;
      }
      Int total = 0;
      for (std::size_t z = 0; z < n; ++z)
        if (leq_[i * n + z] && leq_[z * n + j] && z != static_cast<std::size_t>(j))
          total += mu_[i * n + z];
      mu_[i * n + j] = -total;
    }
  }
}

const Int& MobiusTable::value(int i, int j) const {
  if (!leq_[i * n_ + j])
    throw std::invalid_argument("mobius: value requested for incomparable pair");
  return mu_[i * n_ + j];
}

MobiusTable mobius_for_q(const PLambdaPoset& P, const std::vector<QElement>& q) {
  return MobiusTable(q.size(),
                     [&](int i, int j) { return q_leq(P, q[i], q[j]); });
}

Poly dim_via_mobius(const PLambdaPoset& P, const std::vector<QElement>& q,
                    const MobiusTable& mobius, std::size_t index) {
  Poly total;
  for (std::size_t j = 0; j < q.size(); ++j)
    if (mobius.leq(j, index))
      total += subspace_dim(P, q[j]) * Rat(mobius.value(j, index));
  return total;
}

std::vector<std::pair<int, int>> signs_by_segment(const PLambdaPoset& P,
                                                  const QElement& qe) {
  auto split = P.connected_components(qe.ideal, P.perp(qe.ideal));
  std::vector<std::pair<int, int>> out;
  for (std::size_t i = 0; i < split.components.size(); ++i)
    out.emplace_back(split.components[i].segment.front(), qe.signs[i]);
  return out;
}

std::string q_to_string(const PLambdaPoset& P, const QElement& qe) {
  std::ostringstream os;
  os << "{";
  auto pts = P.members(qe.ideal);
  for (std::size_t i = 0; i < pts.size(); ++i)
    os << (i ? "," : "") << pts[i].to_string();
  os << "}";
  if (!qe.signs.empty()) {
    os << " signs ";
    for (int s : qe.signs) os << s;
  }
  return os.str();
}

std::string q_hasse_dot(const PLambdaPoset& P) {
  auto q = enumerate_q(P);
  const std::size_t n = q.size();
  std::ostringstream os;
  os << "graph qlambda {\n  rankdir=BT;\n  node [shape=plaintext];\n";
  for (std::size_t i = 0; i < n; ++i)
    os << "  q" << i << " [label=\"" << dim_irreducible(P, q[i]).to_string()
       << "\"];\n";
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || !q_leq(P, q[i], q[j])) continue;
      bool cover = true;
      for (std::size_t z = 0; z < n && cover; ++z)
        if (z != i && z != j && q_leq(P, q[i], q[z]) && q_leq(P, q[z], q[j]))
          cover = false;
      if (cover) os << "  q" << i << " -- q" << j << ";\n";
    }
  os << "}\n";
  return os.str();
}

}  // namespace weil
