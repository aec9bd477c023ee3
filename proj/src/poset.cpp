#include "weil/poset.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace weil {

PLambdaPoset SplitComponent::subposet() const { return PLambdaPoset(lambda_c); }

PLambdaPoset::PLambdaPoset(Partition lambda) : lambda_(std::move(lambda)) {
  lambda_.validate();
  for (int k : lambda_.distinct_parts())
    for (int v = 0; v < k; ++v) points_.push_back(PosetPoint{v, k});
  // distinct_parts is descending, v ascending: already canonical order.
  if (points_.size() > 64)
    throw std::invalid_argument("poset: more than 64 points unsupported");

  const int n = size();
  mult_.resize(n);
  for (int i = 0; i < n; ++i) mult_[i] = lambda_.multiplicity(points_[i].k);

  leq_.assign(n * n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      leq_[i * n + j] = point_leq(points_[i], points_[j]);

  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j || !leq(i, j)) continue;
      bool cover = true;
      for (int z = 0; z < n; ++z) {
        if (z == i || z == j) continue;
        if (leq(i, z) && leq(z, j)) {
          cover = false;
          break;
        }
      }
      if (cover) covers_.emplace_back(i, j);
    }

  // Linear extension: sort by (v descending, k - v ascending). If x < y then
  // x.v >= y.v, and when equal, x.k - x.v < y.k - y.v.
  linear_extension_.resize(n);
  for (int i = 0; i < n; ++i) linear_extension_[i] = i;
  std::sort(linear_extension_.begin(), linear_extension_.end(),
            [&](int a, int b) {
              const PosetPoint &pa = points_[a], &pb = points_[b];
              if (pa.v != pb.v) return pa.v > pb.v;
              return pa.k - pa.v < pb.k - pb.v;
            });
}

int PLambdaPoset::index_of(const PosetPoint& p) const {
  for (int i = 0; i < size(); ++i)
    if (points_[i] == p) return i;
  return -1;
}

bool PLambdaPoset::is_down_closed(std::uint64_t mask) const {
  for (int i = 0; i < size(); ++i) {
    if (!((mask >> i) & 1)) continue;
    for (int j = 0; j < size(); ++j)
      if (leq(j, i) && !((mask >> j) & 1)) return false;
  }
  return true;
}

OrderIdeal PLambdaPoset::down_closure(std::uint64_t mask) const {
  std::uint64_t out = 0;
  for (int i = 0; i < size(); ++i) {
    if (!((mask >> i) & 1)) continue;
    for (int j = 0; j < size(); ++j)
      if (leq(j, i)) out |= 1ull << j;
  }
  return {out};
}

OrderIdeal PLambdaPoset::ideal_generated_by(
    const std::vector<PosetPoint>& gens) const {
  std::uint64_t mask = 0;
  for (const auto& g : gens) {
    int i = index_of(g);
    if (i < 0)
      throw std::invalid_argument("ideal_generated_by: point " + g.to_string() +
                                  " not in poset");
    mask |= 1ull << i;
  }
  return down_closure(mask);
}

OrderIdeal ideal_from_points(const PLambdaPoset& P,
                             const std::vector<PosetPoint>& pts) {
  std::uint64_t mask = 0;
  for (const auto& p : pts) {
    int i = P.index_of(p);
    if (i < 0)
      throw std::invalid_argument("ideal_from_points: point " + p.to_string() +
                                  " not in poset");
    mask |= 1ull << i;
  }
  if (!P.is_down_closed(mask))
    throw std::invalid_argument("ideal_from_points: set is not down-closed");
  return {mask};
}

std::vector<OrderIdeal> PLambdaPoset::enumerate_ideals(std::size_t cap) const {
  const int n = size();
  std::vector<OrderIdeal> out;
  // Depth-first over the linear extension; a point may enter only if all its
  // lower covers (hence, inductively, its whole down-set) are in.
  std::vector<std::uint64_t> below(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (j != i && leq(j, i)) below[i] |= 1ull << j;

  struct Frame {
    int pos;
    std::uint64_t mask;
  };
  std::vector<Frame> stack{{0, 0}};
  while (!stack.empty()) {
    Frame f = stack.back();
    stack.pop_back();
    if (f.pos == n) {
      out.push_back({f.mask});
      if (out.size() > cap)
        throw std::runtime_error("enumerate_ideals: cap exceeded (" +
                                 std::to_string(cap) + ")");
      continue;
    }
    int i = linear_extension_[f.pos];
    stack.push_back({f.pos + 1, f.mask});  // exclude point i
    if ((below[i] & f.mask) == below[i])
      stack.push_back({f.pos + 1, f.mask | (1ull << i)});
  }
  std::sort(out.begin(), out.end(),
            [&](const OrderIdeal& a, const OrderIdeal& b) {
              return ideal_less(a, b);
            });
  return out;
}

bool PLambdaPoset::ideal_less(const OrderIdeal& a, const OrderIdeal& b) const {
  int wa = weighted_size(a), wb = weighted_size(b);
  if (wa != wb) return wa < wb;
  for (int i = 0; i < size(); ++i) {
    bool ia = a.contains(i), ib = b.contains(i);
    if (ia != ib) return ia > ib;  // earlier first member wins
  }
  return false;
}

OrderIdeal PLambdaPoset::perp(const OrderIdeal& I) const {
  std::uint64_t reflected = 0;
  for (int i = 0; i < size(); ++i) {
    if (!I.contains(i)) continue;
    const PosetPoint& p = points_[i];
    reflected |= 1ull << index_of(p.k - 1 - p.v, p.k);
  }
  return {full_mask() & ~reflected};
}

int PLambdaPoset::weighted_size(std::uint64_t mask) const {
  int total = 0;
  for (int i = 0; i < size(); ++i)
    if ((mask >> i) & 1) total += mult_[i];
  return total;
}

std::vector<int> PLambdaPoset::maximal_elements(std::uint64_t mask) const {
  std::vector<int> out;
  for (int i = 0; i < size(); ++i) {
    if (!((mask >> i) & 1)) continue;
    bool maximal = true;
    for (int j = 0; j < size(); ++j)
      if (j != i && ((mask >> j) & 1) && leq(i, j)) {
        maximal = false;
        break;
      }
    if (maximal) out.push_back(i);
  }
  return out;
}

std::vector<int> PLambdaPoset::minimal_elements(std::uint64_t mask) const {
  std::vector<int> out;
  for (int i = 0; i < size(); ++i) {
    if (!((mask >> i) & 1)) continue;
    bool minimal = true;
    for (int j = 0; j < size(); ++j)
      if (j != i && ((mask >> j) & 1) && leq(j, i)) {
        minimal = false;
        break;
      }
    if (minimal) out.push_back(i);
  }
  return out;
}

std::uint64_t PLambdaPoset::axis_mask() const {
  std::uint64_t m = 0;
  for (int i = 0; i < size(); ++i)
    if (2 * points_[i].v == points_[i].k - 1) m |= 1ull << i;
  return m;
}

std::uint64_t PLambdaPoset::plus_mask() const {
  std::uint64_t m = 0;
  for (int i = 0; i < size(); ++i)
    if (2 * points_[i].v < points_[i].k - 1) m |= 1ull << i;
  return m;
}

std::uint64_t PLambdaPoset::plus_part(const OrderIdeal& I) const {
  if (!is_small(I))
    throw std::invalid_argument("plus_part: ideal is not small");
  return perp(I).mask & plus_mask();
}

ComponentSplit PLambdaPoset::connected_components(const OrderIdeal& I,
                                                  const OrderIdeal& J) const {
  if (!I.subset_of(J))
    throw std::invalid_argument("connected_components: I not contained in J");
  const std::uint64_t diff = J.mask & ~I.mask;

  // Union-find over points of J - I, joined along comparabilities. For an
  // induced subposet this yields the same components as its Hasse diagram.
  std::vector<int> parent(size());
  for (int i = 0; i < size(); ++i) parent[i] = i;
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int i = 0; i < size(); ++i) {
    if (!((diff >> i) & 1)) continue;
    for (int j = i + 1; j < size(); ++j) {
      if (!((diff >> j) & 1)) continue;
      if (leq(i, j) || leq(j, i)) parent[find(i)] = find(j);
    }
  }

  std::vector<std::uint64_t> comp_masks;
  std::vector<int> root_of;
  for (int i = 0; i < size(); ++i) {
    if (!((diff >> i) & 1)) continue;
    int r = find(i);
    auto it = std::find(root_of.begin(), root_of.end(), r);
    size_t idx;
    if (it == root_of.end()) {
      root_of.push_back(r);
      comp_masks.push_back(0);
      idx = comp_masks.size() - 1;
    } else {
      idx = static_cast<size_t>(it - root_of.begin());
    }
    comp_masks[idx] |= 1ull << i;
  }

  ComponentSplit split;
  const int l = lambda_.length();
  std::vector<char> claimed(l, 0);
  for (std::uint64_t cm : comp_masks) {
    SplitComponent comp;
    comp.points = cm;
    std::vector<int> part_values;
    for (int i = 0; i < size(); ++i)
      if ((cm >> i) & 1) part_values.push_back(points_[i].k);
    for (int idx = 0; idx < l; ++idx)
      if (std::find(part_values.begin(), part_values.end(),
                    lambda_.parts[idx]) != part_values.end()) {
        comp.segment.push_back(idx + 1);
        claimed[idx] = 1;
      }
    // Distinct components never share a column, and a component's columns
    // form a contiguous run of coordinates.
    for (size_t s = 1; s < comp.segment.size(); ++s)
      if (comp.segment[s] != comp.segment[s - 1] + 1)
        throw std::logic_error("connected_components: non-contiguous segment");
    std::vector<int> sub_parts;
    for (int idx : comp.segment) sub_parts.push_back(lambda_.parts[idx - 1]);
    comp.lambda_c = Partition(sub_parts);

    PLambdaPoset sub(comp.lambda_c);
    std::uint64_t lower = 0, upper = 0;
    for (int i = 0; i < size(); ++i) {
      const PosetPoint& p = points_[i];
      int si = sub.index_of(p);
      if (si < 0) continue;
      if (I.contains(i)) lower |= 1ull << si;
      if (J.contains(i)) upper |= 1ull << si;
    }
    comp.ideal_lower = {lower};
    comp.ideal_upper = {upper};
    split.components.push_back(std::move(comp));
  }

  std::sort(split.components.begin(), split.components.end(),
            [](const SplitComponent& a, const SplitComponent& b) {
              return a.segment.front() < b.segment.front();
            });
  for (int idx = 0; idx < l; ++idx)
    if (!claimed[idx]) split.zero_segment.push_back(idx + 1);
  return split;
}

std::vector<PosetPoint> PLambdaPoset::members(const OrderIdeal& I) const {
  std::vector<PosetPoint> out;
  for (int i = 0; i < size(); ++i)
    if (I.contains(i)) out.push_back(points_[i]);
  return out;
}

std::string PLambdaPoset::to_dot() const {
  std::ostringstream os;
  os << "graph poset {\n  rankdir=BT;\n  node [shape=plaintext];\n";
  for (int i = 0; i < size(); ++i)
    os << "  n" << i << " [label=\"" << points_[i].to_string() << "×"
       << mult_[i] << "\"];\n";
  for (const auto& [lo, hi] : covers_) os << "  n" << lo << " -- n" << hi << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace weil
