#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "weil/partition.hpp"

namespace weil {

// A point (v, k): k is a part value of lambda and 0 <= v < k. Under the
// group-element reading, (v, k) stands for elements of depth v in a cyclic
// factor of order p^k.
struct PosetPoint {
  int v = 0;
  int k = 0;

  bool operator==(const PosetPoint& o) const { return v == o.v && k == o.k; }
  bool operator!=(const PosetPoint& o) const { return !(*this == o); }
  std::string to_string() const {
    return "(" + std::to_string(v) + "," + std::to_string(k) + ")";
  }
};

// x <= y iff x.v >= y.v and x.k - x.v <= y.k - y.v. Pure point-level
// comparison, independent of any particular poset instance.
inline bool point_leq(const PosetPoint& x, const PosetPoint& y) {
  return x.v >= y.v && x.k - x.v <= y.k - y.v;
}

class PLambdaPoset;

// An order ideal (down-closed subset), stored as a bitmask over the canonical
// point order of its poset. Posets here never exceed 64 points.
struct OrderIdeal {
  std::uint64_t mask = 0;

  bool operator==(const OrderIdeal& o) const { return mask == o.mask; }
  bool operator!=(const OrderIdeal& o) const { return mask != o.mask; }
  bool operator<(const OrderIdeal& o) const { return mask < o.mask; }

  bool contains(int point_index) const { return (mask >> point_index) & 1; }
  bool subset_of(const OrderIdeal& o) const { return (mask & ~o.mask) == 0; }
  int count() const { return __builtin_popcountll(mask); }
  bool empty() const { return mask == 0; }

  OrderIdeal intersect(const OrderIdeal& o) const { return {mask & o.mask}; }
  OrderIdeal unite(const OrderIdeal& o) const { return {mask | o.mask}; }
  OrderIdeal minus(const OrderIdeal& o) const { return {mask & ~o.mask}; }
};

// One connected component of an induced subposet J - I, together with the
// block of coordinates it governs.
struct SplitComponent {
  std::uint64_t points = 0;        // mask in the parent poset
  std::vector<int> segment;        // 1-based indices into lambda, contiguous
  Partition lambda_c;              // parts of lambda along the segment
  OrderIdeal ideal_lower;          // I restricted, as ideal of subposet()
  OrderIdeal ideal_upper;          // J restricted, as ideal of subposet()

  PLambdaPoset subposet() const;
};

struct ComponentSplit {
  std::vector<SplitComponent> components;  // ordered by min segment index
  std::vector<int> zero_segment;           // 1-based indices not in any S_C
};

// The poset P_lambda: points (v, k) over distinct part values k of lambda,
// in canonical order (k descending, v ascending). Column k is a chain; the
// multiplicity of every point in column k is the number of parts equal to k.
class PLambdaPoset {
 public:
  explicit PLambdaPoset(Partition lambda);

  const Partition& partition() const { return lambda_; }
  int size() const { return static_cast<int>(points_.size()); }
  const std::vector<PosetPoint>& points() const { return points_; }
  const PosetPoint& point(int i) const { return points_[i]; }

  // Index of (v, k) in the canonical order; -1 if absent.
  int index_of(const PosetPoint& p) const;
  int index_of(int v, int k) const { return index_of(PosetPoint{v, k}); }

  bool leq(int i, int j) const { return leq_[i * size() + j]; }
  int multiplicity(int i) const { return mult_[i]; }

  // Cover relations (i, j) with point i covered by point j, i.e. i < j with
  // nothing in between (transitive reduction).
  const std::vector<std::pair<int, int>>& covers() const { return covers_; }

  std::uint64_t full_mask() const {
    return size() == 64 ? ~0ull : ((1ull << size()) - 1);
  }
  OrderIdeal full_ideal() const { return {full_mask()}; }
  OrderIdeal empty_ideal() const { return {0}; }

  bool is_down_closed(std::uint64_t mask) const;

  // Smallest ideal containing the given points.
  OrderIdeal ideal_generated_by(const std::vector<PosetPoint>& gens) const;
  OrderIdeal down_closure(std::uint64_t mask) const;

  // All order ideals, sorted by weighted size then lexicographically on the
  // canonical member list. Throws if more than `cap` ideals exist.
  std::vector<OrderIdeal> enumerate_ideals(std::size_t cap = 1000000) const;

  // Complement of the reflection (v,k) -> (k-1-v, k). An order-reversing
  // involution; it realizes the character-group annihilator on ideals.
  OrderIdeal perp(const OrderIdeal& I) const;

  bool is_small(const OrderIdeal& I) const {
    return I.subset_of(perp(I));
  }

  // Size counted with multiplicity: [S] = sum of m(x) over x in S.
  int weighted_size(std::uint64_t mask) const;
  int weighted_size(const OrderIdeal& I) const { return weighted_size(I.mask); }

  std::vector<int> maximal_elements(std::uint64_t mask) const;
  std::vector<int> minimal_elements(std::uint64_t mask) const;

  // Points with v = (k-1)/2: the fixed axis of the reflection.
  std::uint64_t axis_mask() const;
  // Points with v < (k-1)/2: the strict upper half P_lambda^+.
  std::uint64_t plus_mask() const;

  // I^perp intersected with the upper half; requires I small. Expressed in
  // the parent poset's indices (the half-poset is an induced subposet).
  std::uint64_t plus_part(const OrderIdeal& I) const;

  // Connected components of the induced subposet J - I (Hasse connectivity),
  // each with its coordinate segment and restricted ideals. Requires I
  // subset of J.
  ComponentSplit connected_components(const OrderIdeal& I,
                                      const OrderIdeal& J) const;

  // Canonical member list, in canonical point order.
  std::vector<PosetPoint> members(const OrderIdeal& I) const;

  // Comparator for the canonical ideal order: weighted size, then
  // lexicographic member list.
  bool ideal_less(const OrderIdeal& a, const OrderIdeal& b) const;

  std::string to_dot() const;

 private:
  Partition lambda_;
  std::vector<PosetPoint> points_;
  std::vector<int> mult_;
  std::vector<char> leq_;
  std::vector<std::pair<int, int>> covers_;
  std::vector<int> linear_extension_;  // smaller elements first
};

OrderIdeal ideal_from_points(const PLambdaPoset& P,
                             const std::vector<PosetPoint>& pts);

}  // namespace weil
