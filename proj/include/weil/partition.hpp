#pragma once

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace weil {

// A partition lambda_1 >= ... >= lambda_l of positive integers. Indexing of
// parts is 0-based internally; user-facing segment sets are 1-based.
struct Partition {
  std::vector<int> parts;

  Partition() = default;
  explicit Partition(std::vector<int> p) : parts(std::move(p)) { validate(); }

  void validate() const {
    if (parts.empty()) throw std::invalid_argument("partition: empty");
    for (size_t i = 0; i < parts.size(); ++i) {
      if (parts[i] < 1)
        throw std::invalid_argument("partition: parts must be positive");
      if (i > 0 && parts[i] > parts[i - 1])
        throw std::invalid_argument("partition: parts must be weakly decreasing");
    }
  }

  int length() const { return static_cast<int>(parts.size()); }
  int sum() const { return std::accumulate(parts.begin(), parts.end(), 0); }

  // Number of parts equal to k.
  int multiplicity(int k) const {
    return static_cast<int>(std::count(parts.begin(), parts.end(), k));
  }

  std::vector<int> distinct_parts() const {
    std::vector<int> d;
    for (int k : parts)
      if (d.empty() || d.back() != k) d.push_back(k);
    return d;
  }

  bool operator==(const Partition& o) const { return parts == o.parts; }

  std::string to_string() const {
    std::string s = "(";
    for (size_t i = 0; i < parts.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(parts[i]);
    }
    return s + ")";
  }
};

// Parses "3,1" style part lists. With sort=false, a strictly increasing pair
// anywhere is an error; with sort=true the parts are sorted descending first.
Partition parse_partition(const std::string& text, bool sort = false);

// All partitions of every n in [1, max_sum], in deterministic order.
std::vector<Partition> partitions_up_to(int max_sum);

}  // namespace weil
