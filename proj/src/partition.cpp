#include "weil/partition.hpp"

#include <functional>

namespace weil {

Partition parse_partition(const std::string& text, bool sort) {
  std::vector<int> parts;
  size_t pos = 0;
  if (text.empty()) throw std::invalid_argument("partition: empty string");
  while (pos < text.size()) {
    size_t comma = text.find(',', pos);
    std::string tok = text.substr(
        pos, comma == std::string::npos ? std::string::npos : comma - pos);
    if (tok.empty())
      throw std::invalid_argument("partition: empty component in '" + text + "'");
    size_t used = 0;
    int v;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("partition: bad integer '" + tok + "'");
    }
    if (used != tok.size())
      throw std::invalid_argument("partition: bad integer '" + tok + "'");
    parts.push_back(v);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  if (sort) std::sort(parts.begin(), parts.end(), std::greater<int>());
  return Partition(parts);
}

std::vector<Partition> partitions_up_to(int max_sum) {
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int k = std::min(remaining, max_part); k >= 1; --k) {
      cur.push_back(k);
      rec(remaining - k, k);
      cur.pop_back();
    }
  };
  for (int n = 1; n <= max_sum; ++n) rec(n, n);
  return out;
}

}  // namespace weil
