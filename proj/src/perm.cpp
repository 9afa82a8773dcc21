#include "evokit/perm.hpp"

#include <algorithm>

namespace evokit {

std::vector<int> cycle_type(const Perm& p) {
  int n = p.degree();
  std::vector<char> seen(n, 0);
  std::vector<int> lengths;
  for (int i = 0; i < n; ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (int j = i; !seen[j]; j = p(j)) {
      seen[j] = 1;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.rbegin(), lengths.rend());
  return lengths;
}

std::uint64_t element_order(const Perm& p) {
  std::uint64_t ord = 1;
  for (int len : cycle_type(p)) {
    ord = std::lcm(ord, static_cast<std::uint64_t>(len));
  }
  return ord;
}

}  // namespace evokit
