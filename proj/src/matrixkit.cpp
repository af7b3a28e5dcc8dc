#include "ehi/matrixkit.hpp"

#include <algorithm>

namespace ehi {

std::vector<std::vector<int>> colex_subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  if (k < 0 || k > n) return out;
  std::vector<int> cur(k);
  for (int i = 0; i < k; ++i) cur[i] = i;
  // Colex successor: bump the lowest entry that has room, reset the ones below.
  while (true) {
    out.push_back(cur);
    int i = 0;
    while (i < k && (i + 1 < k ? cur[i] + 1 == cur[i + 1] : cur[i] + 1 == n)) ++i;
    if (i == k) break;
    ++cur[i];
    for (int j = 0; j < i; ++j) cur[j] = j;
  }
  return out;
}

}  // namespace ehi
