#include "idealarr/partition.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

namespace idealarr {

std::vector<int> height_distribution(const RootSystem& rs, const Ideal& I) {
  std::vector<int> counts;
  for (int k : I.members.indices()) {
    const int h = rs.root(k).height;
    if (static_cast<int>(counts.size()) < h) counts.resize(h, 0);
    counts[h - 1] += 1;
  }
  return counts;
}

std::vector<int> dual_partition(int rank, const std::vector<int>& dist) {
  for (std::size_t j = 0; j + 1 < dist.size(); ++j) {
    if (dist[j] < dist[j + 1])
      throw std::invalid_argument("dual_partition: not a partition, increases at position " +
                                  std::to_string(j + 1));
  }
  if (!dist.empty() && dist[0] > rank)
    throw std::invalid_argument("dual_partition: first part exceeds the rank");
  if (!dist.empty() && dist.back() <= 0)
    throw std::invalid_argument("dual_partition: nonpositive part");
  const int m = static_cast<int>(dist.size());
  std::vector<int> exps;
  exps.insert(exps.end(), rank - (m ? dist[0] : 0), 0);
  for (int j = 1; j < m; ++j) exps.insert(exps.end(), dist[j - 1] - dist[j], j);
  if (m) exps.insert(exps.end(), dist[m - 1], m);
  return exps;
}

std::vector<int> ideal_exponents(const RootSystem& rs, const Ideal& I) {
  return dual_partition(rs.rank(), height_distribution(rs, I));
}

std::vector<int> product_exponents(const std::vector<std::vector<int>>& records) {
  std::vector<int> out;
  for (const auto& r : records) out.insert(out.end(), r.begin(), r.end());
  std::sort(out.begin(), out.end());
  return out;
}

bool exponents_symmetric(const std::vector<int>& exps, int coxeter_number) {
  std::map<int, int> tally;
  for (int e : exps) tally[e] += 1;
  for (const auto& [e, c] : tally) {
    auto it = tally.find(coxeter_number - e);
    if (it == tally.end() || it->second != c) return false;
  }
  return true;
}

}  // namespace idealarr
