#pragma once

#include <vector>

#include "idealarr/rootposet.hpp"
#include "idealarr/rootsys.hpp"

namespace idealarr {

// counts[j-1] = number of members of height j, no trailing zeros.
std::vector<int> height_distribution(const RootSystem& rs, const Ideal& I);

// Conjugate of a weakly decreasing distribution, padded with zeros to
// length `rank` and sorted ascending. Rejects non-partitions.
std::vector<int> dual_partition(int rank, const std::vector<int>& dist);

std::vector<int> ideal_exponents(const RootSystem& rs, const Ideal& I);

// Multiset union across components, sorted ascending.
std::vector<int> product_exponents(const std::vector<std::vector<int>>& records);

// Advisory: is the multiset invariant under e -> h-e?
bool exponents_symmetric(const std::vector<int>& exps, int coxeter_number);

}  // namespace idealarr
