#pragma once

#include <vector>

#include "idealarr/lattice.hpp"
#include "idealarr/rootposet.hpp"
#include "idealarr/rootsys.hpp"

namespace idealarr {

// Positive system of the roots vanishing on a flat, with the induced simple
// system and its decomposition into irreducible components.
struct SubRootSystem {
  Flat flat;
  std::vector<int> positive_roots;
  std::vector<int> simple_system;
  std::vector<std::vector<int>> components;
};

// flat.loc must be span-closed in the full positive system.
SubRootSystem sub_root_system(const RootSystem& rs, const Flat& flat);

// Expansion of a member over the sub-system's simple system; coefficients
// are verified nonnegative integers.
std::vector<int> expand_over_simples(const RootSystem& rs, const SubRootSystem& sub, int alpha);

// Height of alpha inside its own irreducible component of the sub-system.
int local_height(const RootSystem& rs, const SubRootSystem& sub, int alpha);

struct LocalGlobalReport {
  int root_index = -1;
  int lhs = 0;  // Ht(alpha) - 1
  int rhs = 0;  // sum over codim-2 flats through H_alpha of (Ht_X(alpha) - 1)
  bool pass = false;
};

LocalGlobalReport verify_local_global(const RootSystem& rs, int alpha);

// Unordered pairs {b1, b2} of distinct positive roots with
// alpha = a*b1 + b*b2 for some integers a, b >= 1.
int decomposition_pair_count(const RootSystem& rs, int alpha);

// Same, but both roots must come from the allowed set.
int pair_count_within(const RootSystem& rs, const IndexSet& allowed, int alpha);

// Pairs with a = b = 1 only.
int unit_pair_count(const RootSystem& rs, int alpha);

}  // namespace idealarr
