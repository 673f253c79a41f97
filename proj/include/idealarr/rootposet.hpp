#pragma once

#include <vector>

#include "idealarr/indexset.hpp"
#include "idealarr/rootsys.hpp"

namespace idealarr {

// Lower-closed subset of the positive-root poset, with its antichain of
// maximal elements.
struct Ideal {
  IndexSet members;
  IndexSet generators;
  int size() const { return static_cast<int>(members.count()); }
  bool operator==(const Ideal& o) const { return members == o.members; }
};

// a <= b in the root poset: b - a has all coefficients >= 0.
bool leq(const Root& a, const Root& b);

bool is_ideal(const RootSystem& rs, const IndexSet& members);
IndexSet maximal_elements(const RootSystem& rs, const IndexSet& members);

Ideal make_ideal(const RootSystem& rs, const IndexSet& members);
Ideal ideal_closure(const RootSystem& rs, const IndexSet& generators);

// All ideals of the root poset, deterministic order, includes the empty
// ideal and the full poset.
std::vector<Ideal> enumerate_ideals(const RootSystem& rs);

// Max height over members, 0 for the empty ideal.
int ideal_height(const RootSystem& rs, const Ideal& I);

// I_j = members of height <= j.
Ideal height_layer(const RootSystem& rs, const Ideal& I, int j);

// First t roots of the canonical order.
Ideal truncation_ideal(const RootSystem& rs, int t);

}  // namespace idealarr
