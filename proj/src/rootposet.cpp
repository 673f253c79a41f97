#include "idealarr/rootposet.hpp"

#include <stdexcept>

namespace idealarr {

bool leq(const Root& a, const Root& b) {
  if (a.coeffs.size() != b.coeffs.size())
    throw std::invalid_argument("leq: roots from different systems");
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
    if (a.coeffs[i] > b.coeffs[i]) return false;
  }
  return true;
}

namespace {

// below[k] = indices of roots strictly below root k; canonical order is a
// linear extension, so these all precede k.
std::vector<IndexSet> strict_lower_sets(const RootSystem& rs) {
  const int n = rs.num_roots();
  std::vector<IndexSet> below(n);
  for (int k = 0; k < n; ++k) {
    for (int j = 0; j < k; ++j) {
      if (leq(rs.root(j), rs.root(k))) below[k].set(j);
    }
  }
  return below;
}

}  // namespace

bool is_ideal(const RootSystem& rs, const IndexSet& members) {
  for (int k : members.indices()) {
    const Root& a = rs.root(k);
    for (int j = 0; j < rs.num_roots(); ++j) {
      if (!members.test(j) && leq(rs.root(j), a)) return false;
    }
  }
  return true;
}

IndexSet maximal_elements(const RootSystem& rs, const IndexSet& members) {
  IndexSet gens;
  for (int k : members.indices()) {
    bool maximal = true;
    for (int j : members.indices()) {
      if (j != k && leq(rs.root(k), rs.root(j))) {
        maximal = false;
        break;
      }
    }
    if (maximal) gens.set(k);
  }
  return gens;
}

Ideal make_ideal(const RootSystem& rs, const IndexSet& members) {
  if (!is_ideal(rs, members))
    throw std::invalid_argument("make_ideal: member set is not lower-closed");
  return Ideal{members, maximal_elements(rs, members)};
}

Ideal ideal_closure(const RootSystem& rs, const IndexSet& generators) {
  IndexSet members;
  for (int k : generators.indices()) {
    if (k >= rs.num_roots()) throw std::invalid_argument("ideal_closure: root index out of range");
    for (int j = 0; j < rs.num_roots(); ++j) {
      if (leq(rs.root(j), rs.root(k))) members.set(j);
    }
  }
  return Ideal{members, maximal_elements(rs, members)};
}

std::vector<Ideal> enumerate_ideals(const RootSystem& rs) {
  const int n = rs.num_roots();
  const std::vector<IndexSet> below = strict_lower_sets(rs);
  std::vector<Ideal> out;
  IndexSet current;
  // Depth-first over the canonical linear extension: at position k either
  // skip root k or take it (allowed when everything below is already in).
  auto rec = [&](auto&& self, int k) -> void {
    if (k == n) {
      out.push_back(Ideal{current, maximal_elements(rs, current)});
      return;
    }
    self(self, k + 1);
    if (below[k].subset_of(current)) {
      current.set(k);
      self(self, k + 1);
      current.reset(k);
    }
  };
  rec(rec, 0);
  return out;
}

int ideal_height(const RootSystem& rs, const Ideal& I) {
  int m = 0;
  for (int k : I.members.indices()) m = std::max(m, rs.root(k).height);
  return m;
}

Ideal height_layer(const RootSystem& rs, const Ideal& I, int j) {
  if (j < 0) throw std::invalid_argument("height_layer: negative height");
  IndexSet members;
  for (int k : I.members.indices()) {
    if (rs.root(k).height <= j) members.set(k);
  }
  return Ideal{members, maximal_elements(rs, members)};
}

Ideal truncation_ideal(const RootSystem& rs, int t) {
  if (t < 0 || t > rs.num_roots())
    throw std::invalid_argument("truncation_ideal: t out of range");
  IndexSet members;
  for (int k = 0; k < t; ++k) members.set(k);
  Ideal I{members, maximal_elements(rs, members)};
  if (!is_ideal(rs, members))
    throw std::logic_error("truncation_ideal: canonical prefix failed the ideal check");
  return I;
}

}  // namespace idealarr
