#include "idealarr/localheight.hpp"

#include <algorithm>
#include <stdexcept>

namespace idealarr {

namespace {

// Exact solve of (columns of simples) * c = target; the simple system is
// linearly independent so the solution is unique when it exists.
std::vector<mpq_class> solve_expansion(const RootSystem& rs, const std::vector<int>& simples,
                                       const std::vector<int>& target) {
  const int l = rs.rank();
  const int q = static_cast<int>(simples.size());
  std::vector<std::vector<mpq_class>> m(l, std::vector<mpq_class>(q + 1));
  for (int i = 0; i < l; ++i) {
    for (int j = 0; j < q; ++j) m[i][j] = rs.root(simples[j]).coeffs[i];
    m[i][q] = target[i];
  }
  int row = 0;
  std::vector<int> pivot_row(q, -1);
  for (int col = 0; col < q && row < l; ++col) {
    int pr = -1;
    for (int i = row; i < l; ++i) {
      if (m[i][col] != 0) {
        pr = i;
        break;
      }
    }
    if (pr < 0) throw std::logic_error("sub-root-system: simple system is dependent");
    std::swap(m[row], m[pr]);
    const mpq_class inv = m[row][col];
    for (int j = col; j <= q; ++j) m[row][j] /= inv;
    for (int i = 0; i < l; ++i) {
      if (i == row || m[i][col] == 0) continue;
      const mpq_class f = m[i][col];
      for (int j = col; j <= q; ++j) m[i][j] -= f * m[row][j];
    }
    pivot_row[col] = row;
    ++row;
  }
  for (int i = row; i < l; ++i) {
    if (m[i][q] != 0)
      throw std::logic_error("sub-root-system: member is outside the simple span");
  }
  std::vector<mpq_class> c(q);
  for (int col = 0; col < q; ++col) c[col] = m[pivot_row[col]][q];
  return c;
}

}  // namespace

SubRootSystem sub_root_system(const RootSystem& rs, const Flat& flat) {
  SubRootSystem sub;
  sub.flat = flat;
  sub.positive_roots = flat.loc.indices();

  // simple system: members not expressible as a sum of two members
  for (int g : sub.positive_roots) {
    bool decomposable = false;
    for (int a : sub.positive_roots) {
      if (decomposable) break;
      for (int b : sub.positive_roots) {
        bool match = true;
        for (int i = 0; i < rs.rank() && match; ++i) {
          match = rs.root(a).coeffs[i] + rs.root(b).coeffs[i] == rs.root(g).coeffs[i];
        }
        if (match) {
          decomposable = true;
          break;
        }
      }
    }
    if (!decomposable) sub.simple_system.push_back(g);
  }
  const int q = static_cast<int>(sub.simple_system.size());
  if (q != rs.rank() - flat.dim)
    throw std::logic_error("sub-root-system: simple system size differs from the codimension");

  // every member must expand with nonnegative integer coefficients
  for (int g : sub.positive_roots) expand_over_simples(rs, sub, g);

  // components: connected pieces of the non-orthogonality graph
  std::vector<bool> used(q, false);
  for (int s = 0; s < q; ++s) {
    if (used[s]) continue;
    std::vector<int> comp{s};
    used[s] = true;
    for (std::size_t head = 0; head < comp.size(); ++head) {
      for (int t = 0; t < q; ++t) {
        if (used[t]) continue;
        if (inner_product(rs, rs.root(sub.simple_system[comp[head]]),
                          rs.root(sub.simple_system[t])) != 0) {
          used[t] = true;
          comp.push_back(t);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    std::vector<int> block;
    for (int idx : comp) block.push_back(sub.simple_system[idx]);
    sub.components.push_back(std::move(block));
  }
  return sub;
}

std::vector<int> expand_over_simples(const RootSystem& rs, const SubRootSystem& sub, int alpha) {
  if (!sub.flat.loc.test(alpha))
    throw std::invalid_argument("expand_over_simples: root not in the sub-system");
  auto c = solve_expansion(rs, sub.simple_system, rs.root(alpha).coeffs);
  std::vector<int> out(c.size());
  for (std::size_t j = 0; j < c.size(); ++j) {
    c[j].canonicalize();
    if (c[j].get_den() != 1 || c[j] < 0)
      throw std::logic_error("sub-root-system: expansion is not a nonnegative integer vector");
    out[j] = static_cast<int>(c[j].get_num().get_si());
  }
  return out;
}

int local_height(const RootSystem& rs, const SubRootSystem& sub, int alpha) {
  auto c = expand_over_simples(rs, sub, alpha);
  // support lies in one component, so summing everything is the height
  // inside alpha's own component
  int support_components = 0;
  for (const auto& comp : sub.components) {
    bool hit = false;
    for (int g : comp) {
      auto it = std::find(sub.simple_system.begin(), sub.simple_system.end(), g);
      if (c[it - sub.simple_system.begin()] != 0) hit = true;
    }
    support_components += hit;
  }
  if (support_components > 1)
    throw std::logic_error("local height: expansion support crosses components");
  int h = 0;
  for (int x : c) h += x;
  return h;
}

LocalGlobalReport verify_local_global(const RootSystem& rs, int alpha) {
  LocalGlobalReport rep;
  rep.root_index = alpha;
  rep.lhs = rs.root(alpha).height - 1;
  rep.rhs = 0;
  const Ideal full = truncation_ideal(rs, rs.num_roots());
  for (const Flat& f : restriction(rs, full, alpha)) {
    SubRootSystem sub = sub_root_system(rs, f);
    rep.rhs += local_height(rs, sub, alpha) - 1;
  }
  rep.pass = rep.lhs == rep.rhs;
  return rep;
}

int pair_count_within(const RootSystem& rs, const IndexSet& allowed, int alpha) {
  const Root& target = rs.root(alpha);
  const auto idx = allowed.indices();
  int count = 0;
  for (std::size_t u = 0; u < idx.size(); ++u) {
    for (std::size_t v = u + 1; v < idx.size(); ++v) {
      const Root& b1 = rs.root(idx[u]);
      const Root& b2 = rs.root(idx[v]);
      bool found = false;
      for (int a = 1; a * b1.height < target.height && !found; ++a) {
        const int rem = target.height - a * b1.height;
        if (rem % b2.height != 0) continue;
        const int b = rem / b2.height;
        if (b < 1) continue;
        bool match = true;
        for (int i = 0; i < rs.rank() && match; ++i) {
          match = a * b1.coeffs[i] + b * b2.coeffs[i] == target.coeffs[i];
        }
        found = match;
      }
      count += found;
    }
  }
  return count;
}

int decomposition_pair_count(const RootSystem& rs, int alpha) {
  return pair_count_within(rs, IndexSet::full(rs.num_roots()), alpha);
}

int unit_pair_count(const RootSystem& rs, int alpha) {
  const Root& target = rs.root(alpha);
  int count = 0;
  for (int u = 0; u < rs.num_roots(); ++u) {
    for (int v = u + 1; v < rs.num_roots(); ++v) {
      bool match = true;
      for (int i = 0; i < rs.rank() && match; ++i) {
        match = rs.root(u).coeffs[i] + rs.root(v).coeffs[i] == target.coeffs[i];
      }
      count += match;
    }
  }
  return count;
}

}  // namespace idealarr
