#include "idealarr/derivations.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <stdexcept>
#include <string>

#include "idealarr/matengine.hpp"
#include "idealarr/partition.hpp"

namespace idealarr {

Poly apply_derivation(const Derivation& theta, const std::vector<int>& form) {
  if (form.size() != theta.coeffs.size())
    throw std::invalid_argument("apply_derivation: arity mismatch");
  Poly out(theta.coeffs.empty() ? 0 : theta.coeffs[0].nvars());
  for (std::size_t i = 0; i < form.size(); ++i) {
    if (form[i] == 0) continue;
    out += theta.coeffs[i].scaled(form[i]);
  }
  return out;
}

bool is_logarithmic(const RootSystem& rs, const Derivation& theta, const Ideal& I) {
  for (int b : I.members.indices()) {
    const Poly val = apply_derivation(theta, rs.root(b).coeffs);
    if (!divide_by_linear(val, Poly::linear_form(rs.root(b).coeffs)).has_value()) return false;
  }
  return true;
}

std::vector<Derivation> boolean_basis(const RootSystem& rs, const Ideal& I1) {
  const int l = rs.rank();
  for (int k : I1.members.indices()) {
    if (rs.root(k).height != 1)
      throw std::invalid_argument("boolean_basis: ideal reaches beyond the simple layer");
  }
  std::vector<Derivation> low, high;
  for (int i = 0; i < l; ++i) {
    std::vector<int> e(l, 0);
    e[i] = 1;
    const bool member = I1.members.test(rs.index_of(e));
    Derivation d;
    d.coeffs.assign(l, Poly(l));
    d.coeffs[i] = member ? Poly::variable(l, i) : Poly::constant(l, 1);
    d.degree = member ? 1 : 0;
    (member ? high : low).push_back(std::move(d));
  }
  low.insert(low.end(), high.begin(), high.end());
  return low;
}

NuPolicy smallest_index_policy() {
  return [](const Flat&, const std::vector<int>& candidates) { return candidates.front(); };
}

NuPolicy largest_index_policy() {
  return [](const Flat&, const std::vector<int>& candidates) { return candidates.back(); };
}

namespace {

// distinct restriction flats of I_k against beta, with their sorted
// candidate hyperplane lists
std::map<IndexSet, std::vector<int>> restriction_candidates(const RootSystem& rs,
                                                            const Ideal& I_k, int beta) {
  std::map<IndexSet, std::vector<int>> flats;
  for (int h : I_k.members.indices()) {
    const Flat f = span_closure(rs, IndexSet::of({h, beta}));
    flats[f.loc].push_back(h);
  }
  return flats;
}

}  // namespace

Poly b_polynomial(const RootSystem& rs, const Ideal& I_k, int beta, const NuPolicy& nu) {
  const int l = rs.rank();
  Poly b = Poly::constant(l, 1);
  for (int h : I_k.members.indices()) b = b * Poly::linear_form(rs.root(h).coeffs);
  for (const auto& [loc, candidates] : restriction_candidates(rs, I_k, beta)) {
    Flat f = span_closure(rs, IndexSet::of({candidates.front(), beta}));
    const int chosen = nu(f, candidates);
    if (std::find(candidates.begin(), candidates.end(), chosen) == candidates.end())
      throw std::invalid_argument("b_polynomial: policy chose a hyperplane off the flat");
    auto quotient = divide_by_linear(b, Poly::linear_form(rs.root(chosen).coeffs));
    if (!quotient)
      throw std::logic_error("b_polynomial: division left a remainder");
    b = std::move(*quotient);
  }
  return b;
}

std::vector<std::vector<mpq_class>> c_matrix(const RootSystem& rs,
                                             const std::vector<Derivation>& top,
                                             const std::vector<int>& betas,
                                             const std::vector<Poly>& b_polys) {
  if (betas.size() != b_polys.size())
    throw std::invalid_argument("c_matrix: one b polynomial per added root");
  std::vector<std::vector<mpq_class>> c(top.size(), std::vector<mpq_class>(betas.size()));
  for (std::size_t j = 0; j < betas.size(); ++j) {
    const Poly form = Poly::linear_form(rs.root(betas[j]).coeffs);
    const Poly rb = reduce_mod_linear(b_polys[j], form);
    if (rb.is_zero()) throw std::logic_error("c_matrix: b polynomial vanishes on the hyperplane");
    for (std::size_t i = 0; i < top.size(); ++i) {
      const Poly rv = reduce_mod_linear(apply_derivation(top[i], rs.root(betas[j]).coeffs), form);
      if (rv.is_zero()) {
        c[i][j] = 0;
        continue;
      }
      const mpq_class scale = rv.leading_coeff() / rb.leading_coeff();
      if (rv != rb.scaled(scale))
        throw std::logic_error("c_matrix: restriction is not a scalar multiple of b");
      c[i][j] = scale;
    }
  }
  return c;
}

BasisBuild mat_basis_step(const RootSystem& rs, BasisBuild build, const Ideal& I_k,
                          const std::vector<int>& betas, const NuPolicy& nu) {
  if (betas.empty()) return build;
  const int l = rs.rank();
  const int q = static_cast<int>(betas.size());
  const int d = build.basis.back().degree;
  int p = 0;
  for (const auto& th : build.basis) p += th.degree == d;
  if (q > p) throw std::logic_error("mat step: more added roots than top-degree members");

  std::vector<Derivation> top(build.basis.end() - p, build.basis.end());
  std::vector<Poly> b_polys;
  for (int beta : betas) {
    Poly b = b_polynomial(rs, I_k, beta, nu);
    if (b.total_degree() != d)
      throw std::logic_error("mat step: b polynomial degree differs from the top exponent");
    b_polys.push_back(std::move(b));
  }
  auto cmat = c_matrix(rs, top, betas, b_polys);

  // row-reduce [C | E_p]; the tracked right block rebuilds the derivations
  std::vector<std::vector<mpq_class>> aug(p, std::vector<mpq_class>(q + p, 0));
  for (int i = 0; i < p; ++i) {
    for (int j = 0; j < q; ++j) aug[i][j] = cmat[i][j];
    aug[i][q + i] = 1;
  }
  int row = 0;
  for (int col = 0; col < q; ++col) {
    int pr = -1;
    for (int i = row; i < p; ++i) {
      if (aug[i][col] != 0) {
        pr = i;
        break;
      }
    }
    if (pr < 0) throw std::logic_error("mat step: c matrix rank is below the layer size");
    std::swap(aug[row], aug[pr]);
    const mpq_class pivot = aug[row][col];
    for (int j = 0; j < q + p; ++j) aug[row][j] /= pivot;
    for (int i = 0; i < p; ++i) {
      if (i == row || aug[i][col] == 0) continue;
      const mpq_class f = aug[i][col];
      for (int j = 0; j < q + p; ++j) aug[i][j] -= f * aug[row][j];
    }
    ++row;
  }

  std::vector<Derivation> reduced(p);
  for (int i = 0; i < p; ++i) {
    Derivation comb;
    comb.coeffs.assign(l, Poly(l));
    for (int k2 = 0; k2 < p; ++k2) {
      if (aug[i][q + k2] == 0) continue;
      for (int v = 0; v < l; ++v) comb.coeffs[v] += top[k2].coeffs[v].scaled(aug[i][q + k2]);
    }
    comb.degree = d;
    reduced[i] = std::move(comb);
  }

  std::vector<Derivation> next(build.basis.begin(), build.basis.end() - p);
  for (int i = q; i < p; ++i) next.push_back(reduced[i]);
  for (int j = 0; j < q; ++j) {
    Derivation lifted;
    lifted.coeffs.assign(l, Poly(l));
    const Poly form = Poly::linear_form(rs.root(betas[j]).coeffs);
    for (int v = 0; v < l; ++v) lifted.coeffs[v] = form * reduced[j].coeffs[v];
    lifted.degree = d + 1;
    next.push_back(std::move(lifted));
  }

  IndexSet members = I_k.members;
  for (int beta : betas) members.set(beta);
  const Ideal I_next = make_ideal(rs, members);
  for (std::size_t i = 0; i < next.size(); ++i) {
    if (!is_logarithmic(rs, next[i], I_next))
      throw std::logic_error("mat step: member " + std::to_string(i) +
                             " is not logarithmic for the grown ideal");
  }
  std::vector<int> degrees;
  for (const auto& th : next) degrees.push_back(th.degree);
  std::vector<int> want = ideal_exponents(rs, I_next);
  std::vector<int> got = degrees;
  std::sort(got.begin(), got.end());
  if (got != want) throw std::logic_error("mat step: degrees differ from the dual partition");

  BasisLayer layer;
  layer.layer = d + 1;
  layer.betas = betas;
  layer.b_polys = std::move(b_polys);
  layer.cmat = std::move(cmat);
  build.layers.push_back(std::move(layer));
  build.basis = std::move(next);
  return build;
}

bool saito_check(const RootSystem& rs, const std::vector<Derivation>& basis, const Ideal& I) {
  const int l = rs.rank();
  if (static_cast<int>(basis.size()) != l)
    throw std::invalid_argument("saito check: need exactly rank many derivations");
  std::vector<std::vector<Poly>> m(l, std::vector<Poly>(l, Poly(l)));
  for (int i = 0; i < l; ++i) {
    for (int j = 0; j < l; ++j) m[i][j] = basis[i].coeffs[j];
  }
  const Poly det = poly_determinant(m);
  if (det.is_zero()) return false;
  Poly defining = Poly::constant(l, 1);
  for (int b : I.members.indices()) defining = defining * Poly::linear_form(rs.root(b).coeffs);
  const mpq_class scale = det.leading_coeff() / defining.leading_coeff();
  return det == defining.scaled(scale);
}

int default_rank_limit() {
  if (const char* env = std::getenv("IDEALARR_RANK_LIMIT")) {
    const int v = std::atoi(env);
    if (v > 0) return v;
  }
  return 4;
}

BasisBuild build_basis_for_ideal(const RootSystem& rs, const Ideal& I, const NuPolicy& nu,
                                 int rank_limit) {
  if (rs.rank() > rank_limit)
    throw std::invalid_argument("symbolic build: rank " + std::to_string(rs.rank()) +
                                " exceeds the limit " + std::to_string(rank_limit) +
                                "; raise IDEALARR_RANK_LIMIT to override");
  BasisBuild build;
  build.basis = boolean_basis(rs, height_layer(rs, I, 1));
  if (!saito_check(rs, build.basis, height_layer(rs, I, 1)))
    throw std::logic_error("symbolic build: Boolean base case fails the determinant check");
  const int m = ideal_height(rs, I);
  for (int k = 1; k < m; ++k) {
    const Ideal lower = height_layer(rs, I, k);
    std::vector<int> betas;
    for (int idx : I.members.indices()) {
      if (rs.root(idx).height == k + 1) betas.push_back(idx);
    }
    IndexSet beta_set = IndexSet::of(betas);
    if (!check_condition_codim(rs, beta_set) || !check_condition_avoid(rs, lower, beta_set))
      throw std::logic_error("symbolic build: layer conditions fail at height " +
                             std::to_string(k + 1));
    for (int b : betas) {
      if (!check_condition_count(rs, lower, b).ok)
        throw std::logic_error("symbolic build: count condition fails at height " +
                               std::to_string(k + 1));
    }
    build = mat_basis_step(rs, std::move(build), lower, betas, nu);
    if (!saito_check(rs, build.basis, height_layer(rs, I, k + 1)))
      throw std::logic_error("symbolic build: determinant check fails after height " +
                             std::to_string(k + 1));
  }
  return build;
}

}  // namespace idealarr
