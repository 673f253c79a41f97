#pragma once

#include <functional>
#include <vector>

#include "idealarr/lattice.hpp"
#include "idealarr/poly.hpp"
#include "idealarr/rootposet.hpp"
#include "idealarr/rootsys.hpp"

namespace idealarr {

// theta = sum coeffs[i] d/dx_i over the coordinates x_i dual to the simple
// roots, so every positive root is an integer linear form.
struct Derivation {
  std::vector<Poly> coeffs;
  int degree = 0;
};

// theta applied to the linear form with the given root coefficients.
Poly apply_derivation(const Derivation& theta, const std::vector<int>& form);

bool is_logarithmic(const RootSystem& rs, const Derivation& theta, const Ideal& I);

// Basis for an ideal inside the simple layer: x_i d_i for members, d_i for
// the rest, ordered by degree then variable.
std::vector<Derivation> boolean_basis(const RootSystem& rs, const Ideal& I1);

// Picks, for each restriction flat, one lower hyperplane through it; the
// candidate list arrives sorted ascending.
using NuPolicy = std::function<int(const Flat&, const std::vector<int>&)>;
NuPolicy smallest_index_policy();
NuPolicy largest_index_policy();

// Q(A') divided by the chosen hyperplane form of every restriction flat.
Poly b_polynomial(const RootSystem& rs, const Ideal& I_k, int beta, const NuPolicy& nu);

// c[i][j] with top[i](alpha_{beta_j}) congruent to c[i][j] * b_j modulo the
// form of beta_j.
std::vector<std::vector<mpq_class>> c_matrix(const RootSystem& rs,
                                             const std::vector<Derivation>& top,
                                             const std::vector<int>& betas,
                                             const std::vector<Poly>& b_polys);

struct BasisLayer {
  int layer = 0;
  std::vector<int> betas;
  std::vector<Poly> b_polys;
  std::vector<std::vector<mpq_class>> cmat;
};

struct BasisBuild {
  std::vector<Derivation> basis;  // degree ascending
  std::vector<BasisLayer> layers;
};

// One layer of the constructive step: row-reduce the c-matrix, multiply the
// pivot combinations by their new forms, carry the rest.
BasisBuild mat_basis_step(const RootSystem& rs, BasisBuild build, const Ideal& I_k,
                          const std::vector<int>& betas, const NuPolicy& nu);

// det(coefficient matrix) is a nonzero rational multiple of prod of forms?
bool saito_check(const RootSystem& rs, const std::vector<Derivation>& basis, const Ideal& I);

// IDEALARR_RANK_LIMIT when set, else 4.
int default_rank_limit();

BasisBuild build_basis_for_ideal(const RootSystem& rs, const Ideal& I,
                                 const NuPolicy& nu = smallest_index_policy(),
                                 int rank_limit = default_rank_limit());

}  // namespace idealarr
