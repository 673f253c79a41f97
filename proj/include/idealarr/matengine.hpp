#pragma once

#include <vector>

#include "idealarr/rootposet.hpp"
#include "idealarr/rootsys.hpp"

namespace idealarr {

// Codimension condition: the added roots are linearly independent.
bool check_condition_codim(const RootSystem& rs, const IndexSet& betas);

// Avoidance condition: no hyperplane of the lower layer contains the
// intersection of the added ones, i.e. no lower root lies in their span.
bool check_condition_avoid(const RootSystem& rs, const Ideal& I_k, const IndexSet& betas);

struct CountCheck {
  int lhs = 0;  // |A'| - |A''|
  int k = 0;    // Ht(beta) - 1
  bool ok = false;
};

// Restriction-count condition, one added root at a time.
CountCheck check_condition_count(const RootSystem& rs, const Ideal& I_k, int beta);

struct MatLayer {
  int layer = 0;  // height being added
  int d = 0;      // top exponent before the step
  int p = 0;      // multiplicity of d
  int q = 0;      // number of added roots
  bool cond_codim = false;
  bool cond_avoid = false;
  bool cond_count = false;
  bool q_le_p = false;
  bool exponents_match = false;  // layer exponents equal the dual partition
  std::vector<int> exponents;    // after the step, ascending
};

struct MatCertificate {
  bool ok = false;
  int failed_layer = 0;  // first failing layer, 0 when ok
  std::vector<MatLayer> layers;
  std::vector<int> exponents;
};

// Layer-by-layer induction from the empty arrangement; every condition is
// re-checked from scratch at every step.
MatCertificate run_induction(const RootSystem& rs, const Ideal& I);

}  // namespace idealarr
