#pragma once

#include <unordered_map>
#include <vector>

#include "idealarr/indexset.hpp"
#include "idealarr/rootposet.hpp"
#include "idealarr/rootsys.hpp"

namespace idealarr {

// Intersection-lattice element, keyed by the set of hyperplanes through it.
struct Flat {
  IndexSet loc;
  int dim = 0;
  long long mu = 0;
};

// Closure of a root set inside the full positive system: loc collects every
// positive root lying in the rational span. Empty input gives the ambient
// space V.
Flat span_closure(const RootSystem& rs, const IndexSet& roots);

// All flats of the arrangement indexed by I, with exact Mobius values.
// Flats are keyed by localization within I, sorted by codimension then set
// order; the ambient space V (mu = 1) comes first.
std::vector<Flat> build_lattice(const RootSystem& rs, const Ideal& I);

// chi(t) = sum mu(X) t^{dim X}, coefficients ascending: index k holds t^k.
std::vector<long long> characteristic_polynomial(const RootSystem& rs, const Ideal& I);
std::vector<long long> characteristic_polynomial(const RootSystem& rs,
                                                 const std::vector<Flat>& flats);

// Distinct flats {K cap H_alpha : K in A(I), K != H_alpha}, localized in I.
std::vector<Flat> restriction(const RootSystem& rs, const Ideal& I, int alpha);

// prod (1 + d_i t), ascending coefficients.
std::vector<long long> poincare_polynomial(const std::vector<int>& exps);

// (-t)^l chi(-1/t) as a polynomial in t: p_k = (-1)^k c_{l-k}.
std::vector<long long> poincare_from_charpoly(const std::vector<long long>& charpoly);

// Monic prod (t - r), ascending coefficients.
std::vector<long long> poly_from_roots(const std::vector<int>& roots);

// Evaluates the complement-point count of A(I) over F_q by full projective
// enumeration, then recovers chi by Lagrange interpolation. One histogram
// of hyperplane-vanishing patterns is built per prime and shared by every
// ideal of the system.
class PointCountOracle {
 public:
  PointCountOracle(const RootSystem& rs, std::vector<long long> primes, int jobs = 1);

  long long count_complement(const Ideal& I, long long q) const;
  std::vector<long long> charpoly(const Ideal& I) const;

  const std::vector<long long>& primes() const { return primes_; }

  // Structural prime floor for the system: 2 * (max root coefficient) * l!.
  static long long prime_bound(const RootSystem& rs);

 private:
  const RootSystem& rs_;
  std::vector<long long> primes_;
  std::vector<std::unordered_map<IndexSet, long long, IndexSetHash>> histograms_;
};

// First count primes strictly above prime_bound(rs).
std::vector<long long> default_oracle_primes(const RootSystem& rs, int count);

}  // namespace idealarr
