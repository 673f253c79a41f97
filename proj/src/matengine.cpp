#include "idealarr/matengine.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "idealarr/intlinalg.hpp"
#include "idealarr/lattice.hpp"
#include "idealarr/partition.hpp"

namespace idealarr {

bool check_condition_codim(const RootSystem& rs, const IndexSet& betas) {
  int height = -1;
  for (int b : betas.indices()) {
    if (height < 0) height = rs.root(b).height;
    if (rs.root(b).height != height)
      throw std::invalid_argument("condition check: roots are not from a single height layer");
  }
  SpanBasis sb(rs.rank());
  int rank = 0;
  for (int b : betas.indices()) {
    const Root& r = rs.root(b);
    rank += sb.add(std::vector<long long>(r.coeffs.begin(), r.coeffs.end()));
  }
  return rank == static_cast<int>(betas.count());
}

bool check_condition_avoid(const RootSystem& rs, const Ideal& I_k, const IndexSet& betas) {
  SpanBasis sb(rs.rank());
  for (int b : betas.indices()) {
    const Root& r = rs.root(b);
    sb.add(std::vector<long long>(r.coeffs.begin(), r.coeffs.end()));
  }
  for (int a : I_k.members.indices()) {
    const Root& r = rs.root(a);
    if (sb.contains(std::vector<long long>(r.coeffs.begin(), r.coeffs.end()))) return false;
  }
  return true;
}

CountCheck check_condition_count(const RootSystem& rs, const Ideal& I_k, int beta) {
  CountCheck c;
  c.k = rs.root(beta).height - 1;
  std::set<IndexSet> flats;
  for (int h : I_k.members.indices()) flats.insert(span_closure(rs, IndexSet::of({h, beta})).loc);
  c.lhs = I_k.size() - static_cast<int>(flats.size());
  c.ok = c.lhs == c.k;
  return c;
}

MatCertificate run_induction(const RootSystem& rs, const Ideal& I) {
  MatCertificate cert;
  cert.exponents.assign(rs.rank(), 0);
  cert.ok = true;
  const int m = ideal_height(rs, I);
  for (int k = 0; k < m; ++k) {
    IndexSet betas;
    for (int idx : I.members.indices()) {
      if (rs.root(idx).height == k + 1) betas.set(idx);
    }
    const Ideal lower = height_layer(rs, I, k);

    MatLayer layer;
    layer.layer = k + 1;
    layer.d = *std::max_element(cert.exponents.begin(), cert.exponents.end());
    layer.p = static_cast<int>(
        std::count(cert.exponents.begin(), cert.exponents.end(), layer.d));
    layer.q = static_cast<int>(betas.count());
    layer.q_le_p = layer.q <= layer.p;
    layer.cond_codim = check_condition_codim(rs, betas);
    layer.cond_avoid = check_condition_avoid(rs, lower, betas);
    layer.cond_count = true;
    for (int b : betas.indices()) {
      if (!check_condition_count(rs, lower, b).ok) layer.cond_count = false;
    }

    // MAT step: q copies of the top exponent d become d+1
    std::vector<int> next = cert.exponents;
    std::sort(next.begin(), next.end());
    for (int i = 0; i < layer.q; ++i) next[next.size() - 1 - i] = layer.d + 1;
    std::sort(next.begin(), next.end());
    layer.exponents = next;
    layer.exponents_match = next == ideal_exponents(rs, height_layer(rs, I, k + 1));

    const bool pass = layer.q_le_p && layer.cond_codim && layer.cond_avoid &&
                      layer.cond_count && layer.exponents_match && layer.q > 0;
    cert.layers.push_back(std::move(layer));
    if (!pass && cert.ok) {
      cert.ok = false;
      cert.failed_layer = k + 1;
    }
    cert.exponents = std::move(next);
  }
  if (cert.ok && cert.exponents != ideal_exponents(rs, I)) {
    cert.ok = false;
    cert.failed_layer = m;
  }
  return cert;
}

}  // namespace idealarr
