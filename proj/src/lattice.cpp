#include "idealarr/lattice.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <thread>

#include "idealarr/intlinalg.hpp"

namespace idealarr {

namespace {

std::vector<long long> root_vec(const RootSystem& rs, int k) {
  const Root& r = rs.root(k);
  return std::vector<long long>(r.coeffs.begin(), r.coeffs.end());
}

IndexSet closure_of(const RootSystem& rs, const SpanBasis& sb) {
  IndexSet loc;
  for (int j = 0; j < rs.num_roots(); ++j) {
    if (sb.contains(root_vec(rs, j))) loc.set(j);
  }
  return loc;
}

}  // namespace

Flat span_closure(const RootSystem& rs, const IndexSet& roots) {
  SpanBasis sb(rs.rank());
  for (int k : roots.indices()) {
    if (k >= rs.num_roots()) throw std::invalid_argument("span_closure: root index out of range");
    sb.add(root_vec(rs, k));
  }
  Flat f;
  f.dim = rs.rank() - sb.rank();
  f.loc = roots.empty() ? IndexSet{} : closure_of(rs, sb);
  return f;
}

std::vector<Flat> build_lattice(const RootSystem& rs, const Ideal& I) {
  const int l = rs.rank();
  struct Node {
    IndexSet loc;
    SpanBasis basis;
  };
  // breadth-first by codimension; key = localization within I
  std::vector<std::vector<Node>> levels(l + 1);
  std::unordered_map<IndexSet, long long, IndexSetHash> seen;
  levels[0].push_back(Node{IndexSet{}, SpanBasis(l)});
  seen.emplace(IndexSet{}, 0);
  for (int c = 0; c < l; ++c) {
    for (std::size_t i = 0; i < levels[c].size(); ++i) {
      for (int h : I.members.indices()) {
        if (levels[c][i].loc.test(h)) continue;
        SpanBasis nb = levels[c][i].basis;
        nb.add(root_vec(rs, h));
        IndexSet loc = closure_of(rs, nb) & I.members;
        if (seen.count(loc)) continue;
        seen.emplace(loc, 0);
        levels[c + 1].push_back(Node{loc, std::move(nb)});
      }
    }
  }

  std::vector<Flat> flats;
  for (int c = 0; c <= l; ++c) {
    std::sort(levels[c].begin(), levels[c].end(),
              [](const Node& a, const Node& b) { return a.loc < b.loc; });
    for (const Node& n : levels[c]) flats.push_back(Flat{n.loc, l - c, 0});
  }
  // mu(V) = 1, then mu(X) = -sum over strictly larger flats (smaller loc)
  for (std::size_t i = 0; i < flats.size(); ++i) {
    if (i == 0) {
      flats[i].mu = 1;
      continue;
    }
    long long acc = 0;
    for (std::size_t j = 0; j < i; ++j) {
      if (flats[j].loc != flats[i].loc && flats[j].loc.subset_of(flats[i].loc))
        acc += flats[j].mu;
    }
    flats[i].mu = -acc;
  }
  return flats;
}

std::vector<long long> characteristic_polynomial(const RootSystem& rs, const Ideal& I) {
  return characteristic_polynomial(rs, build_lattice(rs, I));
}

std::vector<long long> characteristic_polynomial(const RootSystem& rs,
                                                 const std::vector<Flat>& flats) {
  std::vector<long long> c(rs.rank() + 1, 0);
  for (const Flat& f : flats) c[f.dim] += f.mu;
  return c;
}

std::vector<Flat> restriction(const RootSystem& rs, const Ideal& I, int alpha) {
  if (!I.members.test(alpha))
    throw std::invalid_argument("restriction: hyperplane not in the arrangement");
  std::map<IndexSet, Flat> out;
  for (int h : I.members.indices()) {
    if (h == alpha) continue;
    Flat f = span_closure(rs, IndexSet::of({h, alpha}));
    f.loc &= I.members;
    out.emplace(f.loc, f);
  }
  std::vector<Flat> flats;
  for (auto& [_, f] : out) flats.push_back(f);
  return flats;
}

std::vector<long long> poincare_polynomial(const std::vector<int>& exps) {
  std::vector<long long> p{1};
  for (int d : exps) {
    std::vector<long long> q(p.size() + 1, 0);
    for (std::size_t i = 0; i < p.size(); ++i) {
      q[i] += p[i];
      q[i + 1] += p[i] * d;
    }
    p = std::move(q);
  }
  return p;
}

std::vector<long long> poincare_from_charpoly(const std::vector<long long>& charpoly) {
  const int l = static_cast<int>(charpoly.size()) - 1;
  std::vector<long long> p(l + 1);
  for (int k = 0; k <= l; ++k) p[k] = (k % 2 ? -1 : 1) * charpoly[l - k];
  return p;
}

std::vector<long long> poly_from_roots(const std::vector<int>& roots) {
  std::vector<long long> p{1};
  for (int r : roots) {
    std::vector<long long> q(p.size() + 1, 0);
    for (std::size_t i = 0; i < p.size(); ++i) {
      q[i] -= p[i] * r;
      q[i + 1] += p[i];
    }
    p = std::move(q);
  }
  return p;
}

long long PointCountOracle::prime_bound(const RootSystem& rs) {
  long long maxcoeff = 1;
  for (const Root& r : rs.positive_roots) {
    for (int c : r.coeffs) maxcoeff = std::max(maxcoeff, static_cast<long long>(c));
  }
  long long fact = 1;
  for (int i = 2; i <= rs.rank(); ++i) fact *= i;
  return 2 * maxcoeff * fact;
}

namespace {

bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::unordered_map<IndexSet, long long, IndexSetHash> vanishing_histogram(const RootSystem& rs,
                                                                          long long q) {
  const int l = rs.rank();
  const int n = rs.num_roots();
  std::unordered_map<IndexSet, long long, IndexSetHash> histo;
  std::vector<long long> x(l, 0);
  // projective representatives: leading coordinate 1, earlier ones 0
  for (int lead = 0; lead < l; ++lead) {
    std::fill(x.begin(), x.end(), 0);
    x[lead] = 1;
    while (true) {
      IndexSet mask;
      for (int j = 0; j < n; ++j) {
        const Root& r = rs.root(j);
        long long v = 0;
        for (int i = lead; i < l; ++i) v += r.coeffs[i] * x[i];
        if (v % q == 0) mask.set(j);
      }
      histo[mask] += 1;
      int i = l - 1;
      while (i > lead && x[i] == q - 1) x[i--] = 0;
      if (i == lead) break;
      x[i] += 1;
    }
  }
  return histo;
}

}  // namespace

PointCountOracle::PointCountOracle(const RootSystem& rs, std::vector<long long> primes, int jobs)
    : rs_(rs), primes_(std::move(primes)) {
  const long long bound = prime_bound(rs);
  for (long long p : primes_) {
    if (!is_prime(p))
      throw std::invalid_argument("point count: " + std::to_string(p) + " is not prime");
    if (p <= bound)
      throw std::invalid_argument("point count: prime " + std::to_string(p) +
                                  " does not exceed the rank bound " + std::to_string(bound));
  }
  histograms_.resize(primes_.size());
  const int nthreads = std::min<int>(std::max(jobs, 1), static_cast<int>(primes_.size()));
  if (nthreads <= 1) {
    for (std::size_t i = 0; i < primes_.size(); ++i)
      histograms_[i] = vanishing_histogram(rs_, primes_[i]);
    return;
  }
  std::vector<std::thread> pool;
  for (int t = 0; t < nthreads; ++t) {
    pool.emplace_back([this, t, nthreads]() {
      for (std::size_t i = t; i < primes_.size(); i += nthreads)
        histograms_[i] = vanishing_histogram(rs_, primes_[i]);
    });
  }
  for (auto& th : pool) th.join();
}

long long PointCountOracle::count_complement(const Ideal& I, long long q) const {
  std::size_t idx = primes_.size();
  for (std::size_t i = 0; i < primes_.size(); ++i) {
    if (primes_[i] == q) idx = i;
  }
  if (idx == primes_.size())
    throw std::invalid_argument("point count: no histogram for q = " + std::to_string(q));
  if (q <= I.size())
    throw std::invalid_argument("point count: prime " + std::to_string(q) +
                                " does not exceed the arrangement size " +
                                std::to_string(I.size()));
  long long total = I.members.empty() ? 1 : 0;  // the origin
  for (const auto& [mask, cnt] : histograms_[idx]) {
    if (mask.disjoint_with(I.members)) total += (q - 1) * cnt;
  }
  return total;
}

std::vector<long long> PointCountOracle::charpoly(const Ideal& I) const {
  const int l = rs_.rank();
  if (static_cast<int>(primes_.size()) < l + 1)
    throw std::invalid_argument("point count: need rank+1 primes for interpolation");
  std::vector<mpq_class> xs, ys;
  for (int i = 0; i <= l; ++i) {
    xs.emplace_back(static_cast<long>(primes_[i]));
    ys.emplace_back(static_cast<long>(count_complement(I, primes_[i])));
  }
  // Lagrange interpolation, coefficients accumulated exactly
  std::vector<mpq_class> acc(l + 1, mpq_class(0));
  for (int i = 0; i <= l; ++i) {
    std::vector<mpq_class> basis{1};
    mpq_class denom(1);
    for (int j = 0; j <= l; ++j) {
      if (j == i) continue;
      std::vector<mpq_class> nb(basis.size() + 1, mpq_class(0));
      for (std::size_t k = 0; k < basis.size(); ++k) {
        nb[k] -= basis[k] * xs[j];
        nb[k + 1] += basis[k];
      }
      basis = std::move(nb);
      denom *= xs[i] - xs[j];
    }
    const mpq_class scale = ys[i] / denom;
    for (std::size_t k = 0; k < basis.size(); ++k) acc[k] += basis[k] * scale;
  }
  std::vector<long long> out(l + 1);
  for (int k = 0; k <= l; ++k) {
    acc[k].canonicalize();
    if (acc[k].get_den() != 1)
      throw std::logic_error("point count: interpolated coefficient is not an integer");
    if (!acc[k].get_num().fits_slong_p())
      throw std::logic_error("point count: interpolated coefficient overflows");
    out[k] = acc[k].get_num().get_si();
  }
  if (out[l] != 1) throw std::logic_error("point count: interpolated polynomial is not monic");
  return out;
}

std::vector<long long> default_oracle_primes(const RootSystem& rs, int count) {
  std::vector<long long> out;
  long long p = PointCountOracle::prime_bound(rs);
  while (static_cast<int>(out.size()) < count) {
    ++p;
    if (is_prime(p)) out.push_back(p);
  }
  return out;
}

}  // namespace idealarr
