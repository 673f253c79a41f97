#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>

#include "idealarr/intlinalg.hpp"
#include "idealarr/lattice.hpp"
#include "idealarr/partition.hpp"

using namespace idealarr;

namespace {

Ideal full_ideal(const RootSystem& rs) { return truncation_ideal(rs, rs.num_roots()); }

// Whitney-sum oracle over all subsets, workable for |I| <= 10.
std::vector<long long> whitney_charpoly(const RootSystem& rs, const Ideal& I) {
  const auto idx = I.members.indices();
  const int n = static_cast<int>(idx.size());
  std::vector<long long> c(rs.rank() + 1, 0);
  for (unsigned long long bits = 0; bits < (1ull << n); ++bits) {
    SpanBasis sb(rs.rank());
    int size = 0;
    for (int k = 0; k < n; ++k) {
      if (!(bits >> k & 1)) continue;
      ++size;
      const Root& r = rs.root(idx[k]);
      sb.add(std::vector<long long>(r.coeffs.begin(), r.coeffs.end()));
    }
    c[rs.rank() - sb.rank()] += size % 2 ? -1 : 1;
  }
  return c;
}

}  // namespace

TEST_CASE("span closure") {
  auto a2 = build_root_system({Series::A, 2});
  auto f = span_closure(a2, IndexSet::of({0, 1}));
  CHECK(f.dim == 0);
  CHECK(f.loc == IndexSet::of({0, 1, 2}));

  auto single = span_closure(a2, IndexSet::of({1}));
  CHECK(single.dim == 1);
  CHECK(single.loc == IndexSet::of({1}));

  auto b2 = build_root_system({Series::B, 2});
  auto g = span_closure(b2, IndexSet::of({b2.index_of({0, 1}), b2.index_of({1, 2})}));
  CHECK(g.dim == 0);
  CHECK(g.loc.count() == 4);

  auto v = span_closure(a2, IndexSet{});
  CHECK(v.dim == 2);
  CHECK(v.loc.empty());
}

TEST_CASE("lattice of the full A2 arrangement") {
  auto a2 = build_root_system({Series::A, 2});
  auto flats = build_lattice(a2, full_ideal(a2));
  REQUIRE(flats.size() == 5);
  CHECK(flats[0].dim == 2);
  CHECK(flats[0].mu == 1);
  for (int i = 1; i <= 3; ++i) {
    CHECK(flats[i].dim == 1);
    CHECK(flats[i].mu == -1);
    CHECK(flats[i].loc.count() == 1);
  }
  CHECK(flats[4].dim == 0);
  CHECK(flats[4].mu == 2);
  CHECK(flats[4].loc.count() == 3);
}

TEST_CASE("lattice of the empty and Boolean arrangements") {
  auto a2 = build_root_system({Series::A, 2});
  auto none = build_lattice(a2, truncation_ideal(a2, 0));
  REQUIRE(none.size() == 1);
  CHECK(none[0].mu == 1);
  CHECK(none[0].dim == 2);

  auto boolean = build_lattice(a2, truncation_ideal(a2, 2));
  REQUIRE(boolean.size() == 4);
  CHECK(boolean[3].mu == 1);
}

TEST_CASE("characteristic polynomials") {
  auto a2 = build_root_system({Series::A, 2});
  CHECK(characteristic_polynomial(a2, full_ideal(a2)) == std::vector<long long>{2, -3, 1});
  CHECK(characteristic_polynomial(a2, truncation_ideal(a2, 0)) ==
        std::vector<long long>{0, 0, 1});

  auto b2 = build_root_system({Series::B, 2});
  auto I = ideal_closure(b2, IndexSet::of({b2.index_of({1, 1})}));
  CHECK(characteristic_polynomial(b2, I) == std::vector<long long>{2, -3, 1});
}

TEST_CASE("charpoly factors through the dual partition on small systems") {
  for (auto t : {RootSystemType{Series::A, 3}, {Series::B, 3}, {Series::C, 3},
                 {Series::G, 2}, {Series::D, 4}}) {
    auto rs = build_root_system(t);
    for (const auto& I : enumerate_ideals(rs)) {
      CHECK(characteristic_polynomial(rs, I) == poly_from_roots(ideal_exponents(rs, I)));
    }
  }
}

TEST_CASE("chi(1) vanishes for nonempty ideals") {
  auto rs = build_root_system({Series::B, 3});
  for (const auto& I : enumerate_ideals(rs)) {
    if (I.members.empty()) continue;
    auto c = characteristic_polynomial(rs, I);
    long long at1 = 0;
    for (long long coeff : c) at1 += coeff;
    CHECK(at1 == 0);
  }
}

TEST_CASE("Whitney sum cross-check") {
  for (auto t : {RootSystemType{Series::A, 3}, {Series::B, 3}, {Series::G, 2}}) {
    auto rs = build_root_system(t);
    for (const auto& I : enumerate_ideals(rs)) {
      if (I.size() > 10) continue;
      CHECK(characteristic_polynomial(rs, I) == whitney_charpoly(rs, I));
    }
  }
}

TEST_CASE("restriction flats") {
  auto a2 = build_root_system({Series::A, 2});
  auto full = full_ideal(a2);
  auto r = restriction(a2, full, a2.index_of({1, 1}));
  REQUIRE(r.size() == 1);
  CHECK(r[0].dim == 0);

  auto boolean = truncation_ideal(a2, 2);
  CHECK(restriction(a2, boolean, 1).size() == 1);

  auto b2 = build_root_system({Series::B, 2});
  CHECK(restriction(b2, full_ideal(b2), b2.highest_root_index).size() == 1);
  CHECK_THROWS_AS(restriction(a2, boolean, 2), std::invalid_argument);
}

TEST_CASE("poincare polynomials") {
  CHECK(poincare_polynomial({1, 2}) == std::vector<long long>{1, 3, 2});
  CHECK(poincare_polynomial({0, 0}) == std::vector<long long>{1, 0, 0});
  CHECK(poincare_polynomial({1, 5}) == std::vector<long long>{1, 6, 5});
}

TEST_CASE("poincare from charpoly matches the product form") {
  for (auto t : {RootSystemType{Series::A, 3}, {Series::B, 3}, {Series::G, 2}}) {
    auto rs = build_root_system(t);
    for (const auto& I : enumerate_ideals(rs)) {
      auto chi = characteristic_polynomial(rs, I);
      auto exps = ideal_exponents(rs, I);
      CHECK(poincare_from_charpoly(chi) == poincare_polynomial(exps));
    }
  }
}

TEST_CASE("poly_from_roots") {
  CHECK(poly_from_roots({1, 2}) == std::vector<long long>{2, -3, 1});
  CHECK(poly_from_roots({}) == std::vector<long long>{1});
  CHECK(poly_from_roots({0, 0}) == std::vector<long long>{0, 0, 1});
}

TEST_CASE("point counts over small fields") {
  auto a2 = build_root_system({Series::A, 2});
  PointCountOracle oracle(a2, {5, 7, 11});
  CHECK(oracle.count_complement(full_ideal(a2), 5) == 12);
  CHECK(oracle.count_complement(truncation_ideal(a2, 0), 5) == 25);
  CHECK(oracle.count_complement(full_ideal(a2), 7) == 30);
  CHECK_THROWS_AS(oracle.count_complement(full_ideal(a2), 13), std::invalid_argument);
}

TEST_CASE("point-count charpoly agrees with the lattice on rank <= 3") {
  for (auto t : {RootSystemType{Series::A, 2}, {Series::B, 2}, {Series::G, 2},
                 {Series::A, 3}, {Series::B, 3}, {Series::C, 3}}) {
    auto rs = build_root_system(t);
    PointCountOracle oracle(rs, default_oracle_primes(rs, rs.rank() + 1));
    for (const auto& I : enumerate_ideals(rs)) {
      CHECK(oracle.charpoly(I) == characteristic_polynomial(rs, I));
    }
  }
}

TEST_CASE("oracle rejects bad primes") {
  auto b3 = build_root_system({Series::B, 3});
  CHECK(PointCountOracle::prime_bound(b3) == 24);
  CHECK_THROWS_WITH_AS(PointCountOracle(b3, {5, 29, 31, 37}),
                       doctest::Contains("prime 5"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(PointCountOracle(b3, {33, 29, 31, 37}),
                       doctest::Contains("33"), std::invalid_argument);
  auto a2 = build_root_system({Series::A, 2});
  PointCountOracle two(a2, {5, 7});
  CHECK_THROWS(two.charpoly(truncation_ideal(a2, 0)));
}

TEST_CASE("oracle histogram construction is thread-safe") {
  auto b3 = build_root_system({Series::B, 3});
  PointCountOracle serial(b3, default_oracle_primes(b3, 4), 1);
  PointCountOracle parallel(b3, default_oracle_primes(b3, 4), 4);
  auto I = full_ideal(b3);
  CHECK(serial.charpoly(I) == parallel.charpoly(I));
}

TEST_CASE("default primes exceed the bound and count") {
  auto f4 = build_root_system({Series::F, 4});
  auto primes = default_oracle_primes(f4, 5);
  REQUIRE(primes.size() == 5);
  CHECK(primes[0] > PointCountOracle::prime_bound(f4));
  CHECK(primes[0] == 193);
}
