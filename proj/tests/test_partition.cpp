#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "idealarr/partition.hpp"

using namespace idealarr;

namespace {

Ideal full_ideal(const RootSystem& rs) { return truncation_ideal(rs, rs.num_roots()); }

}  // namespace

TEST_CASE("height distributions") {
  auto a3 = build_root_system({Series::A, 3});
  CHECK(height_distribution(a3, full_ideal(a3)) == std::vector<int>{3, 2, 1});

  auto a2 = build_root_system({Series::A, 2});
  CHECK(height_distribution(a2, truncation_ideal(a2, 0)).empty());

  auto g2 = build_root_system({Series::G, 2});
  CHECK(height_distribution(g2, full_ideal(g2)) == std::vector<int>{2, 1, 1, 1, 1});
}

TEST_CASE("dual partition") {
  CHECK(dual_partition(3, {3, 2, 1}) == std::vector<int>{1, 2, 3});
  CHECK(dual_partition(2, {}) == std::vector<int>{0, 0});
  CHECK(dual_partition(2, {2, 1, 1, 1, 1}) == std::vector<int>{1, 5});
  CHECK(dual_partition(4, {2, 1}) == std::vector<int>{0, 0, 1, 2});
  CHECK_THROWS_AS(dual_partition(3, {1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(dual_partition(2, {3, 1}), std::invalid_argument);
  CHECK_THROWS_AS(dual_partition(3, {2, 0}), std::invalid_argument);
}

TEST_CASE("ideal exponents") {
  auto a2 = build_root_system({Series::A, 2});
  CHECK(ideal_exponents(a2, full_ideal(a2)) == std::vector<int>{1, 2});

  auto b2 = build_root_system({Series::B, 2});
  auto I = ideal_closure(b2, IndexSet::of({b2.index_of({1, 1})}));
  CHECK(ideal_exponents(b2, I) == std::vector<int>{1, 2});

  auto f4 = build_root_system({Series::F, 4});
  CHECK(ideal_exponents(f4, full_ideal(f4)) == std::vector<int>{1, 5, 7, 11});
}

TEST_CASE("full Weyl exponents per system") {
  auto check_full = [](RootSystemType t, std::vector<int> want) {
    auto rs = build_root_system(t);
    CHECK(ideal_exponents(rs, truncation_ideal(rs, rs.num_roots())) == want);
  };
  check_full({Series::A, 3}, {1, 2, 3});
  check_full({Series::B, 3}, {1, 3, 5});
  check_full({Series::C, 4}, {1, 3, 5, 7});
  check_full({Series::D, 4}, {1, 3, 3, 5});
  check_full({Series::G, 2}, {1, 5});
  check_full({Series::E, 6}, {1, 4, 5, 7, 8, 11});
}

TEST_CASE("product exponents") {
  CHECK(product_exponents({{1, 2}, {1}}) == std::vector<int>{1, 1, 2});
  CHECK(product_exponents({{0, 0}, {0}}) == std::vector<int>{0, 0, 0});
  CHECK(product_exponents({{1, 3}, {1, 5}}) == std::vector<int>{1, 1, 3, 5});
}

TEST_CASE("partition and sum invariants over all ideals of small systems") {
  for (auto t : {RootSystemType{Series::A, 3}, {Series::B, 3}, {Series::C, 3},
                 {Series::G, 2}, {Series::D, 4}}) {
    auto rs = build_root_system(t);
    for (const auto& I : enumerate_ideals(rs)) {
      auto dist = height_distribution(rs, I);
      for (std::size_t j = 0; j + 1 < dist.size(); ++j) CHECK(dist[j] >= dist[j + 1]);
      auto exps = ideal_exponents(rs, I);
      CHECK(static_cast<int>(exps.size()) == rs.rank());
      int sum = 0;
      for (int e : exps) sum += e;
      CHECK(sum == I.size());
      int zeros = 0;
      for (int e : exps) zeros += e == 0;
      CHECK(zeros == rs.rank() - (dist.empty() ? 0 : dist[0]));
      CHECK(std::is_sorted(exps.begin(), exps.end()));
    }
  }
}

TEST_CASE("exponent monotonicity under inclusion") {
  auto rs = build_root_system({Series::B, 3});
  auto ideals = enumerate_ideals(rs);
  for (const auto& I : ideals) {
    for (const auto& J : ideals) {
      if (!I.members.subset_of(J.members)) continue;
      auto ei = ideal_exponents(rs, I);
      auto ej = ideal_exponents(rs, J);
      for (int k = 0; k < rs.rank(); ++k) CHECK(ei[k] <= ej[k]);
    }
  }
}

TEST_CASE("full-arrangement exponent symmetry advisory") {
  for (auto t : {RootSystemType{Series::A, 4}, {Series::B, 4}, {Series::D, 4},
                 {Series::F, 4}, {Series::G, 2}, {Series::E, 6}}) {
    auto rs = build_root_system(t);
    auto exps = ideal_exponents(rs, truncation_ideal(rs, rs.num_roots()));
    CHECK(exps.back() == rs.coxeter_number - 1);
    CHECK(exponents_symmetric(exps, rs.coxeter_number));
  }
  CHECK_FALSE(exponents_symmetric({0, 2}, 3));
}
