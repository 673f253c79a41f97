#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "idealarr/intlinalg.hpp"

using idealarr::bareiss_rank;
using idealarr::SpanBasis;
using vec = std::vector<long long>;

TEST_CASE("bareiss rank on small matrices") {
  CHECK(bareiss_rank({}) == 0);
  CHECK(bareiss_rank({{0, 0}, {0, 0}}) == 0);
  CHECK(bareiss_rank({{1, 2}, {2, 4}}) == 1);
  CHECK(bareiss_rank({{1, 2}, {3, 4}}) == 2);
  CHECK(bareiss_rank({{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}}) == 3);
  CHECK(bareiss_rank({{1, 0, 1}, {0, 1, 1}, {1, 1, 2}}) == 2);
  CHECK(bareiss_rank({{1, 1, 1}}) == 1);
  CHECK(bareiss_rank({{1}, {2}, {3}}) == 1);
}

TEST_CASE("span basis membership and rank") {
  SpanBasis sb(3);
  CHECK(sb.rank() == 0);
  CHECK(sb.contains({0, 0, 0}));
  CHECK(sb.add({1, 0, 1}));
  CHECK_FALSE(sb.add({2, 0, 2}));
  CHECK(sb.add({0, 1, 1}));
  CHECK(sb.rank() == 2);
  CHECK(sb.contains({1, 1, 2}));
  CHECK(sb.contains({3, -2, 1}));
  CHECK_FALSE(sb.contains({0, 0, 1}));
  CHECK(sb.add({0, 0, 1}));
  CHECK(sb.rank() == 3);
  CHECK(sb.contains({7, -5, 11}));
}

TEST_CASE("span basis handles later rows with earlier pivots") {
  SpanBasis sb(3);
  CHECK(sb.add({0, 0, 1}));
  CHECK(sb.add({0, 1, 1}));
  CHECK(sb.add({1, 1, 1}));
  CHECK(sb.rank() == 3);
  CHECK(sb.contains({1, 0, 0}));
  CHECK(sb.contains({5, 4, 3}));
}

TEST_CASE("span basis rejects dimension mismatch") {
  SpanBasis sb(2);
  CHECK_THROWS(sb.add({1, 2, 3}));
}
