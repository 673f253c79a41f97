#include "idealarr/intlinalg.hpp"

#include <numeric>
#include <stdexcept>

namespace idealarr {

namespace {

using int128 = __int128;

long long vec_gcd(const std::vector<long long>& v) {
  long long g = 0;
  for (long long x : v) g = std::gcd(g, x < 0 ? -x : x);
  return g;
}

}  // namespace

int bareiss_rank(std::vector<std::vector<long long>> m) {
  if (m.empty()) return 0;
  const int rows = static_cast<int>(m.size());
  const int cols = static_cast<int>(m[0].size());
  int rank = 0;
  long long prev = 1;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r) {
      if (m[r][col] != 0) { pivot = r; break; }
    }
    if (pivot < 0) continue;
    std::swap(m[rank], m[pivot]);
    const long long p = m[rank][col];
    for (int r = rank + 1; r < rows; ++r) {
      for (int c = col + 1; c < cols; ++c) {
        int128 t = int128(p) * m[r][c] - int128(m[r][col]) * m[rank][c];
        m[r][c] = static_cast<long long>(t / prev);
      }
      m[r][col] = 0;
    }
    prev = p;
    ++rank;
  }
  return rank;
}

std::vector<long long> SpanBasis::reduce(const std::vector<long long>& v) const {
  if (static_cast<int>(v.size()) != ncols_)
    throw std::invalid_argument("SpanBasis: vector length does not match column count");
  std::vector<long long> r = v;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const int p = pivots_[i];
    if (r[p] == 0) continue;
    const long long rp = r[p];
    const long long bp = rows_[i][p];
    std::vector<long long> next(ncols_);
    for (int c = 0; c < ncols_; ++c) {
      int128 t = int128(bp) * r[c] - int128(rp) * rows_[i][c];
      if (t > int128(INT64_MAX) || t < int128(INT64_MIN))
        throw std::overflow_error("SpanBasis: entry overflow");
      next[c] = static_cast<long long>(t);
    }
    long long g = vec_gcd(next);
    if (g > 1) {
      for (long long& x : next) x /= g;
    }
    r = std::move(next);
  }
  return r;
}

bool SpanBasis::add(const std::vector<long long>& v) {
  std::vector<long long> r = reduce(v);
  int pivot = -1;
  for (int c = 0; c < ncols_; ++c) {
    if (r[c] != 0) { pivot = c; break; }
  }
  if (pivot < 0) return false;
  // Keep the basis fully reduced: clear the new pivot column from every
  // stored row so that a single reduction pass decides membership.
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (rows_[i][pivot] == 0) continue;
    const long long a = rows_[i][pivot];
    const long long p = r[pivot];
    std::vector<long long> next(ncols_);
    for (int c = 0; c < ncols_; ++c) {
      int128 t = int128(p) * rows_[i][c] - int128(a) * r[c];
      if (t > int128(INT64_MAX) || t < int128(INT64_MIN))
        throw std::overflow_error("SpanBasis: entry overflow");
      next[c] = static_cast<long long>(t);
    }
    long long g = vec_gcd(next);
    if (g > 1) {
      for (long long& x : next) x /= g;
    }
    rows_[i] = std::move(next);
  }
  std::size_t pos = 0;
  while (pos < pivots_.size() && pivots_[pos] < pivot) ++pos;
  rows_.insert(rows_.begin() + pos, std::move(r));
  pivots_.insert(pivots_.begin() + pos, pivot);
  return true;
}

bool SpanBasis::contains(const std::vector<long long>& v) const {
  std::vector<long long> r = reduce(v);
  for (long long x : r) {
    if (x != 0) return false;
  }
  return true;
}

}  // namespace idealarr
