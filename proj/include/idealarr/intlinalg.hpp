#ifndef IDEALARR_INTLINALG_HPP
#define IDEALARR_INTLINALG_HPP

#include <cstdint>
#include <vector>

namespace idealarr {

// Rank of an integer matrix by fraction-free (Bareiss) elimination.
// Exact: every intermediate entry is a minor of the input matrix.
int bareiss_rank(std::vector<std::vector<long long>> m);

// Incremental row-echelon basis over Q for integer vectors, kept with
// integer entries (rows are gcd-reduced after each combination step).
// Supports exact span-membership tests.
class SpanBasis {
public:
  explicit SpanBasis(int ncols) : ncols_(ncols) {}

  // Adds v to the span. Returns true if the rank grew.
  bool add(const std::vector<long long>& v);

  bool contains(const std::vector<long long>& v) const;

  int rank() const { return static_cast<int>(rows_.size()); }
  int ncols() const { return ncols_; }

private:
  // Reduces v against the echelon rows; the result has zeros in every
  // pivot column. Scaling is irrelevant to membership, so each step
  // gcd-normalizes to keep entries small.
  std::vector<long long> reduce(const std::vector<long long>& v) const;

  int ncols_;
  std::vector<std::vector<long long>> rows_;  // sorted by pivot column
  std::vector<int> pivots_;
};

}  // namespace idealarr

#endif
