#ifndef IDEALARR_INDEXSET_HPP
#define IDEALARR_INDEXSET_HPP

#include <array>
#include <cstdint>
#include <cstddef>
#include <functional>
#include <vector>

namespace idealarr {

// Fixed-width set of root indices. Two 64-bit words cover every Weyl type
// (E8 has 120 positive roots).
class IndexSet {
public:
  static constexpr int capacity = 128;

  IndexSet() : w_{0, 0} {}

  static IndexSet full(int n) {
    IndexSet s;
    for (int i = 0; i < n; ++i) s.set(i);
    return s;
  }

  static IndexSet of(const std::vector<int>& indices) {
    IndexSet s;
    for (int i : indices) s.set(i);
    return s;
  }

  void set(int i) { w_[i >> 6] |= (std::uint64_t{1} << (i & 63)); }
  void reset(int i) { w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1; }

  int count() const {
    return __builtin_popcountll(w_[0]) + __builtin_popcountll(w_[1]);
  }
  bool empty() const { return w_[0] == 0 && w_[1] == 0; }

  IndexSet operator|(const IndexSet& o) const { return {w_[0] | o.w_[0], w_[1] | o.w_[1]}; }
  IndexSet operator&(const IndexSet& o) const { return {w_[0] & o.w_[0], w_[1] & o.w_[1]}; }
  IndexSet minus(const IndexSet& o) const { return {w_[0] & ~o.w_[0], w_[1] & ~o.w_[1]}; }
  IndexSet& operator|=(const IndexSet& o) { w_[0] |= o.w_[0]; w_[1] |= o.w_[1]; return *this; }
  IndexSet& operator&=(const IndexSet& o) { w_[0] &= o.w_[0]; w_[1] &= o.w_[1]; return *this; }

  bool operator==(const IndexSet& o) const { return w_[0] == o.w_[0] && w_[1] == o.w_[1]; }
  bool operator!=(const IndexSet& o) const { return !(*this == o); }
  bool operator<(const IndexSet& o) const {
    if (w_[1] != o.w_[1]) return w_[1] < o.w_[1];
    return w_[0] < o.w_[0];
  }

  bool subset_of(const IndexSet& o) const {
    return (w_[0] & ~o.w_[0]) == 0 && (w_[1] & ~o.w_[1]) == 0;
  }
  bool disjoint_with(const IndexSet& o) const {
    return (w_[0] & o.w_[0]) == 0 && (w_[1] & o.w_[1]) == 0;
  }

  std::vector<int> indices() const {
    std::vector<int> out;
    out.reserve(count());
    for (int word = 0; word < 2; ++word) {
      std::uint64_t v = w_[word];
      while (v) {
        out.push_back(64 * word + __builtin_ctzll(v));
        v &= v - 1;
      }
    }
    return out;
  }

  std::size_t hash() const {
    std::uint64_t h = w_[0] * 0x9e3779b97f4a7c15ull;
    h ^= w_[1] + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    return static_cast<std::size_t>(h);
  }

private:
  IndexSet(std::uint64_t lo, std::uint64_t hi) : w_{lo, hi} {}
  std::array<std::uint64_t, 2> w_;
};

struct IndexSetHash {
  std::size_t operator()(const IndexSet& s) const { return s.hash(); }
};

}  // namespace idealarr

#endif
