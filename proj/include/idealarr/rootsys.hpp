#ifndef IDEALARR_ROOTSYS_HPP
#define IDEALARR_ROOTSYS_HPP

#include <gmpxx.h>

#include <string>
#include <unordered_map>
#include <vector>

namespace idealarr {

enum class Series : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

// One irreducible factor. Reducible systems are handled as lists of these;
// all per-root data lives inside a single factor.
struct RootSystemType {
  Series series;
  int rank;

  std::string str() const;
};

// Parses "F4" or a product like "A2xA1" into its irreducible factors.
std::vector<RootSystemType> parse_type(const std::string& text);

// A root as an integer coefficient vector over the simple basis.
struct Root {
  std::vector<int> coeffs;
  int height = 0;  // sum of coeffs

  bool operator==(const Root& o) const { return coeffs == o.coeffs; }
};

class RootSystem {
public:
  RootSystemType rtype;
  std::vector<std::vector<int>> cartan;          // cartan[i][j] = 2(a_i,a_j)/(a_j,a_j)
  std::vector<Root> positive_roots;              // canonical order: height, then lex
  std::vector<std::vector<mpq_class>> gram;      // symmetrized, long roots squared 2
  int highest_root_index = -1;
  int coxeter_number = 0;
  std::string alias_note;                        // e.g. "D3 is isomorphic to A3"

  int rank() const { return rtype.rank; }
  int num_roots() const { return static_cast<int>(positive_roots.size()); }
  const Root& root(int i) const { return positive_roots[i]; }

  // Index of a positive root given by its coefficient vector, or -1.
  int index_of(const std::vector<int>& coeffs) const;

  // <alpha, alpha_j^vee> for alpha given over the simple basis.
  int pairing(const std::vector<int>& coeffs, int j) const;

private:
  friend RootSystem build_root_system(const RootSystemType& rtype);
  std::unordered_map<std::string, int> index_;
};

// Generates the positive system by height-by-height root-string closure
// from the Cartan matrix, then self-checks the result.
RootSystem build_root_system(const RootSystemType& rtype);

// Symmetric bilinear form, normalized so long roots have squared length 2.
mpq_class inner_product(const RootSystem& rs, const Root& a, const Root& b);

// Simple reflection s_i(a) = a - <a, alpha_i^vee> alpha_i.
Root reflect(const RootSystem& rs, const Root& a, int i);

const Root& highest_root(const RootSystem& rs);

}  // namespace idealarr

#endif
