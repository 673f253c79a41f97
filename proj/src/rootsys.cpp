#include "idealarr/rootsys.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>
#include <stdexcept>

#include "idealarr/intlinalg.hpp"

namespace idealarr {

namespace {

std::string coeff_key(const std::vector<int>& c) {
  std::string k;
  k.reserve(c.size() * 3);
  for (int x : c) {
    k += std::to_string(x);
    k += ',';
  }
  return k;
}

void validate_type(const RootSystemType& t) {
  const int l = t.rank;
  switch (t.series) {
    case Series::A:
      if (l < 1) throw std::invalid_argument("series A requires rank >= 1");
      break;
    case Series::B:
      if (l < 2) throw std::invalid_argument("series B requires rank >= 2");
      break;
    case Series::C:
      if (l < 2) throw std::invalid_argument("series C requires rank >= 2");
      break;
    case Series::D:
      if (l < 3) throw std::invalid_argument("series D requires rank >= 3");
      break;
    case Series::E:
      if (l < 6 || l > 8) throw std::invalid_argument("series E requires rank in {6,7,8}");
      break;
    case Series::F:
      if (l != 4) throw std::invalid_argument("series F requires rank 4");
      break;
    case Series::G:
      if (l != 2) throw std::invalid_argument("series G requires rank 2");
      break;
  }
}

// Bourbaki labelings: B has its last simple root short, C its last long,
// D forks at node rank-2, E hangs node 2 off node 4, F4 is long-long-short-short,
// G2 is short-long.
std::vector<std::vector<int>> cartan_matrix(const RootSystemType& t) {
  const int l = t.rank;
  std::vector<std::vector<int>> a(l, std::vector<int>(l, 0));
  for (int i = 0; i < l; ++i) a[i][i] = 2;
  auto bond = [&](int i, int j) { a[i][j] = -1; a[j][i] = -1; };
  switch (t.series) {
    case Series::A:
      for (int i = 0; i + 1 < l; ++i) bond(i, i + 1);
      break;
    case Series::B:
      for (int i = 0; i + 1 < l; ++i) bond(i, i + 1);
      a[l - 2][l - 1] = -2;
      break;
    case Series::C:
      for (int i = 0; i + 1 < l; ++i) bond(i, i + 1);
      a[l - 1][l - 2] = -2;
      break;
    case Series::D:
      for (int i = 0; i + 1 < l - 1; ++i) bond(i, i + 1);
      bond(l - 3, l - 1);
      break;
    case Series::E:
      bond(0, 2);
      bond(1, 3);
      for (int i = 2; i + 1 < l; ++i) bond(i, i + 1);
      break;
    case Series::F:
      bond(0, 1);
      bond(1, 2);
      bond(2, 3);
      a[1][2] = -2;
      break;
    case Series::G:
      a[0][1] = -1;
      a[1][0] = -3;
      break;
  }
  return a;
}

// Squared lengths of the simple roots, long roots normalized to 2.
std::vector<mpq_class> root_lengths(const RootSystemType& t) {
  const int l = t.rank;
  std::vector<mpq_class> d(l, mpq_class(2));
  switch (t.series) {
    case Series::B:
      d[l - 1] = 1;
      break;
    case Series::C:
      for (int i = 0; i + 1 < l; ++i) d[i] = 1;
      break;
    case Series::F:
      d[2] = 1;
      d[3] = 1;
      break;
    case Series::G:
      d[0] = mpq_class(2, 3);
      break;
    default:
      break;
  }
  return d;
}

void self_check(const RootSystem& rs) {
  const int l = rs.rank();
  const int n = rs.num_roots();
  // height-1 layer is exactly the simple system
  int simples = 0;
  for (const Root& r : rs.positive_roots) {
    if (r.height == 1) ++simples;
  }
  if (simples != l)
    throw std::logic_error("root generation: height-1 layer is not the simple system");
  // count matches |Phi+| = l*h/2
  if (2 * n != l * rs.coxeter_number)
    throw std::logic_error("root generation: count disagrees with rank * Coxeter number / 2");
  // closed under simple reflections
  for (const Root& r : rs.positive_roots) {
    for (int i = 0; i < l; ++i) {
      Root img = reflect(rs, r, i);
      std::vector<int> neg(img.coeffs);
      for (int& x : neg) x = -x;
      if (rs.index_of(img.coeffs) < 0 && rs.index_of(neg) < 0)
        throw std::logic_error("root generation: set not closed under simple reflections");
    }
  }
  // every non-simple positive root can be lowered by some simple root
  for (const Root& r : rs.positive_roots) {
    if (r.height == 1) continue;
    bool lowered = false;
    for (int i = 0; i < l && !lowered; ++i) {
      std::vector<int> down = r.coeffs;
      down[i] -= 1;
      lowered = rs.index_of(down) >= 0;
    }
    if (!lowered)
      throw std::logic_error("root generation: non-simple root with no lowering simple root");
  }
  // the top-height root is the unique maximum of the root poset
  const Root& top = rs.positive_roots[rs.highest_root_index];
  for (const Root& r : rs.positive_roots) {
    for (int i = 0; i < l; ++i) {
      if (r.coeffs[i] > top.coeffs[i])
        throw std::logic_error("root generation: highest root is not dominant");
    }
  }
}

}  // namespace

std::string RootSystemType::str() const {
  return std::string(1, static_cast<char>(series)) + std::to_string(rank);
}

std::vector<RootSystemType> parse_type(const std::string& text) {
  std::vector<RootSystemType> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    char s = static_cast<char>(std::toupper(static_cast<unsigned char>(text[pos])));
    if (s < 'A' || s > 'G' || s == 'X')
      throw std::invalid_argument("bad root system type '" + text + "': unknown series at '" +
                                  text.substr(pos) + "'");
    ++pos;
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (start == pos)
      throw std::invalid_argument("bad root system type '" + text + "': missing rank");
    RootSystemType t{static_cast<Series>(s), std::stoi(text.substr(start, pos - start))};
    validate_type(t);
    out.push_back(t);
    if (pos < text.size()) {
      if (std::tolower(static_cast<unsigned char>(text[pos])) != 'x')
        throw std::invalid_argument("bad root system type '" + text +
                                    "': expected 'x' between factors");
      ++pos;
      if (pos == text.size())
        throw std::invalid_argument("bad root system type '" + text + "': trailing 'x'");
    }
  }
  if (out.empty()) throw std::invalid_argument("empty root system type");
  return out;
}

int RootSystem::index_of(const std::vector<int>& coeffs) const {
  auto it = index_.find(coeff_key(coeffs));
  return it == index_.end() ? -1 : it->second;
}

int RootSystem::pairing(const std::vector<int>& coeffs, int j) const {
  int v = 0;
  for (int i = 0; i < rank(); ++i) v += coeffs[i] * cartan[i][j];
  return v;
}

RootSystem build_root_system(const RootSystemType& rtype) {
  validate_type(rtype);
  RootSystem rs;
  rs.rtype = rtype;
  rs.cartan = cartan_matrix(rtype);
  const int l = rtype.rank;

  const std::vector<mpq_class> d = root_lengths(rtype);
  rs.gram.assign(l, std::vector<mpq_class>(l));
  for (int i = 0; i < l; ++i) {
    for (int j = 0; j < l; ++j) {
      rs.gram[i][j] = mpq_class(rs.cartan[i][j]) * d[j] / 2;
      rs.gram[i][j].canonicalize();
    }
  }
  for (int i = 0; i < l; ++i) {
    for (int j = 0; j < l; ++j) {
      if (rs.gram[i][j] != rs.gram[j][i])
        throw std::logic_error("gram matrix not symmetric: bad Cartan/symmetrizer pair");
    }
  }

  // Height-by-height closure. A candidate a + a_i is a root iff
  // p - <a, a_i^vee> > 0 with p the depth of the a_i-string below a.
  std::map<std::vector<int>, int> seen;
  std::vector<std::vector<int>> current;  // coeff vectors at the working height
  for (int i = 0; i < l; ++i) {
    std::vector<int> simple(l, 0);
    simple[i] = 1;
    seen.emplace(simple, 1);
    current.push_back(simple);
  }
  while (!current.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& a : current) {
      for (int i = 0; i < l; ++i) {
        std::vector<int> up = a;
        up[i] += 1;
        if (seen.count(up)) continue;
        int p = 0;
        std::vector<int> down = a;
        while (true) {
          down[i] -= 1;
          bool neg = false;
          for (int x : down) neg = neg || x < 0;
          if (neg || !seen.count(down)) break;
          ++p;
        }
        int pair = 0;
        for (int k = 0; k < l; ++k) pair += a[k] * rs.cartan[k][i];
        if (p - pair > 0) {
          seen.emplace(up, 1);
          next.push_back(up);
        }
      }
    }
    current = std::move(next);
  }

  rs.positive_roots.reserve(seen.size());
  for (const auto& [coeffs, _] : seen) {
    Root r;
    r.coeffs = coeffs;
    r.height = 0;
    for (int x : coeffs) r.height += x;
    rs.positive_roots.push_back(std::move(r));
  }
  std::sort(rs.positive_roots.begin(), rs.positive_roots.end(),
            [](const Root& a, const Root& b) {
              if (a.height != b.height) return a.height < b.height;
              return a.coeffs < b.coeffs;
            });
  for (int i = 0; i < rs.num_roots(); ++i)
    rs.index_.emplace(coeff_key(rs.positive_roots[i].coeffs), i);

  int top = 0;
  for (int i = 1; i < rs.num_roots(); ++i) {
    if (rs.positive_roots[i].height > rs.positive_roots[top].height) top = i;
  }
  rs.highest_root_index = top;
  rs.coxeter_number = rs.positive_roots[top].height + 1;

  if (rtype.series == Series::D && rtype.rank == 3)
    rs.alias_note = "D3 is isomorphic to A3";

  self_check(rs);
  return rs;
}

mpq_class inner_product(const RootSystem& rs, const Root& a, const Root& b) {
  const int l = rs.rank();
  if (static_cast<int>(a.coeffs.size()) != l || static_cast<int>(b.coeffs.size()) != l)
    throw std::invalid_argument("inner_product: dimension mismatch");
  mpq_class acc(0);
  for (int i = 0; i < l; ++i) {
    if (a.coeffs[i] == 0) continue;
    for (int j = 0; j < l; ++j) {
      if (b.coeffs[j] == 0) continue;
      acc += mpq_class(a.coeffs[i]) * mpq_class(b.coeffs[j]) * rs.gram[i][j];
    }
  }
  acc.canonicalize();
  return acc;
}

Root reflect(const RootSystem& rs, const Root& a, int i) {
  if (i < 0 || i >= rs.rank()) throw std::invalid_argument("reflect: simple index out of range");
  Root out = a;
  const int pair = rs.pairing(a.coeffs, i);
  out.coeffs[i] -= pair;
  out.height = 0;
  for (int x : out.coeffs) out.height += x;
  return out;
}

const Root& highest_root(const RootSystem& rs) {
  return rs.positive_roots[rs.highest_root_index];
}

}  // namespace idealarr
