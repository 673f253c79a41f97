#include "idealarr/poly.hpp"

#include <numeric>
#include <stdexcept>

namespace idealarr {

bool GrlexLess::operator()(const Monomial& a, const Monomial& b) const {
  const int da = std::accumulate(a.begin(), a.end(), 0);
  const int db = std::accumulate(b.begin(), b.end(), 0);
  if (da != db) return da < db;
  return a < b;
}

Poly Poly::constant(int nvars, const mpq_class& c) {
  Poly p(nvars);
  p.add_term(Monomial(nvars, 0), c);
  return p;
}

Poly Poly::variable(int nvars, int i) {
  if (i < 0 || i >= nvars) throw std::invalid_argument("Poly: variable index out of range");
  Poly p(nvars);
  Monomial m(nvars, 0);
  m[i] = 1;
  p.add_term(m, 1);
  return p;
}

Poly Poly::linear_form(const std::vector<int>& coeffs) {
  Poly p(static_cast<int>(coeffs.size()));
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] == 0) continue;
    Monomial m(coeffs.size(), 0);
    m[i] = 1;
    p.add_term(m, coeffs[i]);
  }
  return p;
}

int Poly::total_degree() const {
  if (terms_.empty()) return -1;
  const Monomial& top = terms_.rbegin()->first;
  return std::accumulate(top.begin(), top.end(), 0);
}

bool Poly::homogeneous() const {
  if (terms_.empty()) return true;
  const int d = total_degree();
  for (const auto& [m, _] : terms_) {
    if (std::accumulate(m.begin(), m.end(), 0) != d) return false;
  }
  return true;
}

void Poly::add_term(const Monomial& m, const mpq_class& c) {
  if (static_cast<int>(m.size()) != nvars_)
    throw std::invalid_argument("Poly: monomial arity mismatch");
  if (c == 0) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
    return;
  }
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

mpq_class Poly::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? mpq_class(0) : it->second;
}

mpq_class Poly::leading_coeff() const {
  if (terms_.empty()) return 0;
  return terms_.rbegin()->second;
}

Poly Poly::operator-() const {
  Poly p(nvars_);
  for (const auto& [m, c] : terms_) p.terms_.emplace(m, -c);
  return p;
}

Poly Poly::operator+(const Poly& o) const {
  Poly p = *this;
  p += o;
  return p;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly& Poly::operator+=(const Poly& o) {
  if (nvars_ != o.nvars_) throw std::invalid_argument("Poly: arity mismatch");
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Poly Poly::operator*(const Poly& o) const {
  if (nvars_ != o.nvars_) throw std::invalid_argument("Poly: arity mismatch");
  Poly p(nvars_);
  Monomial m(nvars_);
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : o.terms_) {
      for (int i = 0; i < nvars_; ++i) m[i] = ma[i] + mb[i];
      p.add_term(m, ca * cb);
    }
  }
  return p;
}

Poly Poly::scaled(const mpq_class& c) const {
  Poly p(nvars_);
  if (c == 0) return p;
  for (const auto& [m, k] : terms_) p.terms_.emplace(m, k * c);
  return p;
}

std::string Poly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const mpq_class& c = it->second;
    if (!out.empty()) out += c >= 0 ? " + " : " - ";
    else if (c < 0) out += "-";
    const mpq_class a = abs(c);
    std::string mono;
    for (int i = 0; i < nvars_; ++i) {
      const int e = it->first[i];
      if (e == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += "x" + std::to_string(i + 1);
      if (e > 1) mono += "^" + std::to_string(e);
    }
    if (mono.empty()) {
      out += a.get_str();
    } else {
      if (a != 1) out += a.get_str() + "*";
      out += mono;
    }
  }
  return out;
}

namespace {

int pivot_variable(const Poly& linear) {
  if (linear.total_degree() != 1 || !linear.homogeneous())
    throw std::invalid_argument("expected a homogeneous linear form");
  int best = linear.nvars();
  for (const auto& [m, _] : linear.terms()) {
    for (int i = 0; i < linear.nvars(); ++i) {
      if (m[i] == 1) best = std::min(best, i);
    }
  }
  return best;
}

}  // namespace

std::optional<Poly> divide_by_linear(const Poly& f, const Poly& linear) {
  const int s = pivot_variable(linear);
  Monomial xs(f.nvars(), 0);
  xs[s] = 1;
  const mpq_class a = linear.coeff(xs);
  Poly q(f.nvars());
  Poly r = f;
  while (true) {
    // peel the top x_s-degree of the remainder
    int dmax = 0;
    for (const auto& [m, _] : r.terms()) dmax = std::max(dmax, m[s]);
    if (dmax == 0) break;
    Poly t(f.nvars());
    for (const auto& [m, c] : r.terms()) {
      if (m[s] != dmax) continue;
      Monomial lower = m;
      lower[s] -= 1;
      t.add_term(lower, c / a);
    }
    q += t;
    r = r - t * linear;
  }
  if (!r.is_zero()) return std::nullopt;
  return q;
}

Poly reduce_mod_linear(const Poly& f, const Poly& linear) {
  const int s = pivot_variable(linear);
  Monomial xs(f.nvars(), 0);
  xs[s] = 1;
  const mpq_class a = linear.coeff(xs);
  // x_s = -(linear - a*x_s)/a
  Poly sub(f.nvars());
  for (const auto& [m, c] : linear.terms()) {
    if (m == xs) continue;
    sub.add_term(m, -c / a);
  }
  std::vector<Poly> powers{Poly::constant(f.nvars(), 1)};
  Poly out(f.nvars());
  for (const auto& [m, c] : f.terms()) {
    const int e = m[s];
    while (static_cast<int>(powers.size()) <= e) powers.push_back(powers.back() * sub);
    Monomial base = m;
    base[s] = 0;
    Poly mono(f.nvars());
    mono.add_term(base, c);
    out += mono * powers[e];
  }
  return out;
}

Poly poly_determinant(const std::vector<std::vector<Poly>>& m) {
  const int n = static_cast<int>(m.size());
  if (n == 0) throw std::invalid_argument("determinant of an empty matrix");
  const int nvars = m[0][0].nvars();
  for (const auto& row : m) {
    if (static_cast<int>(row.size()) != n)
      throw std::invalid_argument("determinant needs a square matrix");
  }
  if (n == 1) return m[0][0];
  Poly det(nvars);
  std::vector<std::vector<Poly>> minor(n - 1, std::vector<Poly>(n - 1));
  for (int j = 0; j < n; ++j) {
    if (m[0][j].is_zero()) continue;
    for (int r = 1; r < n; ++r) {
      int cc = 0;
      for (int c = 0; c < n; ++c) {
        if (c == j) continue;
        minor[r - 1][cc++] = m[r][c];
      }
    }
    Poly term = m[0][j] * poly_determinant(minor);
    det += j % 2 ? -term : term;
  }
  return det;
}

}  // namespace idealarr
