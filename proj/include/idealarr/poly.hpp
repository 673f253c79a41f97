#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace idealarr {

using Monomial = std::vector<int>;

struct GrlexLess {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

// Sparse multivariate polynomial with exact rational coefficients.
class Poly {
 public:
  Poly() = default;
  explicit Poly(int nvars) : nvars_(nvars) {}
  static Poly constant(int nvars, const mpq_class& c);
  static Poly variable(int nvars, int i);
  static Poly linear_form(const std::vector<int>& coeffs);

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  int total_degree() const;  // -1 for the zero polynomial
  bool homogeneous() const;

  void add_term(const Monomial& m, const mpq_class& c);
  mpq_class coeff(const Monomial& m) const;
  mpq_class leading_coeff() const;
  const std::map<Monomial, mpq_class, GrlexLess>& terms() const { return terms_; }

  Poly operator-() const;
  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly scaled(const mpq_class& c) const;
  Poly& operator+=(const Poly& o);
  bool operator==(const Poly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }
  bool operator!=(const Poly& o) const { return !(*this == o); }

  std::string str() const;

 private:
  int nvars_ = 0;
  std::map<Monomial, mpq_class, GrlexLess> terms_;
};

// Exact quotient of f by a homogeneous linear form, or nothing when the
// division leaves a remainder.
std::optional<Poly> divide_by_linear(const Poly& f, const Poly& linear);

// Normal form of f modulo a linear form: the variable of smallest index
// with a nonzero coefficient is substituted away.
Poly reduce_mod_linear(const Poly& f, const Poly& linear);

Poly poly_determinant(const std::vector<std::vector<Poly>>& m);

}  // namespace idealarr
