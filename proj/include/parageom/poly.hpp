#pragma once

#include "parageom/scalar.hpp"

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace parageom {

/// Monomial as sorted (variable, exponent) pairs; exponents are positive.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(const std::string& var, unsigned exponent = 1);

  const std::vector<std::pair<std::string, unsigned>>& factors() const { return f_; }
  unsigned degree() const;
  unsigned degree_in(const std::string& var) const;
  bool is_one() const { return f_.empty(); }
  bool divides(const Monomial& other) const;

  Monomial operator*(const Monomial& o) const;
  /// Requires divides(o, *this).
  Monomial operator/(const Monomial& o) const;
  Monomial without(const std::string& var) const;

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.f_ == b.f_; }
  friend bool operator<(const Monomial& a, const Monomial& b) { return a.f_ < b.f_; }

  std::string str() const;

 private:
  std::vector<std::pair<std::string, unsigned>> f_;
};

/// Sparse multivariate polynomial over the rationals. Terms are kept in the
/// storage order of Monomial::operator< with no zero coefficients.
class Poly {
 public:
  struct Term {
    Monomial mono;
    Scalar coef;
  };

  Poly() = default;
  Poly(const Scalar& c);                     // NOLINT: implicit on purpose
  Poly(long c) : Poly(Scalar(c)) {}          // NOLINT
  Poly(int c) : Poly(Scalar(c)) {}           // NOLINT
  static Poly var(const std::string& name);
  static Poly monomial(const Monomial& m, const Scalar& c);

  const std::vector<Term>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  bool is_constant() const;
  /// Throws std::domain_error if not constant.
  Scalar constant_value() const;
  /// Coefficient of the empty monomial.
  Scalar constant_term() const;
  Scalar coeff(const Monomial& m) const;
  int degree() const;  // -1 for the zero polynomial
  unsigned degree_in(const std::string& var) const;
  std::vector<std::string> variables() const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly& operator*=(const Scalar& c);
  Poly operator-() const;
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Scalar& c) { return a *= c; }
  friend Poly operator*(const Scalar& c, Poly a) { return a *= c; }
  friend bool operator==(const Poly& a, const Poly& b);
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  Poly pow(unsigned e) const;

  /// Substitutes polynomials for variables (simultaneously).
  Poly substitute(const std::map<std::string, Poly>& values) const;
  Poly substitute(const std::map<std::string, Scalar>& values) const;
  /// den^k * p(var = num/den) where k is the degree of p in var.
  Poly substitute_fraction(const std::string& var, const Poly& num, const Poly& den) const;
  /// Throws if a variable is left unbound.
  Scalar evaluate(const std::map<std::string, Scalar>& values) const;

  /// Makes the leading coefficient (storage order, last term) positive and
  /// the content 1; used for pretty comparisons only.
  Poly primitive() const;

  std::string str() const;

 private:
  void normalize();
  std::vector<Term> t_;
};

/// Parses sums of products of rationals, variables, powers and parentheses,
/// e.g. "-2/3*v3 + (a7+a6)*v1 - a7^2". Throws std::invalid_argument.
Poly parse_poly(std::string_view text);

}  // namespace parageom
