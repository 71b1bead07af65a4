#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace qdt {

// Laurent polynomial in v = L^(1/2) with exact rational coefficients.
//
// Stored densely as integer numerators over one positive common denominator:
// coefficient of v^(low + i) is num[i] / den. Canonical: no leading or
// trailing zero numerators, gcd(content(num), den) = 1, and the zero
// polynomial has an empty numerator vector.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(long constant);  // NOLINT(google-explicit-constructor)
  explicit LaurentPoly(const mpq_class& constant);

  static LaurentPoly monomial(const mpq_class& coeff, int exponent);
  static LaurentPoly v(int exponent = 1) { return monomial(1, exponent); }
  static LaurentPoly from_terms(const std::map<int, mpq_class>& terms);
  static LaurentPoly from_integers(int low, std::vector<mpz_class> coeffs);
  // Parses text such as "v^-2 + 1 + 3/2*v^3" or "-v + 2".
  static LaurentPoly parse(std::string_view text);

  bool is_zero() const { return num_.empty(); }
  // True iff every coefficient is an integer.
  bool is_integral() const { return den_ == 1; }
  bool is_monomial() const { return num_.size() == 1; }
  // Lowest / highest exponent with a nonzero coefficient. Zero polynomial: 0.
  int valuation() const { return low_; }
  int degree() const { return is_zero() ? 0 : low_ + static_cast<int>(num_.size()) - 1; }

  mpq_class coefficient(int exponent) const;
  mpq_class leading_coefficient() const;
  // (exponent, coefficient) pairs with nonzero coefficient, ascending.
  std::vector<std::pair<int, mpq_class>> terms() const;
  const std::vector<mpz_class>& numerators() const { return num_; }
  const mpz_class& denominator() const { return den_; }

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);

  LaurentPoly scaled(const mpq_class& c) const;
  // Multiplication by v^k.
  LaurentPoly shifted(int k) const;
  // Substitution v -> sign * v^n for n >= 1, sign = +-1.
  LaurentPoly substitute(int n, int sign) const;
  // v -> v^-1.
  LaurentPoly bar() const;
  // Adams operation psi_n with -v a line element: v^k -> (-1)^((n+1)k) v^(nk).
  LaurentPoly adams(int n) const;

  // Exact quotient by a nonzero divisor, if it exists in Q[v, v^-1].
  std::optional<LaurentPoly> divide_exact(const LaurentPoly& divisor) const;

  mpq_class evaluate(const mpq_class& v) const;

  bool operator==(const LaurentPoly& o) const {
    return low_ == o.low_ && den_ == o.den_ && num_ == o.num_;
  }

  // "v^-2 + 1 + v^2"; "0" for the zero polynomial.
  std::string to_string() const;

 private:
  void normalize();

  int low_ = 0;
  std::vector<mpz_class> num_;
  mpz_class den_ = 1;
};

// Monic-normalized gcd over Q of the polynomial parts (monomial factors
// ignored), returned primitive over Z with positive leading coefficient and
// nonzero constant term. gcd(0, 0) = 0.
LaurentPoly polynomial_gcd(const LaurentPoly& a, const LaurentPoly& b);

// Rational content c such that p / c is a primitive integer polynomial with
// positive leading coefficient. Zero for the zero polynomial.
mpq_class content(const LaurentPoly& p);

// Gaussian binomial [N, n] in L = v^2. Throws InvalidInput when n > N.
LaurentPoly qbinom(int N, int n);

// [P^(n-1)]_vir = v^(n-1) + v^(n-3) + ... + v^(1-n). Throws for n = 0.
LaurentPoly proj_vir(int n);

// [P^(n-1)] = 1 + L + ... + L^(n-1).
LaurentPoly proj_space(int n);

}  // namespace qdt
