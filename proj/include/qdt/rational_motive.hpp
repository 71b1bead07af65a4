#pragma once

#include <optional>
#include <span>
#include <string>

#include <gmpxx.h>

#include "qdt/cyclotomic.hpp"
#include "qdt/laurent_poly.hpp"

namespace qdt {

// Element of Q(v), v = L^(1/2), kept as a reduced fraction.
//
// The denominator is stored factored as prod_k Phi_k(v)^(e_k) * residual,
// where residual is a primitive integer polynomial with positive leading
// coefficient and nonzero constant term that has no cyclotomic factor
// (it is 1 for everything the engine builds itself). Monomials and rational
// content live in the numerator, so the expanded denominator has integer
// coefficients, positive leading coefficient and valuation 0. The numerator
// is coprime to the denominator, which makes the representation canonical.
class RationalMotive {
 public:
  RationalMotive() = default;
  RationalMotive(long c) : num_(c) {}  // NOLINT(google-explicit-constructor)
  RationalMotive(LaurentPoly p) : num_(std::move(p)) {}  // NOLINT(google-explicit-constructor)

  // Arbitrary fraction; throws InvalidInput for a zero denominator.
  static RationalMotive fraction(const LaurentPoly& num, const LaurentPoly& den);
  // num / prod Phi_k^e_k, reduced.
  static RationalMotive over_cyclotomics(LaurentPoly num, CycloExponents den);

  bool is_zero() const { return num_.is_zero(); }
  // Denominator is 1.
  bool is_laurent() const { return cyclo_.empty() && residual_ == LaurentPoly(1); }
  // Element of Z[v, v^-1].
  bool is_integral() const { return is_laurent() && num_.is_integral(); }
  std::optional<LaurentPoly> as_laurent() const;

  const LaurentPoly& numerator() const { return num_; }
  LaurentPoly denominator() const;
  const CycloExponents& cyclotomic_denominator() const { return cyclo_; }
  const LaurentPoly& residual_denominator() const { return residual_; }

  RationalMotive operator-() const;
  RationalMotive& operator+=(const RationalMotive& o);
  RationalMotive& operator-=(const RationalMotive& o) { return *this += -o; }
  RationalMotive& operator*=(const RationalMotive& o);
  RationalMotive& operator/=(const RationalMotive& o) { return *this *= o.inverse(); }
  friend RationalMotive operator+(RationalMotive a, const RationalMotive& b) { return a += b; }
  friend RationalMotive operator-(RationalMotive a, const RationalMotive& b) { return a -= b; }
  friend RationalMotive operator*(RationalMotive a, const RationalMotive& b) { return a *= b; }
  friend RationalMotive operator/(RationalMotive a, const RationalMotive& b) { return a /= b; }

  // Throws InvalidInput for zero.
  RationalMotive inverse() const;
  RationalMotive scaled(const mpq_class& c) const;
  RationalMotive shifted(int k) const;
  // Ring endomorphism with psi_n(-v) = (-v)^n.
  RationalMotive adams(int n) const;
  // v -> v^-1.
  RationalMotive bar() const;

  // Value at L = q. Motives in Q(L) are evaluated directly; otherwise q must
  // be the square of a rational and v = +sqrt(q) is used.
  mpq_class evaluate(const mpq_class& q) const;

  bool operator==(const RationalMotive& o) const {
    return num_ == o.num_ && cyclo_ == o.cyclo_ && residual_ == o.residual_;
  }

  std::string to_string() const;

 private:
  // Divides out Phi_k factors shared by numerator and cyclotomic denominator.
  void cancel_cyclotomic();
  // Full reduction against a non-trivial residual denominator.
  void reduce_residual();

  LaurentPoly num_;
  CycloExponents cyclo_;
  LaurentPoly residual_ = 1;
};

// Sum with a single common-denominator pass.
RationalMotive sum(std::span<const RationalMotive> terms);

}  // namespace qdt
