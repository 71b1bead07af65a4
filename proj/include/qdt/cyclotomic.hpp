#pragma once

#include <utility>
#include <vector>

#include "qdt/laurent_poly.hpp"

namespace qdt {

// Sorted (k, multiplicity) pairs standing for prod_k Phi_k(v)^multiplicity.
using CycloExponents = std::vector<std::pair<int, int>>;

int euler_phi(int k);

// Phi_k(v). Cached; safe to call from several threads.
const LaurentPoly& cyclotomic(int k);

// Factorization of v^(2n) - 1 = L^n - 1.
CycloExponents factor_L_power_minus_one(int n);

// Image of Phi_k under the Adams operation psi_n, as sign * prod Phi_j^m.
struct CycloImage {
  int sign = 1;
  CycloExponents factors;
};
const CycloImage& adams_image(int k, int n);

// Pointwise maximum / sum of two exponent lists.
CycloExponents cyclo_max(const CycloExponents& a, const CycloExponents& b);
CycloExponents cyclo_add(const CycloExponents& a, const CycloExponents& b);
// prod Phi_k^e expanded.
LaurentPoly cyclo_expand(const CycloExponents& e);

// Splits p (valuation 0, nonzero) into prod Phi_k^e * rest by trial division.
std::pair<CycloExponents, LaurentPoly> strip_cyclotomic_factors(LaurentPoly p);

}  // namespace qdt
