#include <omp.h>

#include "qdt/dt.hpp"
#include "qdt/errors.hpp"

namespace qdt {

namespace {

std::vector<std::pair<DimVector, const RationalMotive*>> entries_of(const DTResult& r) {
  std::vector<std::pair<DimVector, const RationalMotive*>> out;
  out.reserve(r.omega.size());
  for (const auto& [d, w] : r.omega) out.emplace_back(d, &w);
  return out;
}

void require_integral(const DTResult& r, const char* what) {
  for (const auto& [d, w] : r.omega) {
    if (!w.is_integral()) {
      throw NonIntegralError(std::string(what) + " needs integral DT invariants, but Omega" + d.to_string() +
                             " = " + w.to_string());
    }
  }
}

// Coefficients from valuation to degree, stepping by 2 when all exponents
// share one parity.
std::vector<mpq_class> coefficient_sequence(const LaurentPoly& p) {
  std::vector<mpq_class> seq;
  if (p.is_zero()) return seq;
  const Parity par = exponent_parity(p);
  const int step = par == Parity::mixed ? 1 : 2;
  for (int e = p.valuation(); e <= p.degree(); e += step) seq.push_back(p.coefficient(e));
  return seq;
}

}  // namespace

std::string to_string(Parity p) {
  switch (p) {
    case Parity::none: return "none";
    case Parity::even: return "even";
    case Parity::odd: return "odd";
    case Parity::mixed: return "mixed";
  }
  return "none";
}

Parity exponent_parity(const LaurentPoly& p) {
  bool even = false;
  bool odd = false;
  for (const auto& [e, c] : p.terms()) {
    (e % 2 == 0 ? even : odd) = true;
  }
  if (even && odd) return Parity::mixed;
  if (even) return Parity::even;
  if (odd) return Parity::odd;
  return Parity::none;
}

bool is_palindromic(const LaurentPoly& p) {
  const auto seq = coefficient_sequence(p);
  for (std::size_t i = 0; i < seq.size() / 2; ++i) {
    if (seq[i] != seq[seq.size() - 1 - i]) return false;
  }
  return true;
}

bool is_unimodal(const LaurentPoly& p) {
  const auto seq = coefficient_sequence(p);
  std::size_t i = 1;
  while (i < seq.size() && seq[i] >= seq[i - 1]) ++i;
  while (i < seq.size() && seq[i] <= seq[i - 1]) ++i;
  return i >= seq.size();
}

bool PositivityReport::ok() const {
  for (const auto& e : entries) {
    if (!e.ok()) return false;
  }
  return true;
}

std::vector<DimVector> PositivityReport::violations() const {
  std::vector<DimVector> out;
  for (const auto& e : entries) {
    if (!e.ok()) out.push_back(e.d);
  }
  return out;
}

bool UnimodalityReport::ok() const {
  for (const auto& e : entries) {
    if (!e.ok()) return false;
  }
  return true;
}

IntegralityReport check_integrality(const DTResult& r) {
  IntegralityReport rep;
  for (const auto& [d, w] : r.omega) {
    if (!w.is_integral()) rep.violations.push_back(d);
  }
  return rep;
}

PositivityReport check_positivity(const DTResult& r) {
  require_integral(r, "positivity check");
  const auto items = entries_of(r);
  PositivityReport rep;
  rep.entries.resize(items.size());
  const auto n = static_cast<std::ptrdiff_t>(items.size());
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    const auto& [d, w] = items[static_cast<std::size_t>(i)];
    PositivityEntry e;
    e.d = d;
    for (const auto& [exp, c] : w->numerator().terms()) {
      if (c < 0) e.nonnegative = false;
    }
    e.parity = exponent_parity(w->numerator());
    rep.entries[static_cast<std::size_t>(i)] = std::move(e);
  }
  return rep;
}

UnimodalityReport check_unimodular(const DTResult& r) {
  require_integral(r, "unimodality check");
  const auto items = entries_of(r);
  UnimodalityReport rep;
  rep.entries.resize(items.size());
  const auto n = static_cast<std::ptrdiff_t>(items.size());
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    const auto& [d, w] = items[static_cast<std::size_t>(i)];
    UnimodalityEntry e;
    e.d = d;
    e.palindromic = is_palindromic(w->numerator());
    e.unimodal = is_unimodal(w->numerator());
    rep.entries[static_cast<std::size_t>(i)] = std::move(e);
  }
  return rep;
}

long moduli_dimension(const Quiver& q, const DimVector& d) { return 1 - euler_form(q, d, d); }

std::map<int, mpz_class> ic_betti(const RationalMotive& omega, long dim_m) {
  if (!omega.is_integral()) {
    throw NonIntegralError("Betti extraction needs an integral Laurent polynomial, got " + omega.to_string());
  }
  std::map<int, mpz_class> betti;
  for (const auto& [e, c] : omega.numerator().terms()) {
    if ((e - dim_m) % 2 != 0) {
      throw ParityViolation("exponent " + std::to_string(e) + " of " + omega.to_string() +
                            " has the wrong parity for a moduli space of dimension " + std::to_string(dim_m) +
                            "; either there are no stable points or the class is not pure");
    }
    if (c < 0) {
      throw ParityViolation("coefficient " + c.get_str() + " at v^" + std::to_string(e) + " of " +
                            omega.to_string() + " is negative; not a Betti polynomial");
    }
    betti[static_cast<int>(e + dim_m)] = c.get_num();
  }
  return betti;
}

mpz_class euler_specialization(const RationalMotive& omega) {
  if (!omega.is_integral()) {
    throw NonIntegralError("numerical DT invariant needs an integral Laurent polynomial, got " + omega.to_string());
  }
  mpz_class s = 0;
  for (const auto& c : omega.numerator().numerators()) s += c;
  return s;
}

}  // namespace qdt
