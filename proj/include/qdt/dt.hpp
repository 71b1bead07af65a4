#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "qdt/dim_vector.hpp"
#include "qdt/quiver.hpp"
#include "qdt/rational_motive.hpp"
#include "qdt/series.hpp"

namespace qdt {

using MotiveMap = std::map<DimVector, RationalMotive, GradedLexLess>;

// Motivic DT invariants Omega_d for all nonzero d <= box (of the given slope
// when a stability is present).
struct DTResult {
  Quiver quiver;
  std::optional<StabilityWeights> stability;
  std::optional<mpq_class> slope;
  DimVector box;
  MotiveMap omega;
  std::map<DimVector, bool, GradedLexLess> integral;

  bool operator==(const DTResult&) const = default;
};

// [R_d] / [G_d].
RationalMotive stack_motive(const Quiver& q, const DimVector& d);

// Motives s_d = [R_d^(theta-ss)] / [G_d] via the Harder-Narasimhan recursion
//   [R_d]/[G_d] = sum over HN types d = d^1 + ... + d^s (strictly decreasing
//                 slopes) of L^(-sum_{k<l} (d^l, d^k)) prod_k s_(d^k),
// memoized across calls. Not thread-safe.
class SemistableMotives {
 public:
  SemistableMotives(Quiver q, StabilityWeights theta);

  const RationalMotive& operator()(const DimVector& d);
  const Quiver& quiver() const { return quiver_; }
  const StabilityWeights& stability() const { return theta_; }

 private:
  // Sum over decompositions of e into parts with strictly decreasing slopes,
  // all below `bound`, of twist * prod s. Empty decomposition of 0 gives 1.
  const RationalMotive& tail(const DimVector& e, const mpq_class& bound);

  Quiver quiver_;
  StabilityWeights theta_;
  std::map<DimVector, RationalMotive> semistable_;
  std::map<std::pair<DimVector, mpq_class>, RationalMotive> tail_;
};

RationalMotive ss_stack_motive(const Quiver& q, const StabilityWeights& theta, const DimVector& d,
                               SemistableMotives& memo);
RationalMotive ss_stack_motive(const Quiver& q, const StabilityWeights& theta, const DimVector& d);

// Generating series A = 1 + sum v^((d,d)) s_d t^d over the slope class
// (all d for trivial stability). Validates symmetry / genericity on the box.
TruncatedSeries stack_series(const Quiver& q, const std::optional<StabilityWeights>& stability,
                             const std::optional<mpq_class>& mu, const DimVector& box,
                             Exec exec = Exec::parallel);

// Omega = (v - v^-1) Log(A). Throws SymmetryViolation (trivial stability on a
// non-symmetric box), GenericityViolation, or EmptySlopeClass.
DTResult dt_series(const Quiver& q, const std::optional<StabilityWeights>& stability,
                   const std::optional<mpq_class>& mu, const DimVector& box, Exec exec = Exec::parallel);

// Exp(sum Omega_d / (v - v^-1) t^d); reproduces stack_series on the box.
TruncatedSeries sym_reconstruction(const DTResult& r, Exec exec = Exec::parallel);

// ---- audits ----------------------------------------------------------------

struct IntegralityReport {
  std::vector<DimVector> violations;
  bool ok() const { return violations.empty(); }
};

enum class Parity { none, even, odd, mixed };
std::string to_string(Parity p);

struct PositivityEntry {
  DimVector d;
  bool nonnegative = true;
  Parity parity = Parity::none;
  bool ok() const { return nonnegative && parity != Parity::mixed; }
};

struct PositivityReport {
  std::vector<PositivityEntry> entries;
  bool ok() const;
  std::vector<DimVector> violations() const;
};

struct UnimodalityEntry {
  DimVector d;
  bool palindromic = true;
  bool unimodal = true;
  bool ok() const { return palindromic && unimodal; }
};

struct UnimodalityReport {
  std::vector<UnimodalityEntry> entries;
  bool ok() const;
};

IntegralityReport check_integrality(const DTResult& r);
// Both throw NonIntegralError when some Omega_d is not in Z[v, v^-1].
PositivityReport check_positivity(const DTResult& r);
UnimodalityReport check_unimodular(const DTResult& r);

// Per-polynomial checks used by the reports.
Parity exponent_parity(const LaurentPoly& p);
bool is_palindromic(const LaurentPoly& p);
bool is_unimodal(const LaurentPoly& p);

// dim M_d = 1 - (d, d).
long moduli_dimension(const Quiver& q, const DimVector& d);

// Betti numbers b_k, k = exponent + dim_m, of an integral Omega_d whose
// exponents all have the parity of dim_m. Throws NonIntegralError or
// ParityViolation (also for negative coefficients). Omega = 0 gives {}.
std::map<int, mpz_class> ic_betti(const RationalMotive& omega, long dim_m);

// Omega_d at v = 1. Throws NonIntegralError.
mpz_class euler_specialization(const RationalMotive& omega);

// ---- framed and local invariants -------------------------------------------

// Framed series Exp(sum v [P^(f.d - 1)] Omega_d t^d), or with normalized = true
// Exp(sum [P^(f.d - 1)]_vir Omega_d t^d), which needs every f_i even.
TruncatedSeries framed_series(const DTResult& dt, const DimVector& f, bool normalized,
                              Exec exec = Exec::parallel);
TruncatedSeries framed_series(const Quiver& q, const std::optional<StabilityWeights>& stability,
                              const std::optional<mpq_class>& mu, const DimVector& f, const DimVector& box,
                              bool normalized, Exec exec = Exec::parallel);

// DT of the Ext-quiver under trivial stability with v -> v^-1 applied.
TruncatedSeries local_dt(const ExtQuiverSpec& spec, const DimVector& box, Exec exec = Exec::parallel);

// ---- nullcone ----------------------------------------------------------------

// -(d,d)/2 + sum_i (i,i) d_i / 2 - |d|. Throws SymmetryViolation for a
// non-symmetric quiver.
mpq_class nullcone_bound(const Quiver& q, const DimVector& d);

// -sum_{k<l} (d^l, d^k) - sum_i sum_k (d^k_i)^2 for an ordered thin
// decomposition (unit vectors summing to d).
mpq_class thin_decomposition_value(const Quiver& q, const DimVector& d, const std::vector<DimVector>& parts);

// All distinct orderings of the unit vectors making up d.
std::vector<std::vector<DimVector>> thin_decompositions(const DimVector& d);

}  // namespace qdt
