#pragma once

#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "qdt/dim_vector.hpp"
#include "qdt/quiver.hpp"

namespace qdt {

// F_q for q in {2, 3, 4}, elements encoded 0..q-1 with table arithmetic.
// F_4 = F_2[a]/(a^2 + a + 1) with a encoded as 2.
class FiniteField {
 public:
  explicit FiniteField(int q);

  int order() const { return q_; }
  int add(int a, int b) const { return add_[static_cast<std::size_t>(a * q_ + b)]; }
  int mul(int a, int b) const { return mul_[static_cast<std::size_t>(a * q_ + b)]; }
  int neg(int a) const;
  int inv(int a) const;

 private:
  int q_;
  std::vector<int> add_;
  std::vector<int> mul_;
};

struct FFConfig {
  int q = 2;
  int max_total_dim = 3;
  // Largest number of representations any count may enumerate.
  std::uint64_t enumeration_limit = 10'000'000;
};

// |R_d(F_q)| = q^(sum a_ij d_i d_j); cross-checked by enumeration when small.
std::uint64_t count_reps(const Quiver& q, const DimVector& d, const FFConfig& cfg);
// Literal enumeration of all representations.
std::uint64_t count_reps_by_enumeration(const Quiver& q, const DimVector& d, const FFConfig& cfg);

// |G_d(F_q)| = prod_i prod_{k<d_i} (q^d_i - q^k).
std::uint64_t count_gl(const DimVector& d, const FFConfig& cfg);
// Counts invertible matrices by Gaussian elimination.
std::uint64_t count_gl_by_enumeration(const DimVector& d, const FFConfig& cfg);

// Number of theta-semistable points of R_d(F_q): no subrepresentation of
// dimension vector d' has slope(d') > slope(d). Exhaustive over graded
// subspaces.
std::uint64_t count_semistable(const Quiver& q, const StabilityWeights& theta, const DimVector& d,
                               const FFConfig& cfg);

struct OracleComparison {
  std::uint64_t count = 0;
  mpq_class motive_eval;
  bool match = false;
};

// evaluate(s_d * [G_d], L = q) against count_semistable.
OracleComparison compare_semistable(const Quiver& q, const StabilityWeights& theta, const DimVector& d,
                                    const FFConfig& cfg);
bool verify_ss_motive(const Quiver& q, const StabilityWeights& theta, const DimVector& d, const FFConfig& cfg);

// evaluate([R_d], L = q) against count_reps, and evaluate([G_d]) against count_gl.
OracleComparison compare_reps(const Quiver& q, const DimVector& d, const FFConfig& cfg);
OracleComparison compare_gl(const DimVector& d, const FFConfig& cfg);

}  // namespace qdt
