#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "qdt/dim_vector.hpp"

namespace qdt {

// Finite quiver given by its arrow-multiplicity matrix: arrows(i, j) is the
// number of arrows i -> j. Vertices are indexed by position; labels are
// only used for I/O.
class Quiver {
 public:
  Quiver() = default;
  Quiver(std::vector<std::string> labels, std::vector<std::vector<int>> arrows);
  // Unlabelled quiver; vertices are named "1".."n".
  explicit Quiver(std::vector<std::vector<int>> arrows);

  static Quiver loops(int m);
  static Quiver kronecker(int m);

  std::size_t size() const { return labels_.size(); }
  int arrows(std::size_t i, std::size_t j) const { return arrows_[i][j]; }
  const std::vector<std::vector<int>>& arrow_matrix() const { return arrows_; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<std::size_t> index_of(const std::string& label) const;

  // Throws InvalidInput if d is not indexed by this quiver's vertices.
  void check(const DimVector& d) const;

  bool operator==(const Quiver&) const = default;

 private:
  std::vector<std::string> labels_;
  std::vector<std::vector<int>> arrows_;
};

// King stability weights, one integer per vertex.
struct StabilityWeights {
  std::vector<int> theta;

  bool operator==(const StabilityWeights&) const = default;
};

// Local Ext-quiver data at a semisimple point: pairings of the simple
// factors, their multiplicities, and optional framing dimensions.
struct ExtQuiverSpec {
  std::vector<std::vector<int>> gram;
  DimVector multiplicities;
  std::optional<DimVector> framing_dims;
};

// Euler form (d, e) = sum_i d_i e_i - sum_{i,j} a_ij d_i e_j.
long euler_form(const Quiver& q, const DimVector& d, const DimVector& e);

// <d, e> = (d, e) - (e, d).
long antisym_form(const Quiver& q, const DimVector& d, const DimVector& e);

bool is_symmetric(const Quiver& q);

// theta.d / |d|, exact. Throws InvalidInput for d = 0.
mpq_class slope(const StabilityWeights& theta, const DimVector& d);

// Bounded genericity check: <d, e> = 0 for all nonzero d, e <= box of slope mu.
bool is_mu_generic(const Quiver& q, const StabilityWeights& theta, const mpq_class& mu,
                   const DimVector& box);

// Adds a vertex "inf" (last index) with f_i arrows inf -> i.
Quiver framed_quiver(const Quiver& q, const DimVector& f);

// Quiver on {1..s} with delta_kl - gram[k][l] arrows k -> l.
Quiver ext_quiver(const ExtQuiverSpec& spec);

}  // namespace qdt
