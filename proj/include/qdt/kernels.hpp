#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "qdt/dim_vector.hpp"
#include "qdt/rational_motive.hpp"

namespace qdt {

// Dense mixed-radix indexing of {d : 0 <= d <= box}. The last vertex varies
// fastest, so index(d - e) = index(d) - index(e) whenever e <= d.
class BoxLayout {
 public:
  explicit BoxLayout(const DimVector& box);

  const DimVector& box() const { return box_; }
  std::size_t size() const { return total_.size(); }
  std::size_t index(const DimVector& d) const;
  DimVector key(std::size_t idx) const { return DimVector(digits_[idx]); }
  const std::vector<int>& digits(std::size_t idx) const { return digits_[idx]; }
  int total(std::size_t idx) const { return total_[idx]; }
  // Indices e with 0 <= e <= key(idx), ascending.
  const std::vector<std::size_t>& below(std::size_t idx) const { return below_[idx]; }
  // Indices grouped by total degree; layer 0 holds only the origin.
  const std::vector<std::vector<std::size_t>>& layers() const { return layers_; }
  // index(n * key(idx)) if n * key(idx) <= box.
  std::ptrdiff_t scaled_index(std::size_t idx, int n) const;

 private:
  DimVector box_;
  std::vector<std::size_t> strides_;
  std::vector<std::vector<int>> digits_;
  std::vector<int> total_;
  std::vector<std::vector<std::size_t>> below_;
  std::vector<std::vector<std::size_t>> layers_;
};

// Coefficient kernels over a BoxLayout. Both namespaces compute identical
// results; the serial versions are the reference for tests and benchmarks.
namespace kernels {

using Coeffs = std::span<const RationalMotive>;
using OutCoeffs = std::span<RationalMotive>;

namespace serial {
// out = a * b truncated to the box.
void convolve(const BoxLayout& layout, Coeffs a, Coeffs b, OutCoeffs out);
// out = exp(x); requires x[0] = 0. Uses |d| E_d = sum_{0<e<=d} |e| x_e E_{d-e}.
void exp(const BoxLayout& layout, Coeffs x, OutCoeffs out);
// out = log(g); requires g[0] = 1.
void log(const BoxLayout& layout, Coeffs g, OutCoeffs out);
}  // namespace serial

namespace omp {
void convolve(const BoxLayout& layout, Coeffs a, Coeffs b, OutCoeffs out);
// Parallel within each total-degree layer; layers run in order.
void exp(const BoxLayout& layout, Coeffs x, OutCoeffs out);
void log(const BoxLayout& layout, Coeffs g, OutCoeffs out);
}  // namespace omp

}  // namespace kernels

// Reads DT_THREADS and caps the OpenMP team size accordingly. Returns the
// resulting thread budget.
int configure_threads_from_env();
int thread_budget();

}  // namespace qdt
