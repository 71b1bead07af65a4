#pragma once

#include <memory>
#include <span>
#include <utility>
#include <vector>

#include "qdt/dim_vector.hpp"
#include "qdt/kernels.hpp"
#include "qdt/rational_motive.hpp"

namespace qdt {

enum class Exec { serial, parallel };

// Multivariate power series in t^d over Q(v), truncated to the box
// {d : d <= box}. Terms beyond the box are dropped by every operation.
class TruncatedSeries {
 public:
  explicit TruncatedSeries(const DimVector& box);
  // Zero series sharing an existing layout.
  explicit TruncatedSeries(std::shared_ptr<const BoxLayout> layout);
  static TruncatedSeries one(const DimVector& box);
  static TruncatedSeries monomial(const DimVector& box, const DimVector& d, RationalMotive c);

  const DimVector& box() const { return layout_->box(); }
  const BoxLayout& layout() const { return *layout_; }
  std::shared_ptr<const BoxLayout> shared_layout() const { return layout_; }

  // Throws InvalidInput when d is outside the box.
  const RationalMotive& operator[](const DimVector& d) const { return coeffs_[layout_->index(d)]; }
  void set(const DimVector& d, RationalMotive c) { coeffs_[layout_->index(d)] = std::move(c); }
  // Adds c at d, silently ignoring d outside the box.
  void add_term(const DimVector& d, const RationalMotive& c);

  std::span<const RationalMotive> coefficients() const { return coeffs_; }
  std::span<RationalMotive> coefficients() { return coeffs_; }

  // Nonzero (d, coefficient) pairs in graded-lex order.
  std::vector<std::pair<DimVector, RationalMotive>> nonzero_terms() const;

  TruncatedSeries& operator+=(const TruncatedSeries& o);
  TruncatedSeries& operator-=(const TruncatedSeries& o);
  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
  TruncatedSeries scaled(const RationalMotive& c) const;
  // Coefficientwise map.
  template <class F>
  TruncatedSeries map(F&& f) const {
    TruncatedSeries r(*this);
    for (auto& c : r.coeffs_) {
      if (!c.is_zero()) c = f(c);
    }
    return r;
  }

  bool operator==(const TruncatedSeries& o) const { return box() == o.box() && coeffs_ == o.coeffs_; }

 private:
  void check_same_box(const TruncatedSeries& o) const;

  std::shared_ptr<const BoxLayout> layout_;
  std::vector<RationalMotive> coeffs_;
};

// Cauchy product, truncated. Throws InvalidInput on box mismatch.
TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b, Exec exec = Exec::parallel);

// sum_d psi_n(f_d) t^(n d).
TruncatedSeries adams_series(int n, const TruncatedSeries& f);

// Ordinary exponential and logarithm over Q(v).
TruncatedSeries exp_series(const TruncatedSeries& f, Exec exec = Exec::parallel);
TruncatedSeries log_series(const TruncatedSeries& g, Exec exec = Exec::parallel);

// Exp(f) = exp(sum_n psi_n(f) / n); requires f_0 = 0.
TruncatedSeries plethystic_exp(const TruncatedSeries& f, Exec exec = Exec::parallel);
// Log(g) = sum_n mu(n)/n psi_n(log g); requires g_0 = 1.
TruncatedSeries plethystic_log(const TruncatedSeries& g, Exec exec = Exec::parallel);

int mobius(int n);

}  // namespace qdt
