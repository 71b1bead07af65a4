#include "qdt/series.hpp"

#include <algorithm>

#include "qdt/errors.hpp"

namespace qdt {

TruncatedSeries::TruncatedSeries(const DimVector& box)
    : layout_(std::make_shared<const BoxLayout>(box)), coeffs_(layout_->size()) {}

TruncatedSeries::TruncatedSeries(std::shared_ptr<const BoxLayout> layout)
    : layout_(std::move(layout)), coeffs_(layout_->size()) {}

TruncatedSeries TruncatedSeries::one(const DimVector& box) {
  TruncatedSeries s(box);
  s.coeffs_[0] = RationalMotive(1);
  return s;
}

TruncatedSeries TruncatedSeries::monomial(const DimVector& box, const DimVector& d, RationalMotive c) {
  TruncatedSeries s(box);
  s.add_term(d, c);
  return s;
}

void TruncatedSeries::add_term(const DimVector& d, const RationalMotive& c) {
  if (d.size() != box().size()) throw InvalidInput("dimension vector does not match series box");
  if (!d.leq(box())) return;
  coeffs_[layout_->index(d)] += c;
}

std::vector<std::pair<DimVector, RationalMotive>> TruncatedSeries::nonzero_terms() const {
  std::vector<std::pair<DimVector, RationalMotive>> out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (!coeffs_[i].is_zero()) out.emplace_back(layout_->key(i), coeffs_[i]);
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return graded_lex_less(a.first, b.first); });
  return out;
}

void TruncatedSeries::check_same_box(const TruncatedSeries& o) const {
  if (!(box() == o.box())) {
    throw InvalidInput("series boxes differ: " + box().to_string() + " vs " + o.box().to_string());
  }
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& o) {
  check_same_box(o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& o) {
  check_same_box(o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

TruncatedSeries TruncatedSeries::scaled(const RationalMotive& c) const {
  return map([&](const RationalMotive& x) { return x * c; });
}

TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b, Exec exec) {
  if (!(a.box() == b.box())) {
    throw InvalidInput("series boxes differ: " + a.box().to_string() + " vs " + b.box().to_string());
  }
  TruncatedSeries r(a.shared_layout());
  if (exec == Exec::serial) {
    kernels::serial::convolve(a.layout(), a.coefficients(), b.coefficients(), r.coefficients());
  } else {
    kernels::omp::convolve(a.layout(), a.coefficients(), b.coefficients(), r.coefficients());
  }
  return r;
}

TruncatedSeries adams_series(int n, const TruncatedSeries& f) {
  if (n < 1) throw InvalidInput("Adams operations are indexed by n >= 1");
  if (n == 1) return f;
  TruncatedSeries r(f.shared_layout());
  const auto& layout = f.layout();
  auto out = r.coefficients();
  const auto in = f.coefficients();
  for (std::size_t i = 0; i < layout.size(); ++i) {
    if (in[i].is_zero()) continue;
    const std::ptrdiff_t j = layout.scaled_index(i, n);
    if (j >= 0) out[static_cast<std::size_t>(j)] = in[i].adams(n);
  }
  return r;
}

TruncatedSeries exp_series(const TruncatedSeries& f, Exec exec) {
  TruncatedSeries r(f.shared_layout());
  if (exec == Exec::serial) {
    kernels::serial::exp(f.layout(), f.coefficients(), r.coefficients());
  } else {
    kernels::omp::exp(f.layout(), f.coefficients(), r.coefficients());
  }
  return r;
}

TruncatedSeries log_series(const TruncatedSeries& g, Exec exec) {
  TruncatedSeries r(g.shared_layout());
  if (exec == Exec::serial) {
    kernels::serial::log(g.layout(), g.coefficients(), r.coefficients());
  } else {
    kernels::omp::log(g.layout(), g.coefficients(), r.coefficients());
  }
  return r;
}

namespace {

// sum_{n=1}^{|box|} weight(n) psi_n(f), with the Adams terms built in parallel
// when requested. Terms with weight 0 are skipped.
template <class Weight>
TruncatedSeries adams_sum(const TruncatedSeries& f, Weight weight, Exec exec) {
  const int top = std::max(1, f.box().total());
  std::vector<TruncatedSeries> parts(static_cast<std::size_t>(top), TruncatedSeries(f.shared_layout()));
#pragma omp parallel for schedule(dynamic) if (exec == Exec::parallel)
  for (int n = 1; n <= top; ++n) {
    const mpq_class w = weight(n);
    if (w != 0) parts[static_cast<std::size_t>(n - 1)] = adams_series(n, f).map([&](const RationalMotive& c) { return c.scaled(w); });
  }
  TruncatedSeries acc(f.shared_layout());
  for (const auto& p : parts) acc += p;
  return acc;
}

}  // namespace

TruncatedSeries plethystic_exp(const TruncatedSeries& f, Exec exec) {
  if (!f.coefficients()[0].is_zero()) throw InvalidInput("plethystic Exp needs a series with zero constant term");
  const TruncatedSeries s = adams_sum(f, [](int n) { return mpq_class(1, n); }, exec);
  return exp_series(s, exec);
}

TruncatedSeries plethystic_log(const TruncatedSeries& g, Exec exec) {
  if (!(g.coefficients()[0] == RationalMotive(1))) {
    throw InvalidInput("plethystic Log needs a series with constant term 1");
  }
  const TruncatedSeries l = log_series(g, exec);
  return adams_sum(
      l,
      [](int n) {
        mpq_class w(mobius(n), n);
        w.canonicalize();
        return w;
      },
      exec);
}

int mobius(int n) {
  if (n < 1) throw InvalidInput("Moebius function is defined for n >= 1");
  int result = 1;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    n /= p;
    if (n % p == 0) return 0;
    result = -result;
  }
  if (n > 1) result = -result;
  return result;
}

}  // namespace qdt
