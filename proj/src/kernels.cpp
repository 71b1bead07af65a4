#include "qdt/kernels.hpp"

#include <cstdlib>
#include <string>

#include <omp.h>

#include "qdt/errors.hpp"

namespace qdt {

BoxLayout::BoxLayout(const DimVector& box) : box_(box) {
  const std::size_t n = box.size();
  strides_.assign(n, 1);
  for (std::size_t i = n; i-- > 1;) strides_[i - 1] = strides_[i] * static_cast<std::size_t>(box[i] + 1);
  const std::size_t count = n == 0 ? 1 : strides_[0] * static_cast<std::size_t>(box[0] + 1);

  digits_.reserve(count);
  total_.reserve(count);
  std::vector<int> cur(n, 0);
  for (std::size_t idx = 0; idx < count; ++idx) {
    digits_.push_back(cur);
    int t = 0;
    for (int x : cur) t += x;
    total_.push_back(t);
    for (std::size_t i = n; i-- > 0;) {
      if (cur[i] < box[i]) {
        ++cur[i];
        break;
      }
      cur[i] = 0;
    }
  }

  layers_.assign(static_cast<std::size_t>(box.total()) + 1, {});
  for (std::size_t idx = 0; idx < count; ++idx) layers_[static_cast<std::size_t>(total_[idx])].push_back(idx);

  below_.resize(count);
  for (std::size_t d = 0; d < count; ++d) {
    for (std::size_t e = 0; e <= d; ++e) {
      bool ok = true;
      for (std::size_t i = 0; i < n && ok; ++i) ok = digits_[e][i] <= digits_[d][i];
      if (ok) below_[d].push_back(e);
    }
  }
}

std::size_t BoxLayout::index(const DimVector& d) const {
  if (d.size() != box_.size()) throw InvalidInput("dimension vector does not match series box");
  std::size_t idx = 0;
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d[i] > box_[i]) throw InvalidInput("dimension vector " + d.to_string() + " lies outside box " + box_.to_string());
    idx += strides_[i] * static_cast<std::size_t>(d[i]);
  }
  return idx;
}

std::ptrdiff_t BoxLayout::scaled_index(std::size_t idx, int n) const {
  std::size_t r = 0;
  const auto& dg = digits_[idx];
  for (std::size_t i = 0; i < dg.size(); ++i) {
    const long x = static_cast<long>(dg[i]) * n;
    if (x > box_[i]) return -1;
    r += strides_[i] * static_cast<std::size_t>(x);
  }
  return static_cast<std::ptrdiff_t>(r);
}

namespace kernels {

namespace {

RationalMotive convolve_at(const BoxLayout& layout, Coeffs a, Coeffs b, std::size_t d) {
  std::vector<RationalMotive> terms;
  for (std::size_t e : layout.below(d)) {
    const auto& x = a[e];
    const auto& y = b[d - e];
    if (x.is_zero() || y.is_zero()) continue;
    terms.push_back(x * y);
  }
  return sum(terms);
}

// |d| E_d = sum_{0<e<=d} |e| x_e E_{d-e}
RationalMotive exp_at(const BoxLayout& layout, Coeffs x, std::span<const RationalMotive> e_done, std::size_t d) {
  std::vector<RationalMotive> terms;
  for (std::size_t e : layout.below(d)) {
    if (e == 0 || x[e].is_zero() || e_done[d - e].is_zero()) continue;
    terms.push_back((x[e] * e_done[d - e]).scaled(layout.total(e)));
  }
  return sum(terms).scaled(mpq_class(1, layout.total(d)));
}

// |d| L_d = |d| g_d - sum_{0<e<d} |e| L_e g_{d-e}
RationalMotive log_at(const BoxLayout& layout, Coeffs g, std::span<const RationalMotive> l_done, std::size_t d) {
  std::vector<RationalMotive> terms;
  terms.push_back(g[d].scaled(layout.total(d)));
  for (std::size_t e : layout.below(d)) {
    if (e == 0 || e == d || l_done[e].is_zero() || g[d - e].is_zero()) continue;
    terms.push_back(-(l_done[e] * g[d - e]).scaled(layout.total(e)));
  }
  return sum(terms).scaled(mpq_class(1, layout.total(d)));
}

void check_exp_input(Coeffs x) {
  if (!x[0].is_zero()) throw InvalidInput("exp requires a series without constant term");
}

void check_log_input(Coeffs g) {
  if (!(g[0] == RationalMotive(1))) throw InvalidInput("log requires constant term 1");
}

}  // namespace

namespace serial {

void convolve(const BoxLayout& layout, Coeffs a, Coeffs b, OutCoeffs out) {
  for (std::size_t d = 0; d < layout.size(); ++d) out[d] = convolve_at(layout, a, b, d);
}

void exp(const BoxLayout& layout, Coeffs x, OutCoeffs out) {
  check_exp_input(x);
  out[0] = RationalMotive(1);
  for (std::size_t layer = 1; layer < layout.layers().size(); ++layer) {
    for (std::size_t d : layout.layers()[layer]) out[d] = exp_at(layout, x, out, d);
  }
}

void log(const BoxLayout& layout, Coeffs g, OutCoeffs out) {
  check_log_input(g);
  out[0] = RationalMotive();
  for (std::size_t layer = 1; layer < layout.layers().size(); ++layer) {
    for (std::size_t d : layout.layers()[layer]) out[d] = log_at(layout, g, out, d);
  }
}

}  // namespace serial

namespace omp {

void convolve(const BoxLayout& layout, Coeffs a, Coeffs b, OutCoeffs out) {
  const auto n = static_cast<std::ptrdiff_t>(layout.size());
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t d = 0; d < n; ++d) {
    out[static_cast<std::size_t>(d)] = convolve_at(layout, a, b, static_cast<std::size_t>(d));
  }
}

void exp(const BoxLayout& layout, Coeffs x, OutCoeffs out) {
  check_exp_input(x);
  out[0] = RationalMotive(1);
  for (std::size_t layer = 1; layer < layout.layers().size(); ++layer) {
    const auto& idx = layout.layers()[layer];
    const auto n = static_cast<std::ptrdiff_t>(idx.size());
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t k = 0; k < n; ++k) {
      const std::size_t d = idx[static_cast<std::size_t>(k)];
      out[d] = exp_at(layout, x, out, d);
    }
  }
}

void log(const BoxLayout& layout, Coeffs g, OutCoeffs out) {
  check_log_input(g);
  out[0] = RationalMotive();
  for (std::size_t layer = 1; layer < layout.layers().size(); ++layer) {
    const auto& idx = layout.layers()[layer];
    const auto n = static_cast<std::ptrdiff_t>(idx.size());
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t k = 0; k < n; ++k) {
      const std::size_t d = idx[static_cast<std::size_t>(k)];
      out[d] = log_at(layout, g, out, d);
    }
  }
}

}  // namespace omp

}  // namespace kernels

int configure_threads_from_env() {
  if (const char* env = std::getenv("DT_THREADS")) {
    try {
      const int n = std::stoi(env);
      if (n >= 1) omp_set_num_threads(n);
    } catch (const std::exception&) {
      // Ignore malformed values and keep the OpenMP default.
    }
  }
  return omp_get_max_threads();
}

int thread_budget() { return omp_get_max_threads(); }

}  // namespace qdt
