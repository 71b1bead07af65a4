#include "qdt/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "qdt/errors.hpp"

namespace qdt {

namespace {

std::mutex& cache_mutex() {
  static std::mutex m;
  return m;
}

// Node-based maps keep references stable across insertions.
std::map<int, LaurentPoly>& cyclotomic_cache() {
  static std::map<int, LaurentPoly> cache;
  return cache;
}

std::map<std::pair<int, int>, CycloImage>& adams_cache() {
  static std::map<std::pair<int, int>, CycloImage> cache;
  return cache;
}

LaurentPoly compute_cyclotomic(int k) {
  LaurentPoly p = LaurentPoly::v(k) - 1;
  for (int d = 1; d < k; ++d) {
    if (k % d != 0) continue;
    auto q = p.divide_exact(cyclotomic(d));
    if (!q) throw Error("internal: cyclotomic division failed");
    p = std::move(*q);
  }
  return p;
}

void add_factor(CycloExponents& e, int k, int m) {
  auto it = std::lower_bound(e.begin(), e.end(), std::make_pair(k, 0));
  if (it != e.end() && it->first == k) {
    it->second += m;
  } else {
    e.insert(it, {k, m});
  }
}

}  // namespace

int euler_phi(int k) {
  int r = k;
  for (int p = 2; p * p <= k; ++p) {
    if (k % p == 0) {
      while (k % p == 0) k /= p;
      r -= r / p;
    }
  }
  if (k > 1) r -= r / k;
  return r;
}

const LaurentPoly& cyclotomic(int k) {
  if (k < 1) throw InvalidInput("cyclotomic index must be positive");
  {
    std::lock_guard lock(cache_mutex());
    auto it = cyclotomic_cache().find(k);
    if (it != cyclotomic_cache().end()) return it->second;
  }
  // Computed outside the lock: the recursion re-enters cyclotomic().
  LaurentPoly p = compute_cyclotomic(k);
  std::lock_guard lock(cache_mutex());
  return cyclotomic_cache().emplace(k, std::move(p)).first->second;
}

CycloExponents factor_L_power_minus_one(int n) {
  CycloExponents e;
  for (int j = 1; j <= 2 * n; ++j) {
    if ((2 * n) % j == 0) e.emplace_back(j, 1);
  }
  return e;
}

const CycloImage& adams_image(int k, int n) {
  {
    std::lock_guard lock(cache_mutex());
    auto it = adams_cache().find({k, n});
    if (it != adams_cache().end()) return it->second;
  }
  LaurentPoly p = cyclotomic(k).adams(n);
  CycloImage img;
  if (p.leading_coefficient() < 0) {
    img.sign = -1;
    p = -p;
  }
  // Roots of Phi_k(+-v^n) are roots of unity of order dividing 2kn.
  const int m = 2 * k * n;
  for (int j = 1; j <= m && p.degree() > 0; ++j) {
    if (m % j != 0) continue;
    while (p.degree() > 0) {
      auto q = p.divide_exact(cyclotomic(j));
      if (!q) break;
      p = std::move(*q);
      add_factor(img.factors, j, 1);
    }
  }
  if (!(p == LaurentPoly(1))) throw Error("internal: Adams image of a cyclotomic polynomial did not factor");
  std::lock_guard lock(cache_mutex());
  return adams_cache().emplace(std::make_pair(k, n), std::move(img)).first->second;
}

CycloExponents cyclo_max(const CycloExponents& a, const CycloExponents& b) {
  CycloExponents r;
  r.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      r.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      r.push_back(b[j++]);
    } else {
      r.emplace_back(a[i].first, std::max(a[i].second, b[j].second));
      ++i;
      ++j;
    }
  }
  return r;
}

CycloExponents cyclo_add(const CycloExponents& a, const CycloExponents& b) {
  CycloExponents r;
  r.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      r.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      r.push_back(b[j++]);
    } else {
      r.emplace_back(a[i].first, a[i].second + b[j].second);
      ++i;
      ++j;
    }
  }
  return r;
}

LaurentPoly cyclo_expand(const CycloExponents& e) {
  LaurentPoly r = 1;
  for (const auto& [k, m] : e) {
    for (int t = 0; t < m; ++t) r *= cyclotomic(k);
  }
  return r;
}

std::pair<CycloExponents, LaurentPoly> strip_cyclotomic_factors(LaurentPoly p) {
  if (p.is_zero()) throw InvalidInput("cannot factor the zero polynomial");
  CycloExponents e;
  // Phi_k | p needs phi(k) <= deg p, and phi(k) >= sqrt(k/2).
  const int deg0 = p.degree() - p.valuation();
  const long bound = 2L * deg0 * deg0 + 2;
  for (long k = 1; k <= bound && p.degree() - p.valuation() > 0; ++k) {
    if (euler_phi(static_cast<int>(k)) > p.degree() - p.valuation()) continue;
    const LaurentPoly& c = cyclotomic(static_cast<int>(k));
    int mult = 0;
    while (p.degree() - p.valuation() >= c.degree()) {
      auto q = p.divide_exact(c);
      if (!q) break;
      p = std::move(*q);
      ++mult;
    }
    if (mult) e.emplace_back(static_cast<int>(k), mult);
  }
  return {std::move(e), std::move(p)};
}

}  // namespace qdt
