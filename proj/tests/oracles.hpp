#pragma once

// Independent reference computations for tests. Nothing here goes through
// the Adams/log machinery of the library.

#include <map>
#include <vector>

#include "qdt/laurent_poly.hpp"

namespace qdt::testing {

using Key = std::vector<int>;
using Poly = std::map<Key, LaurentPoly>;

inline bool below(const Key& a, const Key& box) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > box[i]) return false;
  }
  return true;
}

inline Poly product(const Poly& a, const Poly& b, const Key& box) {
  Poly r;
  for (const auto& [ka, ca] : a) {
    for (const auto& [kb, cb] : b) {
      Key k(ka.size());
      for (std::size_t i = 0; i < k.size(); ++i) k[i] = ka[i] + kb[i];
      if (below(k, box)) r[k] += ca * cb;
    }
  }
  return r;
}

// (1 - x t^d)^(-c) = sum_n binom(c + n - 1, n) x^n t^(nd) for any integer c.
inline Poly binomial_series(const LaurentPoly& x, const Key& d, long c, const Key& box) {
  Poly r;
  r[Key(d.size(), 0)] = 1;
  mpq_class coeff = 1;
  LaurentPoly xn = 1;
  for (int n = 1;; ++n) {
    Key k(d.size());
    for (std::size_t i = 0; i < k.size(); ++i) k[i] = n * d[i];
    if (!below(k, box)) break;
    coeff *= mpq_class(c + n - 1, n);
    xn *= x;
    if (coeff == 0) break;
    r[k] = xn.scaled(coeff);
  }
  return r;
}

// Exp(sum a_(d,k) v^k t^d) for integer a: v^k with k even is a line element,
// v^k with k odd is minus one, so the series is
//   prod_(k even) (1 - v^k t^d)^(-a) * prod_(k odd) (1 + v^k t^d)^a.
inline Poly product_formula_exp(const std::map<Key, std::map<int, long>>& f, const Key& box) {
  Poly r;
  r[Key(box.size(), 0)] = 1;
  for (const auto& [d, terms] : f) {
    for (const auto& [k, a] : terms) {
      if (a == 0) continue;
      const Poly factor = k % 2 == 0 ? binomial_series(LaurentPoly::v(k), d, a, box)
                                     : binomial_series(-LaurentPoly::v(k), d, -a, box);
      r = product(r, factor, box);
    }
  }
  for (auto it = r.begin(); it != r.end();) it = it->second.is_zero() ? r.erase(it) : std::next(it);
  return r;
}

// Number of nilpotent n x n matrices over F_2, by enumeration.
inline long nilpotent_matrices_f2(int n) {
  long count = 0;
  const unsigned long total = 1UL << (n * n);
  for (unsigned long code = 0; code < total; ++code) {
    std::vector<unsigned> rows(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) rows[static_cast<std::size_t>(i)] = (code >> (i * n)) & ((1U << n) - 1);
    // P = M^n via repeated row products over F_2.
    std::vector<unsigned> p = rows;
    for (int step = 1; step < n; ++step) {
      std::vector<unsigned> next(static_cast<std::size_t>(n), 0);
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
          if (p[static_cast<std::size_t>(i)] >> j & 1) next[static_cast<std::size_t>(i)] ^= rows[static_cast<std::size_t>(j)];
        }
      }
      p = std::move(next);
    }
    bool zero = true;
    for (unsigned x : p) zero = zero && x == 0;
    if (zero) ++count;
  }
  return count;
}

}  // namespace qdt::testing
