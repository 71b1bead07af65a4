#include "qdt/oracle_ff.hpp"

#include <set>

#include <omp.h>

#include "qdt/dt.hpp"
#include "qdt/errors.hpp"
#include "qdt/motives.hpp"

namespace qdt {

FiniteField::FiniteField(int q) : q_(q) {
  if (q != 2 && q != 3 && q != 4) throw InvalidInput("finite field oracle supports q in {2, 3, 4}");
  add_.resize(static_cast<std::size_t>(q * q));
  mul_.resize(static_cast<std::size_t>(q * q));
  for (int a = 0; a < q; ++a) {
    for (int b = 0; b < q; ++b) {
      const auto i = static_cast<std::size_t>(a * q + b);
      if (q == 4) {
        add_[i] = a ^ b;
        // Carry-less product of two linear polynomials over F_2, reduced by a^2 = a + 1.
        int p = 0;
        for (int bit = 0; bit < 2; ++bit) {
          if (b & (1 << bit)) p ^= a << bit;
        }
        if (p & 4) p ^= 0b111;
        mul_[i] = p;
      } else {
        add_[i] = (a + b) % q;
        mul_[i] = (a * b) % q;
      }
    }
  }
}

int FiniteField::neg(int a) const {
  for (int b = 0; b < q_; ++b) {
    if (add(a, b) == 0) return b;
  }
  throw Error("internal: no additive inverse");
}

int FiniteField::inv(int a) const {
  for (int b = 1; b < q_; ++b) {
    if (mul(a, b) == 1) return b;
  }
  throw InvalidInput("zero has no multiplicative inverse");
}

namespace {

std::uint64_t ipow(std::uint64_t b, long e) {
  std::uint64_t r = 1;
  for (long i = 0; i < e; ++i) r *= b;
  return r;
}

void check_guard(const DimVector& d, long entries, const FFConfig& cfg) {
  if (d.total() > cfg.max_total_dim) {
    throw GuardExceeded("finite field oracle is limited to total dimension " + std::to_string(cfg.max_total_dim) +
                        ", got " + d.to_string());
  }
  // q^entries <= limit, checked without overflow.
  std::uint64_t n = 1;
  for (long i = 0; i < entries; ++i) {
    n *= static_cast<std::uint64_t>(cfg.q);
    if (n > cfg.enumeration_limit) {
      throw GuardExceeded("enumeration of q^" + std::to_string(entries) + " representations exceeds the limit");
    }
  }
}

// Arrow copies i -> j, one entry per arrow.
std::vector<std::pair<std::size_t, std::size_t>> arrow_list(const Quiver& q) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < q.size(); ++i) {
    for (std::size_t j = 0; j < q.size(); ++j) {
      for (int m = 0; m < q.arrows(i, j); ++m) out.emplace_back(i, j);
    }
  }
  return out;
}

// Vectors of F_q^n are encoded base q, coordinate k as digit k.
std::vector<int> decode(std::uint64_t code, int q, int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    v[static_cast<std::size_t>(k)] = static_cast<int>(code % static_cast<std::uint64_t>(q));
    code /= static_cast<std::uint64_t>(q);
  }
  return v;
}

std::uint64_t encode(const std::vector<int>& v, int q) {
  std::uint64_t code = 0;
  for (std::size_t k = v.size(); k-- > 0;) code = code * static_cast<std::uint64_t>(q) + static_cast<std::uint64_t>(v[k]);
  return code;
}

// All subspaces of F_q^n as bitmasks over the q^n vectors, with dimensions.
struct Subspace {
  std::uint64_t mask;
  int dim;
};

std::vector<Subspace> all_subspaces(const FiniteField& f, int n) {
  const int q = f.order();
  const std::uint64_t count = ipow(static_cast<std::uint64_t>(q), n);
  if (count > 64) throw GuardExceeded("subspace enumeration supports at most 64 vectors");
  auto span_with = [&](std::uint64_t mask, std::uint64_t u) {
    std::uint64_t out = mask;
    const auto uv = decode(u, q, n);
    for (std::uint64_t s = 0; s < count; ++s) {
      if (!(mask >> s & 1)) continue;
      const auto sv = decode(s, q, n);
      for (int c = 1; c < q; ++c) {
        std::vector<int> w(static_cast<std::size_t>(n));
        for (int k = 0; k < n; ++k) {
          const auto kk = static_cast<std::size_t>(k);
          w[kk] = f.add(sv[kk], f.mul(c, uv[kk]));
        }
        out |= std::uint64_t{1} << encode(w, q);
      }
    }
    return out;
  };
  std::set<std::uint64_t> seen{1};  // {0}
  std::vector<std::uint64_t> frontier{1};
  while (!frontier.empty()) {
    std::vector<std::uint64_t> next;
    for (std::uint64_t m : frontier) {
      for (std::uint64_t u = 1; u < count; ++u) {
        if (m >> u & 1) continue;
        const std::uint64_t s = span_with(m, u);
        if (seen.insert(s).second) next.push_back(s);
      }
    }
    frontier = std::move(next);
  }
  std::vector<Subspace> out;
  for (std::uint64_t m : seen) {
    int size = __builtin_popcountll(m);
    int dim = 0;
    while (size > 1) {
      size /= q;
      ++dim;
    }
    out.push_back({m, dim});
  }
  return out;
}

int rank(const FiniteField& f, std::vector<std::vector<int>> m) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[r]);
    const int inv = f.inv(m[r][c]);
    for (auto& x : m[r]) x = f.mul(x, inv);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      const int factor = f.neg(m[i][c]);
      for (std::size_t k = 0; k < cols; ++k) m[i][k] = f.add(m[i][k], f.mul(factor, m[r][k]));
    }
    ++r;
  }
  return static_cast<int>(r);
}

}  // namespace

std::uint64_t count_reps_by_enumeration(const Quiver& q, const DimVector& d, const FFConfig& cfg) {
  FiniteField f(cfg.q);
  const long n = rep_space_dimension(q, d);
  check_guard(d, n, cfg);
  const std::uint64_t total = ipow(static_cast<std::uint64_t>(cfg.q), n);
  std::uint64_t count = 0;
  const auto limit = static_cast<std::int64_t>(total);
#pragma omp parallel for reduction(+ : count)
  for (std::int64_t code = 0; code < limit; ++code) {
    // Every tuple of matrices is a representation; decoding keeps the
    // enumeration honest.
    const auto entries = decode(static_cast<std::uint64_t>(code), cfg.q, static_cast<int>(n));
    count += entries.size() == static_cast<std::size_t>(n) ? 1 : 0;
  }
  return count;
}

std::uint64_t count_reps(const Quiver& q, const DimVector& d, const FFConfig& cfg) {
  FiniteField f(cfg.q);
  const long n = rep_space_dimension(q, d);
  check_guard(d, n, cfg);
  const std::uint64_t closed = ipow(static_cast<std::uint64_t>(cfg.q), n);
  if (closed <= 100'000 && count_reps_by_enumeration(q, d, cfg) != closed) {
    throw Error("internal: representation count disagrees with enumeration");
  }
  return closed;
}

std::uint64_t count_gl(const DimVector& d, const FFConfig& cfg) {
  FiniteField f(cfg.q);
  check_guard(d, 0, cfg);
  std::uint64_t r = 1;
  const auto q = static_cast<std::uint64_t>(cfg.q);
  for (int di : d.entries()) {
    for (int k = 0; k < di; ++k) r *= ipow(q, di) - ipow(q, k);
  }
  return r;
}

std::uint64_t count_gl_by_enumeration(const DimVector& d, const FFConfig& cfg) {
  FiniteField f(cfg.q);
  long entries = 0;
  for (int di : d.entries()) entries += static_cast<long>(di) * di;
  check_guard(d, entries, cfg);
  std::uint64_t r = 1;
  for (int di : d.entries()) {
    const std::uint64_t total = ipow(static_cast<std::uint64_t>(cfg.q), static_cast<long>(di) * di);
    std::uint64_t invertible = 0;
    for (std::uint64_t code = 0; code < total; ++code) {
      const auto e = decode(code, cfg.q, di * di);
      std::vector<std::vector<int>> m(static_cast<std::size_t>(di), std::vector<int>(static_cast<std::size_t>(di)));
      for (int a = 0; a < di; ++a) {
        for (int b = 0; b < di; ++b) m[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = e[static_cast<std::size_t>(a * di + b)];
      }
      if (rank(f, m) == di) ++invertible;
    }
    r *= invertible;
  }
  return r;
}

std::uint64_t count_semistable(const Quiver& q, const StabilityWeights& theta, const DimVector& d,
                               const FFConfig& cfg) {
  q.check(d);
  if (d.is_zero()) throw InvalidInput("semistable count of the zero dimension vector");
  const FiniteField f(cfg.q);
  const long n_entries = rep_space_dimension(q, d);
  check_guard(d, n_entries, cfg);

  const std::size_t nv = q.size();
  std::vector<std::vector<Subspace>> subspaces(nv);
  for (std::size_t i = 0; i < nv; ++i) subspaces[i] = all_subspaces(f, d[i]);

  // Dimension vectors whose subrepresentations would destabilize.
  const mpq_class mu = slope(theta, d);
  std::set<std::vector<int>> destabilizing;
  for (const auto& e : nonzero_vectors_below(d)) {
    if (!(e == d) && slope(theta, e) > mu) destabilizing.insert(e.entries());
  }

  // Candidate graded subspaces with destabilizing dimension vector.
  std::vector<std::vector<std::uint64_t>> candidates;
  {
    std::vector<std::size_t> pick(nv, 0);
    while (true) {
      std::vector<int> dims(nv);
      std::vector<std::uint64_t> masks(nv);
      for (std::size_t i = 0; i < nv; ++i) {
        dims[i] = subspaces[i][pick[i]].dim;
        masks[i] = subspaces[i][pick[i]].mask;
      }
      if (destabilizing.count(dims)) candidates.push_back(std::move(masks));
      std::size_t i = 0;
      for (; i < nv; ++i) {
        if (++pick[i] < subspaces[i].size()) break;
        pick[i] = 0;
      }
      if (i == nv) break;
    }
  }

  const auto arrows = arrow_list(q);
  const int qq = cfg.q;
  const std::uint64_t total = ipow(static_cast<std::uint64_t>(qq), n_entries);
  std::uint64_t count = 0;
  const auto limit = static_cast<std::int64_t>(total);
#pragma omp parallel for reduction(+ : count) schedule(static)
  for (std::int64_t code = 0; code < limit; ++code) {
    const auto entries = decode(static_cast<std::uint64_t>(code), qq, static_cast<int>(n_entries));
    // image[a][u] = encoded M_a u for arrow a: i -> j, M_a a d_j x d_i matrix.
    std::vector<std::vector<std::uint64_t>> image(arrows.size());
    std::size_t offset = 0;
    for (std::size_t a = 0; a < arrows.size(); ++a) {
      const auto [i, j] = arrows[a];
      const int di = d[i];
      const int dj = d[j];
      const std::uint64_t dom = ipow(static_cast<std::uint64_t>(qq), di);
      image[a].resize(dom);
      for (std::uint64_t u = 0; u < dom; ++u) {
        const auto uv = decode(u, qq, di);
        std::vector<int> w(static_cast<std::size_t>(dj), 0);
        for (int r = 0; r < dj; ++r) {
          for (int c = 0; c < di; ++c) {
            const int m = entries[offset + static_cast<std::size_t>(r * di + c)];
            w[static_cast<std::size_t>(r)] = f.add(w[static_cast<std::size_t>(r)], f.mul(m, uv[static_cast<std::size_t>(c)]));
          }
        }
        image[a][u] = encode(w, qq);
      }
      offset += static_cast<std::size_t>(di * dj);
    }
    bool semistable = true;
    for (const auto& masks : candidates) {
      bool invariant = true;
      for (std::size_t a = 0; a < arrows.size() && invariant; ++a) {
        const auto [i, j] = arrows[a];
        for (std::uint64_t u = 0; u < image[a].size(); ++u) {
          if ((masks[i] >> u & 1) && !(masks[j] >> image[a][u] & 1)) {
            invariant = false;
            break;
          }
        }
      }
      if (invariant) {
        semistable = false;
        break;
      }
    }
    if (semistable) ++count;
  }
  return count;
}

OracleComparison compare_semistable(const Quiver& q, const StabilityWeights& theta, const DimVector& d,
                                    const FFConfig& cfg) {
  OracleComparison c;
  c.count = count_semistable(q, theta, d, cfg);
  c.motive_eval = (ss_stack_motive(q, theta, d) * gl_motive(d)).evaluate(cfg.q);
  c.match = c.motive_eval == mpq_class(static_cast<unsigned long>(c.count));
  return c;
}

bool verify_ss_motive(const Quiver& q, const StabilityWeights& theta, const DimVector& d, const FFConfig& cfg) {
  return compare_semistable(q, theta, d, cfg).match;
}

OracleComparison compare_reps(const Quiver& q, const DimVector& d, const FFConfig& cfg) {
  OracleComparison c;
  c.count = count_reps(q, d, cfg);
  c.motive_eval = rep_space_motive(q, d).evaluate(cfg.q);
  c.match = c.motive_eval == mpq_class(static_cast<unsigned long>(c.count));
  return c;
}

OracleComparison compare_gl(const DimVector& d, const FFConfig& cfg) {
  OracleComparison c;
  c.count = count_gl(d, cfg);
  c.motive_eval = gl_motive(d).evaluate(cfg.q);
  c.match = c.motive_eval == mpq_class(static_cast<unsigned long>(c.count));
  return c;
}

}  // namespace qdt
