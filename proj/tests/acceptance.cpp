// Acceptance run: one PASS/FAIL line per criterion.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>

#include "oracles.hpp"
#include "qdt/dt.hpp"
#include "qdt/errors.hpp"
#include "qdt/motives.hpp"
#include "qdt/oracle_ff.hpp"

using namespace qdt;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

const StabilityWeights kKing{{1, -1}};

Outcome zero_loop() {
  Outcome o;
  const DTResult r = dt_series(Quiver::loops(0), std::nullopt, std::nullopt, {8});
  o.require(r.omega.at({1}) == RationalMotive(1), "Omega_1 = " + r.omega.at({1}).to_string());
  for (int d = 2; d <= 8; ++d) o.require(r.omega.at({d}).is_zero(), "Omega_" + std::to_string(d) + " != 0");
  return o;
}

Outcome one_loop() {
  Outcome o;
  const DTResult r = dt_series(Quiver::loops(1), std::nullopt, std::nullopt, {8});
  o.require(r.omega.at({1}) == RationalMotive(LaurentPoly::v(1)), "Omega_1 = " + r.omega.at({1}).to_string());
  for (int d = 2; d <= 8; ++d) o.require(r.omega.at({d}).is_zero(), "Omega_" + std::to_string(d) + " != 0");
  return o;
}

Outcome m_loops() {
  Outcome o;
  for (int m : {2, 3}) {
    const DTResult r = dt_series(Quiver::loops(m), std::nullopt, std::nullopt, {6});
    o.require(check_integrality(r).ok(), "non-integral Omega for m = " + std::to_string(m));
    if (!o.ok) return o;
    const PositivityReport p = check_positivity(r);
    for (const auto& e : p.entries) {
      o.require(e.nonnegative, "negative coefficient in Omega" + e.d.to_string() + ", m = " + std::to_string(m));
      o.require(e.parity != Parity::mixed, "mixed parity in Omega" + e.d.to_string() + ", m = " + std::to_string(m));
    }
    if (m == 2) o.require(r.omega.at({1}) == RationalMotive(LaurentPoly::v(2)), "Omega_1(m=2) != L");
  }
  return o;
}

Outcome kronecker() {
  Outcome o;
  for (int m = 1; m <= 5; ++m) {
    const DTResult r = dt_series(Quiver::kronecker(m), kKing, mpq_class(0), {4, 4});
    o.require(r.omega.at({1, 1}) == RationalMotive(proj_vir(m)),
              "m = " + std::to_string(m) + ": Omega_(1,1) = " + r.omega.at({1, 1}).to_string());
    for (int k = 1; k <= 4; ++k) {
      o.require(r.omega.at({k, k}).is_integral(),
                "m = " + std::to_string(m) + ": Omega at k = " + std::to_string(k) + " not integral");
    }
  }
  return o;
}

Outcome qbinomial_identity() {
  Outcome o;
  for (int N = 1; N <= 12; ++N) {
    LaurentPoly s;
    for (int n = 0; n <= N; ++n) {
      const LaurentPoly t = qbinom(N, n).shifted(n * (n - 1));
      s += n % 2 == 0 ? t : -t;
    }
    o.require(s.is_zero(), "N = " + std::to_string(N) + ": sum = " + s.to_string());
  }
  return o;
}

Outcome framed_grassmannian() {
  Outcome o;
  const DTResult zero = dt_series(Quiver::loops(0), std::nullopt, std::nullopt, {8});
  for (int f = 1; f <= 6; ++f) {
    const TruncatedSeries s = framed_series(zero, {f}, false);
    for (int d = 0; d <= 8; ++d) {
      const LaurentPoly expected = d <= f ? qbinom(f, d).shifted(d * d) : LaurentPoly();
      o.require(s[DimVector{d}] == RationalMotive(expected),
                "f = " + std::to_string(f) + ", d = " + std::to_string(d) + ": " + s[DimVector{d}].to_string());
    }
    if (f % 2 != 0) continue;
    // Normalized form: the same classes twisted by v^(-fd).
    const TruncatedSeries n = framed_series(zero, {f}, true);
    for (int d = 0; d <= 8; ++d) {
      const LaurentPoly expected = d <= f ? qbinom(f, d).shifted(d * d - f * d) : LaurentPoly();
      o.require(n[DimVector{d}] == RationalMotive(expected), "normalized f = " + std::to_string(f) +
                                                                 ", d = " + std::to_string(d) + ": " +
                                                                 n[DimVector{d}].to_string());
    }
  }
  return o;
}

TruncatedSeries random_series(std::mt19937& rng) {
  std::uniform_int_distribution<int> coef(-3, 3), expo(-4, 4), count(1, 5);
  TruncatedSeries s({4, 4});
  const auto keys = nonzero_vectors_below({4, 4});
  std::uniform_int_distribution<std::size_t> pick(0, keys.size() - 1);
  for (int i = 0, n = count(rng); i < n; ++i) {
    s.add_term(keys[pick(rng)], RationalMotive(LaurentPoly::monomial(coef(rng), expo(rng))));
  }
  return s;
}

Outcome lambda_ring_laws() {
  Outcome o;
  std::mt19937 rng(20240611);
  for (int i = 0; i < 50; ++i) {
    const TruncatedSeries f = random_series(rng);
    const TruncatedSeries g = random_series(rng);
    o.require(plethystic_log(plethystic_exp(f)) == f, "Log(Exp(f)) != f for sample " + std::to_string(i));
    o.require(plethystic_exp(f + g) == mul(plethystic_exp(f), plethystic_exp(g)),
              "Exp(f + g) != Exp(f) Exp(g) for sample " + std::to_string(i));
  }
  return o;
}

Outcome oracle_equality() {
  Outcome o;
  for (int m = 0; m <= 2; ++m) {
    for (int q : {2, 3}) {
      FFConfig cfg;
      cfg.q = q;
      const OracleComparison c = compare_semistable(Quiver::kronecker(m), kKing, {1, 1}, cfg);
      o.require(c.match, "Kronecker m = " + std::to_string(m) + ", q = " + std::to_string(q) + ": count " +
                             std::to_string(c.count) + " vs motive " + c.motive_eval.get_str());
    }
  }
  const Quiver quivers[] = {Quiver::loops(0), Quiver::loops(1), Quiver::kronecker(1), Quiver::kronecker(2)};
  for (const Quiver& qv : quivers) {
    const DimVector box = qv.size() == 1 ? DimVector{3} : DimVector{3, 3};
    for (const auto& d : nonzero_vectors_below(box)) {
      if (d.total() > 3) continue;
      for (int q : {2, 3, 4}) {
        FFConfig cfg;
        cfg.q = q;
        o.require(compare_gl(d, cfg).match, "GL count mismatch at " + d.to_string());
        try {
          o.require(compare_reps(qv, d, cfg).match, "rep count mismatch at " + d.to_string());
        } catch (const GuardExceeded&) {
        }
      }
    }
  }
  return o;
}

Outcome nullcone() {
  Outcome o;
  std::size_t quivers = 0;
  auto run = [&](const Quiver& q) {
    ++quivers;
    const DimVector box = q.size() == 1 ? DimVector{6} : DimVector{6, 6};
    for (const auto& d : nonzero_vectors_below(box)) {
      if (d.total() > 6) continue;
      const mpq_class bound = nullcone_bound(q, d);
      for (const auto& parts : thin_decompositions(d)) {
        o.require(thin_decomposition_value(q, d, parts) == bound, "mismatch at " + d.to_string());
      }
    }
  };
  for (int loops = 0; loops <= 3; ++loops) run(Quiver::loops(loops));
  for (int a = 0; a <= 3; ++a) {
    for (int b = 0; b <= 3; ++b) {
      for (int c = 0; c <= 3; ++c) run(Quiver({{a, c}, {c, b}}));
    }
  }
  // One-loop: N_d is the nilpotent cone, dim N_d - dim G_d = (d^2 - d) - d^2.
  for (int d = 1; d <= 4; ++d) {
    const long count = testing::nilpotent_matrices_f2(d);
    long dim = 0;
    while ((1L << dim) < count) ++dim;
    o.require((1L << dim) == count, "nilpotent count is not a power of 2");
    o.require(nullcone_bound(Quiver::loops(1), {d}) == dim - d * d, "bound not attained at d = " + std::to_string(d));
    o.require(dim - d * d == -d, "nilpotent cone dimension off at d = " + std::to_string(d));
  }
  if (o.ok) o.detail = std::to_string(quivers) + " quivers";
  return o;
}

Outcome local_consistency() {
  Outcome o;
  struct Case {
    std::vector<std::vector<int>> gram;
    Quiver global;
    DimVector box;
  };
  const Case cases[] = {
      {{{1}}, Quiver::loops(0), {6}},
      {{{0}}, Quiver::loops(1), {6}},
      {{{1, 0}, {0, 1}}, Quiver({{0, 0}, {0, 0}}), {3, 3}},
  };
  for (const auto& c : cases) {
    const TruncatedSeries local = local_dt({c.gram, c.box, std::nullopt}, c.box);
    const DTResult global = dt_series(c.global, std::nullopt, std::nullopt, c.box);
    TruncatedSeries expected(c.box);
    for (const auto& [d, w] : global.omega) expected.set(d, w.bar());
    o.require(local == expected, "mismatch for gram of size " + std::to_string(c.gram.size()));
  }
  return o;
}

Outcome betti() {
  Outcome o;
  const DTResult r = dt_series(Quiver::kronecker(3), kKing, mpq_class(0), {1, 1});
  const RationalMotive& w = r.omega.at({1, 1});
  o.require(ic_betti(w, 2) == std::map<int, mpz_class>{{0, 1}, {2, 1}, {4, 1}}, "wrong Betti numbers");
  o.require(euler_specialization(w) == 3, "Euler specialization != 3");
  try {
    ic_betti(RationalMotive(LaurentPoly::parse("v - 1")), 1);
    o.require(false, "parity violation not detected");
  } catch (const ParityViolation& e) {
    o.require(std::string(e.what()).find("parity") != std::string::npos, "diagnostic does not mention parity");
  }
  return o;
}

}  // namespace

int main() {
  configure_threads_from_env();
  struct Criterion {
    int id;
    const char* name;
    std::function<Outcome()> run;
    double limit_s;
  };
  const Criterion criteria[] = {
      {1, "zero-loop quiver, box (8)", zero_loop, 1},
      {2, "one-loop quiver, box (8)", one_loop, 1},
      {3, "m-loop quivers m = 2, 3, box (6): integral, positive, uniform parity", m_loops, 60},
      {4, "Kronecker m = 1..5, box (4,4): Omega_(1,1) = [P^(m-1)]_vir", kronecker, 60},
      {5, "alternating q-binomial identity, N <= 12", qbinomial_identity, 0},
      {6, "framed zero-loop series, f <= 6: Grassmannians", framed_grassmannian, 0},
      {7, "Log Exp = id and Exp(f + g) = Exp(f) Exp(g), 50 samples", lambda_ring_laws, 0},
      {8, "finite field point counts against motives", oracle_equality, 0},
      {9, "nullcone bound against thin decompositions", nullcone, 0},
      {10, "local DT against bar-involuted global DT", local_consistency, 0},
      {11, "IC Betti numbers of the 3-Kronecker moduli", betti, 0},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_s > 0 && secs >= c.limit_s) {
      o.require(false, "took " + std::to_string(secs) + " s, limit " + std::to_string(c.limit_s) + " s");
    }
    if (!o.ok) ++failed;
    std::printf("criterion %2d: %s  %-70s %8.3f s%s%s\n", c.id, o.ok ? "PASS" : "FAIL", c.name, secs,
                o.detail.empty() ? "" : "  ", o.detail.c_str());
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(std::size(criteria)) - failed, std::size(criteria));
  return failed == 0 ? 0 : 1;
}
