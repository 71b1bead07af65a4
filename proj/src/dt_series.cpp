#include <omp.h>

#include "qdt/dt.hpp"
#include "qdt/errors.hpp"

namespace qdt {

namespace {

// v - v^-1 = L^(1/2) - L^(-1/2).
LaurentPoly half_twist_difference() { return LaurentPoly::v(1) - LaurentPoly::v(-1); }

// Nonzero d <= box in the slope class; all of them under trivial stability.
std::vector<DimVector> slope_class(const std::optional<StabilityWeights>& stability,
                                   const std::optional<mpq_class>& mu, const DimVector& box) {
  std::vector<DimVector> out;
  for (auto& d : nonzero_vectors_below(box)) {
    if (!stability || slope(*stability, d) == *mu) out.push_back(std::move(d));
  }
  return out;
}

void validate(const Quiver& q, const std::optional<StabilityWeights>& stability,
              const std::optional<mpq_class>& mu, const DimVector& box) {
  q.check(box);
  if (stability) {
    if (!mu) throw InvalidInput("slope required with stability");
    if (stability->theta.size() != q.size()) throw InvalidInput("stability weights must cover every vertex");
    if (!is_mu_generic(q, *stability, *mu, box)) {
      throw GenericityViolation("stability is not generic for slope " + mu->get_str() + " within box " +
                                box.to_string() + ": the antisymmetrized Euler form is nonzero on the slope class");
    }
    if (slope_class(stability, mu, box).empty()) {
      throw EmptySlopeClass("no nonzero dimension vector below " + box.to_string() + " has slope " + mu->get_str());
    }
    return;
  }
  const StabilityWeights zero{std::vector<int>(q.size(), 0)};
  if (!is_mu_generic(q, zero, 0, box)) {
    throw SymmetryViolation("trivial stability needs a symmetric Euler form, but <d,e> != 0 for some d, e <= " +
                            box.to_string());
  }
}

}  // namespace

TruncatedSeries stack_series(const Quiver& q, const std::optional<StabilityWeights>& stability,
                             const std::optional<mpq_class>& mu, const DimVector& box, Exec exec) {
  validate(q, stability, mu, box);
  const auto cls = slope_class(stability, mu, box);
  std::vector<RationalMotive> values(cls.size());
  if (stability) {
    // The HN memo is filled in increasing |d| order on one thread.
    SemistableMotives memo(q, *stability);
    for (std::size_t i = 0; i < cls.size(); ++i) values[i] = memo(cls[i]);
  } else {
    const auto n = static_cast<std::ptrdiff_t>(cls.size());
#pragma omp parallel for schedule(dynamic) if (exec == Exec::parallel)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
      values[static_cast<std::size_t>(i)] = stack_motive(q, cls[static_cast<std::size_t>(i)]);
    }
  }
  TruncatedSeries a = TruncatedSeries::one(box);
  for (std::size_t i = 0; i < cls.size(); ++i) {
    a.set(cls[i], values[i].shifted(static_cast<int>(euler_form(q, cls[i], cls[i]))));
  }
  return a;
}

DTResult dt_series(const Quiver& q, const std::optional<StabilityWeights>& stability,
                   const std::optional<mpq_class>& mu, const DimVector& box, Exec exec) {
  const TruncatedSeries a = stack_series(q, stability, mu, box, exec);
  const TruncatedSeries log_a = plethystic_log(a, exec);
  const RationalMotive factor(half_twist_difference());

  DTResult r;
  r.quiver = q;
  r.stability = stability;
  if (stability) r.slope = mu;
  r.box = box;
  for (const auto& d : slope_class(stability, mu, box)) {
    RationalMotive w = log_a[d] * factor;
    r.integral[d] = w.is_integral();
    r.omega.emplace(d, std::move(w));
  }
  return r;
}

TruncatedSeries sym_reconstruction(const DTResult& r, Exec exec) {
  const RationalMotive inv = RationalMotive(half_twist_difference()).inverse();
  TruncatedSeries s(r.box);
  for (const auto& [d, w] : r.omega) s.set(d, w * inv);
  return plethystic_exp(s, exec);
}

}  // namespace qdt
