#include "qdt/dt.hpp"
#include "qdt/errors.hpp"
#include "qdt/motives.hpp"

namespace qdt {

RationalMotive stack_motive(const Quiver& q, const DimVector& d) {
  q.check(d);
  return inverse_gl_motive(d).shifted(static_cast<int>(2 * rep_space_dimension(q, d)));
}

SemistableMotives::SemistableMotives(Quiver q, StabilityWeights theta)
    : quiver_(std::move(q)), theta_(std::move(theta)) {
  if (theta_.theta.size() != quiver_.size()) throw InvalidInput("stability weights must cover every vertex");
}

const RationalMotive& SemistableMotives::operator()(const DimVector& d) {
  quiver_.check(d);
  if (d.is_zero()) throw InvalidInput("semistable motive of the zero dimension vector");
  if (auto it = semistable_.find(d); it != semistable_.end()) return it->second;

  // Split off the first HN factor d1 (largest slope); the rest is a tail
  // with all slopes strictly below slope(d1).
  std::vector<RationalMotive> strata;
  for (const auto& d1 : nonzero_vectors_below(d)) {
    if (d1 == d) continue;
    const DimVector rest = d - d1;
    const mpq_class mu1 = slope(theta_, d1);
    const RationalMotive& t = tail(rest, mu1);
    if (t.is_zero()) continue;
    const RationalMotive& s1 = (*this)(d1);
    if (s1.is_zero()) continue;
    const long twist = euler_form(quiver_, rest, d1);
    strata.push_back((s1 * t).shifted(static_cast<int>(-2 * twist)));
  }
  RationalMotive s = stack_motive(quiver_, d) - sum(strata);
  return semistable_.emplace(d, std::move(s)).first->second;
}

const RationalMotive& SemistableMotives::tail(const DimVector& e, const mpq_class& bound) {
  static const RationalMotive kOne(1);
  if (e.is_zero()) return kOne;
  const auto key = std::make_pair(e, bound);
  if (auto it = tail_.find(key); it != tail_.end()) return it->second;

  std::vector<RationalMotive> terms;
  for (const auto& e1 : nonzero_vectors_below(e)) {
    const mpq_class mu1 = slope(theta_, e1);
    if (!(mu1 < bound)) continue;
    const DimVector rest = e - e1;
    const RationalMotive& t = tail(rest, mu1);
    if (t.is_zero()) continue;
    const RationalMotive& s1 = (*this)(e1);
    if (s1.is_zero()) continue;
    const long twist = euler_form(quiver_, rest, e1);
    terms.push_back((s1 * t).shifted(static_cast<int>(-2 * twist)));
  }
  return tail_.emplace(key, sum(terms)).first->second;
}

RationalMotive ss_stack_motive(const Quiver& q, const StabilityWeights& theta, const DimVector& d,
                               SemistableMotives& memo) {
  if (!(memo.quiver() == q) || !(memo.stability() == theta)) {
    throw InvalidInput("memo table belongs to a different quiver or stability");
  }
  return memo(d);
}

RationalMotive ss_stack_motive(const Quiver& q, const StabilityWeights& theta, const DimVector& d) {
  SemistableMotives memo(q, theta);
  return memo(d);
}

}  // namespace qdt
