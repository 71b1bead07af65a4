#include "qdt/dt.hpp"
#include "qdt/errors.hpp"

namespace qdt {

TruncatedSeries framed_series(const DTResult& dt, const DimVector& f, bool normalized, Exec exec) {
  dt.quiver.check(f);
  if (normalized) {
    for (std::size_t i = 0; i < f.size(); ++i) {
      if (f[i] % 2 != 0) {
        throw FramingViolation("normalized framed series needs an even framing vector, got f = " + f.to_string());
      }
    }
  }
  TruncatedSeries terms(dt.box);
  for (const auto& [d, w] : dt.omega) {
    if (w.is_zero()) continue;
    long fd = 0;
    for (std::size_t i = 0; i < d.size(); ++i) fd += static_cast<long>(f[i]) * d[i];
    if (fd == 0) {
      throw FramingViolation("framing " + f.to_string() + " pairs to zero with " + d.to_string() +
                             ", where the DT invariant is nonzero");
    }
    const int n = static_cast<int>(fd);
    const LaurentPoly weight = normalized ? proj_vir(n) : proj_space(n).shifted(1);
    terms.set(d, w * RationalMotive(weight));
  }
  return plethystic_exp(terms, exec);
}

TruncatedSeries framed_series(const Quiver& q, const std::optional<StabilityWeights>& stability,
                              const std::optional<mpq_class>& mu, const DimVector& f, const DimVector& box,
                              bool normalized, Exec exec) {
  q.check(f);
  if (normalized) {
    // Reject before running the DT computation.
    for (std::size_t i = 0; i < f.size(); ++i) {
      if (f[i] % 2 != 0) {
        throw FramingViolation("normalized framed series needs an even framing vector, got f = " + f.to_string());
      }
    }
  }
  return framed_series(dt_series(q, stability, mu, box, exec), f, normalized, exec);
}

TruncatedSeries local_dt(const ExtQuiverSpec& spec, const DimVector& box, Exec exec) {
  const Quiver q = ext_quiver(spec);
  const DTResult dt = dt_series(q, std::nullopt, std::nullopt, box, exec);
  TruncatedSeries s(box);
  for (const auto& [d, w] : dt.omega) s.set(d, w.bar());
  return s;
}

}  // namespace qdt
