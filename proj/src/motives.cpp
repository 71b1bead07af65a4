#include "qdt/motives.hpp"

namespace qdt {

RationalMotive gl_motive(const DimVector& d) {
  LaurentPoly p = 1;
  int shift = 0;
  for (int di : d.entries()) {
    shift += di * (di - 1);
    for (int n = 1; n <= di; ++n) p *= LaurentPoly::v(2 * n) - 1;
  }
  return RationalMotive(p.shifted(shift));
}

RationalMotive inverse_gl_motive(const DimVector& d) {
  CycloExponents den;
  int shift = 0;
  for (int di : d.entries()) {
    shift -= di * (di - 1);
    for (int n = 1; n <= di; ++n) den = cyclo_add(den, factor_L_power_minus_one(n));
  }
  return RationalMotive::over_cyclotomics(LaurentPoly::v(shift), std::move(den));
}

long rep_space_dimension(const Quiver& q, const DimVector& d) {
  q.check(d);
  long r = 0;
  for (std::size_t i = 0; i < q.size(); ++i) {
    for (std::size_t j = 0; j < q.size(); ++j) r += static_cast<long>(q.arrows(i, j)) * d[i] * d[j];
  }
  return r;
}

RationalMotive rep_space_motive(const Quiver& q, const DimVector& d) {
  return RationalMotive(LaurentPoly::v(static_cast<int>(2 * rep_space_dimension(q, d))));
}

}  // namespace qdt
