#pragma once

#include <json.hpp>

#include "qdt/dt.hpp"
#include "qdt/laurent_poly.hpp"
#include "qdt/quiver.hpp"
#include "qdt/rational_motive.hpp"
#include "qdt/series.hpp"

namespace qdt {

using Json = nlohmann::ordered_json;

// {"-1": "1", "1": "-3/2"}: exponents ascending, exact coefficients.
Json to_json(const LaurentPoly& p);
LaurentPoly laurent_from_json(const Json& j);

// {"num": {...}, "den": {...}} with the denominator expanded.
Json to_json(const RationalMotive& x);
RationalMotive motive_from_json(const Json& j);

Json to_json(const DimVector& d);
DimVector dim_vector_from_json(const Json& j);

// {"vertices": [..], "arrows": [[src, dst, multiplicity], ..]}.
Json to_json(const Quiver& q);
Quiver quiver_from_json(const Json& j);

// {"box": [..], "coeffs": [{"d": [..], "value": {num, den}}, ..]}, nonzero
// coefficients only, graded-lex.
Json to_json(const TruncatedSeries& s);
TruncatedSeries series_from_json(const Json& j);

// {"quiver", "theta", "mu", "box", "dt": [{"d", "omega", "integral", "betti"}]}.
// betti is null when Omega_d has no Betti reading; it is ignored on input.
Json to_json(const DTResult& r);
DTResult dt_result_from_json(const Json& j);

Json to_json(const std::map<int, mpz_class>& betti);

}  // namespace qdt
