#pragma once

#include "qdt/dim_vector.hpp"
#include "qdt/quiver.hpp"
#include "qdt/rational_motive.hpp"

namespace qdt {

// [G_d] = prod_i L^(d_i choose 2) prod_{n=1}^{d_i} (L^n - 1).
RationalMotive gl_motive(const DimVector& d);

// 1 / [G_d], built directly in factored form.
RationalMotive inverse_gl_motive(const DimVector& d);

// [R_d] = L^(sum_ij a_ij d_i d_j).
RationalMotive rep_space_motive(const Quiver& q, const DimVector& d);

// Exponent of L in [R_d].
long rep_space_dimension(const Quiver& q, const DimVector& d);

}  // namespace qdt
