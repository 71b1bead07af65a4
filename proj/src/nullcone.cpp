#include <algorithm>

#include "qdt/dt.hpp"
#include "qdt/errors.hpp"

namespace qdt {

mpq_class nullcone_bound(const Quiver& q, const DimVector& d) {
  q.check(d);
  if (!is_symmetric(q)) throw SymmetryViolation("the nullcone bound is stated for symmetric quivers only");
  long loops_term = 0;
  for (std::size_t i = 0; i < q.size(); ++i) {
    const DimVector e = DimVector::unit(q.size(), i);
    loops_term += euler_form(q, e, e) * d[i];
  }
  mpq_class b(-euler_form(q, d, d) + loops_term, 2);
  b.canonicalize();
  return b - d.total();
}

mpq_class thin_decomposition_value(const Quiver& q, const DimVector& d, const std::vector<DimVector>& parts) {
  q.check(d);
  DimVector acc = DimVector::zero(q.size());
  for (const auto& p : parts) {
    q.check(p);
    if (p.total() != 1) throw InvalidInput("thin decompositions consist of unit vectors, got " + p.to_string());
    acc = acc + p;
  }
  if (!(acc == d)) throw InvalidInput("decomposition does not sum to " + d.to_string());
  long value = 0;
  for (std::size_t k = 0; k < parts.size(); ++k) {
    for (std::size_t l = k + 1; l < parts.size(); ++l) value -= euler_form(q, parts[l], parts[k]);
    for (int x : parts[k].entries()) value -= static_cast<long>(x) * x;
  }
  return value;
}

std::vector<std::vector<DimVector>> thin_decompositions(const DimVector& d) {
  std::vector<int> vertices;
  for (std::size_t i = 0; i < d.size(); ++i) {
    for (int k = 0; k < d[i]; ++k) vertices.push_back(static_cast<int>(i));
  }
  std::vector<std::vector<DimVector>> out;
  do {
    std::vector<DimVector> parts;
    parts.reserve(vertices.size());
    for (int v : vertices) parts.push_back(DimVector::unit(d.size(), static_cast<std::size_t>(v)));
    out.push_back(std::move(parts));
  } while (std::next_permutation(vertices.begin(), vertices.end()));
  return out;
}

}  // namespace qdt
