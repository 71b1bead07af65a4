#include "qdt/quiver.hpp"

#include "qdt/errors.hpp"

namespace qdt {

namespace {

void validate_matrix(const std::vector<std::vector<int>>& a, std::size_t n) {
  if (a.size() != n) throw InvalidInput("arrow matrix must have one row per vertex");
  for (const auto& row : a) {
    if (row.size() != n) throw InvalidInput("arrow matrix must be square");
    for (int x : row) {
      if (x < 0) throw InvalidInput("arrow multiplicities must be nonnegative");
    }
  }
}

}  // namespace

Quiver::Quiver(std::vector<std::string> labels, std::vector<std::vector<int>> arrows)
    : labels_(std::move(labels)), arrows_(std::move(arrows)) {
  validate_matrix(arrows_, labels_.size());
}

Quiver::Quiver(std::vector<std::vector<int>> arrows) : arrows_(std::move(arrows)) {
  for (std::size_t i = 0; i < arrows_.size(); ++i) labels_.push_back(std::to_string(i + 1));
  validate_matrix(arrows_, labels_.size());
}

Quiver Quiver::loops(int m) { return Quiver({"1"}, {{m}}); }

Quiver Quiver::kronecker(int m) { return Quiver({"1", "2"}, {{0, m}, {0, 0}}); }

std::optional<std::size_t> Quiver::index_of(const std::string& label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i] == label) return i;
  }
  return std::nullopt;
}

void Quiver::check(const DimVector& d) const {
  if (d.size() != size()) {
    throw InvalidInput("dimension vector " + d.to_string() + " does not match a quiver with " +
                       std::to_string(size()) + " vertices");
  }
}

long euler_form(const Quiver& q, const DimVector& d, const DimVector& e) {
  q.check(d);
  q.check(e);
  long r = 0;
  for (std::size_t i = 0; i < q.size(); ++i) {
    r += static_cast<long>(d[i]) * e[i];
    for (std::size_t j = 0; j < q.size(); ++j) {
      r -= static_cast<long>(q.arrows(i, j)) * d[i] * e[j];
    }
  }
  return r;
}

long antisym_form(const Quiver& q, const DimVector& d, const DimVector& e) {
  return euler_form(q, d, e) - euler_form(q, e, d);
}

bool is_symmetric(const Quiver& q) {
  for (std::size_t i = 0; i < q.size(); ++i) {
    for (std::size_t j = i + 1; j < q.size(); ++j) {
      if (q.arrows(i, j) != q.arrows(j, i)) return false;
    }
  }
  return true;
}

mpq_class slope(const StabilityWeights& theta, const DimVector& d) {
  if (theta.theta.size() != d.size()) throw InvalidInput("stability weights do not match dimension vector");
  if (d.is_zero()) throw InvalidInput("slope of the zero dimension vector is undefined");
  long num = 0;
  for (std::size_t i = 0; i < d.size(); ++i) num += static_cast<long>(theta.theta[i]) * d[i];
  mpq_class r(num, d.total());
  r.canonicalize();
  return r;
}

bool is_mu_generic(const Quiver& q, const StabilityWeights& theta, const mpq_class& mu,
                   const DimVector& box) {
  q.check(box);
  std::vector<DimVector> cls;
  for (auto& d : nonzero_vectors_below(box)) {
    if (slope(theta, d) == mu) cls.push_back(std::move(d));
  }
  for (std::size_t a = 0; a < cls.size(); ++a) {
    for (std::size_t b = a + 1; b < cls.size(); ++b) {
      if (antisym_form(q, cls[a], cls[b]) != 0) return false;
    }
  }
  return true;
}

Quiver framed_quiver(const Quiver& q, const DimVector& f) {
  q.check(f);
  const std::size_t n = q.size();
  std::vector<std::vector<int>> a(n + 1, std::vector<int>(n + 1, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = q.arrows(i, j);
    a[n][i] = f[i];
  }
  auto labels = q.labels();
  labels.push_back("inf");
  return Quiver(std::move(labels), std::move(a));
}

Quiver ext_quiver(const ExtQuiverSpec& spec) {
  const std::size_t s = spec.gram.size();
  if (spec.multiplicities.size() != 0 && spec.multiplicities.size() != s) {
    throw InvalidInput("multiplicities must have one entry per simple factor");
  }
  std::vector<std::vector<int>> a(s, std::vector<int>(s, 0));
  for (std::size_t k = 0; k < s; ++k) {
    if (spec.gram[k].size() != s) throw InvalidInput("gram matrix must be square");
    for (std::size_t l = 0; l < s; ++l) {
      if (spec.gram[k][l] != spec.gram[l][k]) throw InvalidInput("gram matrix must be symmetric");
      const int arrows = (k == l ? 1 : 0) - spec.gram[k][l];
      if (arrows < 0) {
        throw InvalidInput("invalid pairing data: delta_kl - p[" + std::to_string(k) + "][" +
                           std::to_string(l) + "] is negative");
      }
      a[k][l] = arrows;
    }
  }
  return Quiver(std::move(a));
}

}  // namespace qdt
