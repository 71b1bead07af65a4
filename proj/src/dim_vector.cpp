#include "qdt/dim_vector.hpp"

#include <algorithm>
#include <numeric>

#include "qdt/errors.hpp"

namespace qdt {

DimVector::DimVector(std::vector<int> entries) : entries_(std::move(entries)) {
  for (int x : entries_) {
    if (x < 0) throw InvalidInput("dimension vector entries must be nonnegative");
  }
  total_ = std::accumulate(entries_.begin(), entries_.end(), 0);
}

DimVector DimVector::unit(std::size_t n, std::size_t i) {
  std::vector<int> e(n, 0);
  e.at(i) = 1;
  return DimVector(std::move(e));
}

bool DimVector::leq(const DimVector& other) const {
  if (size() != other.size()) return false;
  for (std::size_t i = 0; i < size(); ++i) {
    if (entries_[i] > other.entries_[i]) return false;
  }
  return true;
}

DimVector DimVector::operator+(const DimVector& other) const {
  if (size() != other.size()) throw InvalidInput("dimension vector size mismatch");
  std::vector<int> r(entries_);
  for (std::size_t i = 0; i < size(); ++i) r[i] += other.entries_[i];
  return DimVector(std::move(r));
}

DimVector DimVector::operator-(const DimVector& other) const {
  if (size() != other.size()) throw InvalidInput("dimension vector size mismatch");
  std::vector<int> r(entries_);
  for (std::size_t i = 0; i < size(); ++i) r[i] -= other.entries_[i];
  return DimVector(std::move(r));
}

DimVector DimVector::scaled(int n) const {
  std::vector<int> r(entries_);
  for (int& x : r) x *= n;
  return DimVector(std::move(r));
}

std::string DimVector::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < size(); ++i) {
    if (i) s += ",";
    s += std::to_string(entries_[i]);
  }
  return s + ")";
}

bool graded_lex_less(const DimVector& a, const DimVector& b) {
  if (a.total() != b.total()) return a.total() < b.total();
  return a < b;
}

std::vector<DimVector> nonzero_vectors_below(const DimVector& box) {
  std::vector<DimVector> out;
  std::vector<int> cur(box.size(), 0);
  while (true) {
    DimVector d(cur);
    if (!d.is_zero()) out.push_back(std::move(d));
    std::size_t i = 0;
    for (; i < cur.size(); ++i) {
      if (cur[i] < box[i]) {
        ++cur[i];
        break;
      }
      cur[i] = 0;
    }
    if (i == cur.size()) break;
  }
  std::sort(out.begin(), out.end(), graded_lex_less);
  return out;
}

}  // namespace qdt
