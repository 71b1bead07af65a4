#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace qdt {

// Dimension vector: one natural number per vertex, indexed by vertex position.
class DimVector {
 public:
  DimVector() = default;
  explicit DimVector(std::vector<int> entries);
  DimVector(std::initializer_list<int> entries) : DimVector(std::vector<int>(entries)) {}

  static DimVector zero(std::size_t n) { return DimVector(std::vector<int>(n, 0)); }
  static DimVector unit(std::size_t n, std::size_t i);

  std::size_t size() const { return entries_.size(); }
  int operator[](std::size_t i) const { return entries_[i]; }
  const std::vector<int>& entries() const { return entries_; }
  int total() const { return total_; }
  bool is_zero() const { return total_ == 0; }

  // Componentwise d <= other.
  bool leq(const DimVector& other) const;

  DimVector operator+(const DimVector& other) const;
  // Throws InvalidInput when the result would have a negative entry.
  DimVector operator-(const DimVector& other) const;
  DimVector scaled(int n) const;

  bool operator==(const DimVector& other) const { return entries_ == other.entries_; }
  // Lexicographic; see graded_lex_less for output ordering.
  auto operator<=>(const DimVector& other) const { return entries_ <=> other.entries_; }

  std::string to_string() const;

 private:
  std::vector<int> entries_;
  int total_ = 0;
};

// Total degree first, then lexicographic.
bool graded_lex_less(const DimVector& a, const DimVector& b);

struct GradedLexLess {
  bool operator()(const DimVector& a, const DimVector& b) const { return graded_lex_less(a, b); }
};

// All nonzero d with d <= box componentwise, in graded-lex order.
std::vector<DimVector> nonzero_vectors_below(const DimVector& box);

}  // namespace qdt
