#ifndef CLANS_LINALG_HPP
#define CLANS_LINALG_HPP

#include <vector>

#include "clans/rational.hpp"

namespace clans {

// Dense row-major matrix of rationals. Sized for flags over small n;
// no cleverness, exactness is the whole point.
struct RatMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<Rational> a;

  RatMatrix() = default;
  RatMatrix(int r, int c) : rows(r), cols(c), a(std::size_t(r) * c) {}

  Rational& at(int r, int c) { return a[std::size_t(r) * cols + c]; }
  const Rational& at(int r, int c) const {
    return a[std::size_t(r) * cols + c];
  }

  static RatMatrix identity(int n);

  friend bool operator==(const RatMatrix&, const RatMatrix&) = default;
};

RatMatrix mul(const RatMatrix& a, const RatMatrix& b);
std::vector<Rational> mul(const RatMatrix& a, const std::vector<Rational>& v);

// Columns side by side: [a | b].
RatMatrix hstack(const RatMatrix& a, const RatMatrix& b);

// n-row matrix whose columns are the given vectors.
RatMatrix from_columns(int n, const std::vector<std::vector<Rational>>& cols);

// First k columns of a.
RatMatrix column_prefix(const RatMatrix& a, int k);

// Rank by Gaussian elimination, exact.
int rank_of(RatMatrix m);

}  // namespace clans

#endif  // CLANS_LINALG_HPP
