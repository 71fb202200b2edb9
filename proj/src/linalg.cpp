#include "clans/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace clans {

RatMatrix RatMatrix::identity(int n) {
  RatMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

RatMatrix mul(const RatMatrix& a, const RatMatrix& b) {
  if (a.cols != b.rows)
    throw std::invalid_argument("matrix product shape mismatch");
  RatMatrix out(a.rows, b.cols);
  for (int i = 0; i < a.rows; ++i)
    for (int k = 0; k < a.cols; ++k) {
      const Rational& aik = a.at(i, k);
      if (aik.is_zero()) continue;
      for (int j = 0; j < b.cols; ++j) {
        const Rational& bkj = b.at(k, j);
        if (!bkj.is_zero()) out.at(i, j) += aik * bkj;
      }
    }
  return out;
}

std::vector<Rational> mul(const RatMatrix& a, const std::vector<Rational>& v) {
  if (a.cols != static_cast<int>(v.size()))
    throw std::invalid_argument("matrix-vector shape mismatch");
  std::vector<Rational> out(a.rows);
  for (int i = 0; i < a.rows; ++i)
    for (int j = 0; j < a.cols; ++j)
      if (!a.at(i, j).is_zero() && !v[j].is_zero())
        out[i] += a.at(i, j) * v[j];
  return out;
}

RatMatrix hstack(const RatMatrix& a, const RatMatrix& b) {
  if (a.rows != b.rows) throw std::invalid_argument("hstack row mismatch");
  RatMatrix out(a.rows, a.cols + b.cols);
  for (int i = 0; i < a.rows; ++i) {
    for (int j = 0; j < a.cols; ++j) out.at(i, j) = a.at(i, j);
    for (int j = 0; j < b.cols; ++j) out.at(i, a.cols + j) = b.at(i, j);
  }
  return out;
}

RatMatrix from_columns(int n, const std::vector<std::vector<Rational>>& cols) {
  RatMatrix out(n, static_cast<int>(cols.size()));
  for (int j = 0; j < out.cols; ++j) {
    if (static_cast<int>(cols[j].size()) != n)
      throw std::invalid_argument("column length mismatch");
    for (int i = 0; i < n; ++i) out.at(i, j) = cols[j][i];
  }
  return out;
}

RatMatrix column_prefix(const RatMatrix& a, int k) {
  if (k < 0 || k > a.cols)
    throw std::invalid_argument("column prefix out of range");
  RatMatrix out(a.rows, k);
  for (int i = 0; i < a.rows; ++i)
    for (int j = 0; j < k; ++j) out.at(i, j) = a.at(i, j);
  return out;
}

int rank_of(RatMatrix m) {
  int rank = 0;
  for (int col = 0; col < m.cols && rank < m.rows; ++col) {
    int pivot = -1;
    for (int r = rank; r < m.rows; ++r)
      if (!m.at(r, col).is_zero()) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != rank)
      for (int c = col; c < m.cols; ++c)
        std::swap(m.at(pivot, c), m.at(rank, c));
    const Rational lead = m.at(rank, col);
    for (int r = rank + 1; r < m.rows; ++r) {
      if (m.at(r, col).is_zero()) continue;
      const Rational factor = m.at(r, col) / lead;
      m.at(r, col) = 0;
      for (int c = col + 1; c < m.cols; ++c)
        m.at(r, c) -= factor * m.at(rank, c);
    }
    ++rank;
  }
  return rank;
}

}  // namespace clans
