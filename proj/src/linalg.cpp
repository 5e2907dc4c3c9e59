#include "glmn/linalg.hpp"

namespace glmn {

long gauss_rank(Matrix a) {
  if (a.empty()) return 0;
  size_t rows = a.size(), cols = a[0].size();
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t pivot = r;
    while (pivot < rows && a[pivot][c].is_zero()) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[r], a[pivot]);
    Scalar inv = a[r][c].inverse();
    for (size_t j = c; j < cols; ++j) a[r][j] *= inv;
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c].is_zero()) continue;
      Scalar f = a[i][c];
      for (size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    ++r;
  }
  return static_cast<long>(r);
}

std::optional<std::vector<Scalar>> gauss_solve(Matrix a, std::vector<Scalar> b) {
  size_t rows = a.size();
  size_t cols = rows ? a[0].size() : 0;
  long p = 0;
  if (rows && cols)
    p = a[0][0].characteristic();
  else if (!b.empty())
    p = b[0].characteristic();

  std::vector<long> pivot_col;
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t pivot = r;
    while (pivot < rows && a[pivot][c].is_zero()) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[r], a[pivot]);
    std::swap(b[r], b[pivot]);
    Scalar inv = a[r][c].inverse();
    for (size_t j = c; j < cols; ++j) a[r][j] *= inv;
    b[r] *= inv;
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c].is_zero()) continue;
      Scalar f = a[i][c];
      for (size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
      b[i] -= f * b[r];
    }
    pivot_col.push_back(static_cast<long>(c));
    ++r;
  }
  for (size_t i = r; i < rows; ++i)
    if (!b[i].is_zero()) return std::nullopt;

  std::vector<Scalar> x(cols, Scalar::zero(p));
  for (size_t k = 0; k < pivot_col.size(); ++k)
    x[static_cast<size_t>(pivot_col[k])] = b[k];
  return x;
}

}  // namespace glmn
