#include "hexforms/linalg.hpp"

namespace hexforms {

namespace {

struct Echelon {
  FracMatrix rows;
  std::vector<int> pivot_col;  // per row
};

Echelon reduce(FracMatrix mat, const RingPtr& ring) {
  int m = static_cast<int>(mat.size());
  int n = m == 0 ? 0 : static_cast<int>(mat[0].size());
  Echelon ech;
  int row = 0;
  for (int col = 0; col < n && row < m; ++col) {
    int pivot = -1;
    for (int r = row; r < m; ++r) {
      if (!mat[r][col].is_zero()) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(mat[row], mat[pivot]);
    Frac inv = mat[row][col].inv();
    for (int c = col; c < n; ++c) mat[row][c] = mat[row][c] * inv;
    for (int r = 0; r < m; ++r) {
      if (r == row || mat[r][col].is_zero()) continue;
      Frac factor = mat[r][col];
      for (int c = col; c < n; ++c) mat[r][c] = mat[r][c] - factor * mat[row][c];
    }
    ech.pivot_col.push_back(col);
    ++row;
  }
  mat.resize(row);
  ech.rows = std::move(mat);
  (void)ring;
  return ech;
}

}  // namespace

std::vector<std::vector<Frac>> kernel_basis(const FracMatrix& mat, const RingPtr& ring) {
  int n = mat.empty() ? 0 : static_cast<int>(mat[0].size());
  Echelon ech = reduce(mat, ring);
  std::vector<int> pivot_of_col(n, -1);
  for (size_t r = 0; r < ech.pivot_col.size(); ++r) pivot_of_col[ech.pivot_col[r]] = static_cast<int>(r);
  std::vector<std::vector<Frac>> basis;
  for (int free = 0; free < n; ++free) {
    if (pivot_of_col[free] >= 0) continue;
    std::vector<Frac> v(n, Frac::zero(ring));
    v[free] = Frac::constant(ring, GaussRational(1));
    for (int col = 0; col < n; ++col) {
      int r = pivot_of_col[col];
      if (r >= 0) v[col] = -ech.rows[r][free];
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

FracMatrix invert(const FracMatrix& mat, const RingPtr& ring) {
  int n = static_cast<int>(mat.size());
  FracMatrix aug(n, std::vector<Frac>(2 * n, Frac::zero(ring)));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug[i][j] = mat[i][j];
    aug[i][n + i] = Frac::constant(ring, GaussRational(1));
  }
  Echelon ech = reduce(std::move(aug), ring);
  if (static_cast<int>(ech.pivot_col.size()) != n || ech.pivot_col[n - 1] != n - 1)
    fail(ErrorKind::Internal, "matrix is singular");
  FracMatrix inv(n, std::vector<Frac>(n, Frac::zero(ring)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv[i][j] = ech.rows[i][n + j];
  return inv;
}

std::vector<Frac> solve(const FracMatrix& mat, const std::vector<Frac>& rhs, const RingPtr& ring) {
  int m = static_cast<int>(mat.size());
  int n = m == 0 ? 0 : static_cast<int>(mat[0].size());
  FracMatrix aug(m, std::vector<Frac>(n + 1, Frac::zero(ring)));
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) aug[i][j] = mat[i][j];
    aug[i][n] = rhs[i];
  }
  Echelon ech = reduce(std::move(aug), ring);
  std::vector<Frac> x(n, Frac::zero(ring));
  for (size_t r = 0; r < ech.pivot_col.size(); ++r) {
    if (ech.pivot_col[r] == n)
      fail(ErrorKind::Internal, "linear system is inconsistent");
    x[ech.pivot_col[r]] = ech.rows[r][n];
  }
  return x;
}

}  // namespace hexforms
