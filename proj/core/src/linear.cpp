#include "linkobs/linear.hpp"

#include <cassert>
#include <stdexcept>

namespace linkobs {

LinearSolution solve_linear(RatMatrix A, std::vector<Rat> b) {
  const std::size_t rows = A.size();
  const std::size_t cols = rows ? A[0].size() : 0;
  if (b.size() != rows) throw std::invalid_argument("solve_linear: shape mismatch");

  std::vector<std::size_t> pivot_col_of_row;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && A[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(A[pivot], A[rank]);
    std::swap(b[pivot], b[rank]);
    Rat inv = A[rank][col];
    for (std::size_t j = col; j < cols; ++j) A[rank][j] /= inv;
    b[rank] /= inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || A[r][col] == 0) continue;
      Rat f = A[r][col];
      for (std::size_t j = col; j < cols; ++j) A[r][j] -= f * A[rank][j];
      b[r] -= f * b[rank];
    }
    pivot_col_of_row.push_back(col);
    ++rank;
  }
  for (std::size_t r = rank; r < rows; ++r)
    if (b[r] != 0) return {LinearSolution::Kind::None, {}};
  if (rank < cols) return {LinearSolution::Kind::Underdetermined, {}};

  std::vector<Rat> x(cols, Rat(0));
  for (std::size_t r = 0; r < rank; ++r) x[pivot_col_of_row[r]] = b[r];
  return {LinearSolution::Kind::Unique, std::move(x)};
}

std::size_t rat_rank(RatMatrix A) {
  const std::size_t rows = A.size();
  const std::size_t cols = rows ? A[0].size() : 0;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && A[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(A[pivot], A[rank]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      if (A[r][col] == 0) continue;
      Rat f = A[r][col] / A[rank][col];
      for (std::size_t j = col; j < cols; ++j) A[r][j] -= f * A[rank][j];
    }
    ++rank;
  }
  return rank;
}

std::size_t affine_rank(const std::vector<Point>& pts) {
  if (pts.size() <= 1) return 0;
  RatMatrix diffs;
  for (std::size_t i = 1; i < pts.size(); ++i) {
    if (pts[i].size() != pts[0].size())
      throw std::invalid_argument("affine_rank: mixed ambient dimensions");
    std::vector<Rat> row(pts[i].size());
    for (std::size_t j = 0; j < row.size(); ++j) row[j] = pts[i][j] - pts[0][j];
    diffs.push_back(std::move(row));
  }
  return rat_rank(std::move(diffs));
}

bool affinely_independent(const std::vector<Point>& pts) {
  return affine_rank(pts) == pts.size() - 1;
}

namespace {

// Dense simplex tableau over exact rationals.
struct Tableau {
  RatMatrix a;             // m x n, basis-reduced
  std::vector<Rat> rhs;    // m, always >= 0
  std::vector<std::size_t> basis;  // m basic variable indices

  std::size_t m() const { return a.size(); }
  std::size_t n() const { return a.empty() ? 0 : a[0].size(); }

  void pivot(std::size_t row, std::size_t col) {
    Rat p = a[row][col];
    for (auto& v : a[row]) v /= p;
    rhs[row] /= p;
    for (std::size_t r = 0; r < m(); ++r) {
      if (r == row || a[r][col] == 0) continue;
      Rat f = a[r][col];
      for (std::size_t j = 0; j < n(); ++j) a[r][j] -= f * a[row][j];
      rhs[r] -= f * rhs[row];
    }
    basis[row] = col;
  }

  // Maximize c.x with Bland's rule. Returns false iff unbounded.
  bool maximize(const std::vector<Rat>& c) {
    for (;;) {
      // Reduced costs z_j - c_j from the current basis.
      std::optional<std::size_t> enter;
      for (std::size_t j = 0; j < n(); ++j) {
        Rat z(0);
        for (std::size_t r = 0; r < m(); ++r) z += c[basis[r]] * a[r][j];
        if (z - c[j] < 0) {
          enter = j;
          break;  // Bland: first improving index
        }
      }
      if (!enter) return true;
      std::optional<std::size_t> leave;
      Rat best;
      for (std::size_t r = 0; r < m(); ++r) {
        if (a[r][*enter] <= 0) continue;
        Rat ratio = rhs[r] / a[r][*enter];
        if (!leave || ratio < best ||
            (ratio == best && basis[r] < basis[*leave])) {
          leave = r;
          best = ratio;
        }
      }
      if (!leave) return false;
      pivot(*leave, *enter);
    }
  }

  Rat objective(const std::vector<Rat>& c) const {
    Rat v(0);
    for (std::size_t r = 0; r < m(); ++r) v += c[basis[r]] * rhs[r];
    return v;
  }

  std::vector<Rat> point(std::size_t vars) const {
    std::vector<Rat> x(vars, Rat(0));
    for (std::size_t r = 0; r < m(); ++r)
      if (basis[r] < vars) x[basis[r]] = rhs[r];
    return x;
  }
};

}  // namespace

LpResult lp_maximize(const RatMatrix& A, const std::vector<Rat>& b,
                     const std::vector<Rat>& c) {
  const std::size_t m = A.size();
  const std::size_t n = m ? A[0].size() : c.size();
  if (b.size() != m || c.size() != n) throw std::invalid_argument("lp_maximize: shape mismatch");

  Tableau t;
  t.a.resize(m, std::vector<Rat>(n + m, Rat(0)));
  t.rhs.resize(m);
  t.basis.resize(m);
  for (std::size_t r = 0; r < m; ++r) {
    bool flip = b[r] < 0;
    for (std::size_t j = 0; j < n; ++j) t.a[r][j] = flip ? -A[r][j] : A[r][j];
    t.rhs[r] = flip ? -b[r] : b[r];
    t.a[r][n + r] = 1;  // artificial
    t.basis[r] = n + r;
  }

  // Phase 1: drive artificials to zero.
  std::vector<Rat> phase1(n + m, Rat(0));
  for (std::size_t r = 0; r < m; ++r) phase1[n + r] = -1;
  t.maximize(phase1);  // bounded by construction (objective <= 0)
  if (t.objective(phase1) != 0) return {};

  // Remove artificials from the basis; a row that cannot pivot them out is
  // a redundant constraint and gets dropped.
  for (std::size_t r = 0; r < t.m();) {
    if (t.basis[r] < n) {
      ++r;
      continue;
    }
    std::optional<std::size_t> col;
    for (std::size_t j = 0; j < n; ++j)
      if (t.a[r][j] != 0) {
        col = j;
        break;
      }
    if (col) {
      t.pivot(r, *col);
      ++r;
    } else {
      t.a.erase(t.a.begin() + static_cast<std::ptrdiff_t>(r));
      t.rhs.erase(t.rhs.begin() + static_cast<std::ptrdiff_t>(r));
      t.basis.erase(t.basis.begin() + static_cast<std::ptrdiff_t>(r));
    }
  }
  for (auto& row : t.a) row.resize(n);

  LpResult out;
  out.feasible = true;

  std::vector<Rat> goal = c;
  if (!t.maximize(goal)) {
    out.unbounded = true;
    out.x = t.point(n);
    return out;
  }
  out.value = t.objective(goal);
  out.x = t.point(n);
  return out;
}

bool lp_feasible(const RatMatrix& A, const std::vector<Rat>& b) {
  const std::size_t n = A.empty() ? 0 : A[0].size();
  return lp_maximize(A, b, std::vector<Rat>(n, Rat(0))).feasible;
}

}  // namespace linkobs
