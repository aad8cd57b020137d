#include "linkobs/bitmatrix.hpp"

#include <bit>
#include <stdexcept>

namespace linkobs {

std::size_t BitVec::weight() const {
  std::size_t total = 0;
  for (std::uint64_t word : w_) total += static_cast<std::size_t>(std::popcount(word));
  return total;
}

BitVec BitMatrix::row(std::size_t r) const {
  BitVec v(cols_);
  for (std::size_t c = 0; c < cols_; ++c)
    if (get(r, c)) v.set(c, true);
  return v;
}

BitVec BitMatrix::mul(const BitVec& x) const {
  if (x.size() != cols_) throw std::invalid_argument("BitMatrix::mul: size mismatch");
  BitVec y(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    bool acc = false;
    for (std::size_t c = 0; c < cols_; ++c)
      if (get(r, c) && x.get(c)) acc = !acc;
    y.set(r, acc);
  }
  return y;
}

BitMatrix BitMatrix::identity(std::size_t n) {
  BitMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
  return m;
}

std::size_t gf2_rank(const BitMatrix& input) {
  BitMatrix m = input;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
    std::size_t pivot = rank;
    while (pivot < m.rows() && !m.get(pivot, col)) ++pivot;
    if (pivot == m.rows()) continue;
    m.swap_rows(pivot, rank);
    for (std::size_t r = 0; r < m.rows(); ++r)
      if (r != rank && m.get(r, col)) m.xor_row_into(rank, r);
    ++rank;
  }
  return rank;
}

Gf2Solver::Gf2Solver(const BitMatrix& m)
    : reduced_(m),
      transform_(BitMatrix::identity(m.rows())),
      cols_(m.cols()),
      original_(m) {
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols_ && rank < reduced_.rows(); ++col) {
    std::size_t pivot = rank;
    while (pivot < reduced_.rows() && !reduced_.get(pivot, col)) ++pivot;
    if (pivot == reduced_.rows()) continue;
    reduced_.swap_rows(pivot, rank);
    transform_.swap_rows(pivot, rank);
    for (std::size_t r = 0; r < reduced_.rows(); ++r)
      if (r != rank && reduced_.get(r, col)) {
        reduced_.xor_row_into(rank, r);
        transform_.xor_row_into(rank, r);
      }
    pivots_.emplace_back(rank, col);
    ++rank;
  }
}

std::optional<BitVec> Gf2Solver::solve(const BitVec& b) const {
  if (b.size() != original_.rows()) throw std::invalid_argument("Gf2Solver::solve: size mismatch");
  BitVec c = transform_.mul(b);
  for (std::size_t r = pivots_.size(); r < original_.rows(); ++r)
    if (c.get(r)) return std::nullopt;
  BitVec x(cols_);
  for (const auto& [row, col] : pivots_)
    if (c.get(row)) x.set(col, true);
  if (!(original_.mul(x) == b)) return std::nullopt;  // verification, never expected to fire
  return x;
}

std::optional<BitVec> gf2_solve(const BitMatrix& m, const BitVec& b) {
  return Gf2Solver(m).solve(b);
}

std::vector<BitVec> gf2_kernel_basis(const BitMatrix& input) {
  BitMatrix m = input;
  std::vector<std::pair<std::size_t, std::size_t>> pivots;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
    std::size_t pivot = rank;
    while (pivot < m.rows() && !m.get(pivot, col)) ++pivot;
    if (pivot == m.rows()) continue;
    m.swap_rows(pivot, rank);
    for (std::size_t r = 0; r < m.rows(); ++r)
      if (r != rank && m.get(r, col)) m.xor_row_into(rank, r);
    pivots.emplace_back(rank, col);
    ++rank;
  }
  std::vector<bool> is_pivot(m.cols(), false);
  for (const auto& [r, c] : pivots) is_pivot[c] = true;
  std::vector<BitVec> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    BitVec v(m.cols());
    v.set(free, true);
    for (const auto& [r, c] : pivots)
      if (m.get(r, free)) v.set(c, true);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace linkobs
