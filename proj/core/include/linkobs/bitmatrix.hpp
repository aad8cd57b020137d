// Dense bit-packed linear algebra over GF(2). Word-parallel Gaussian
// elimination, pivots chosen in column order, first nonzero row.
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace linkobs {

class BitVec {
 public:
  BitVec() = default;
  explicit BitVec(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}

  std::size_t size() const { return n_; }
  bool get(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
  void set(std::size_t i, bool v) {
    std::uint64_t mask = 1ULL << (i & 63);
    if (v)
      w_[i >> 6] |= mask;
    else
      w_[i >> 6] &= ~mask;
  }
  void flip(std::size_t i) { w_[i >> 6] ^= 1ULL << (i & 63); }
  void operator^=(const BitVec& o) {
    for (std::size_t k = 0; k < w_.size(); ++k) w_[k] ^= o.w_[k];
  }
  std::size_t weight() const;
  bool any() const {
    for (std::uint64_t w : w_)
      if (w) return true;
    return false;
  }
  bool operator==(const BitVec&) const = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> w_;
};

class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), stride_((cols + 63) / 64), data_(rows * stride_, 0) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  bool get(std::size_t r, std::size_t c) const {
    return (data_[r * stride_ + (c >> 6)] >> (c & 63)) & 1;
  }
  void set(std::size_t r, std::size_t c, bool v) {
    std::uint64_t mask = 1ULL << (c & 63);
    auto& word = data_[r * stride_ + (c >> 6)];
    if (v)
      word |= mask;
    else
      word &= ~mask;
  }

  void xor_row_into(std::size_t src, std::size_t dst) {
    const std::uint64_t* s = &data_[src * stride_];
    std::uint64_t* d = &data_[dst * stride_];
    for (std::size_t k = 0; k < stride_; ++k) d[k] ^= s[k];
  }
  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t k = 0; k < stride_; ++k)
      std::swap(data_[a * stride_ + k], data_[b * stride_ + k]);
  }
  bool row_empty(std::size_t r) const {
    for (std::size_t k = 0; k < stride_; ++k)
      if (data_[r * stride_ + k]) return false;
    return true;
  }

  BitVec row(std::size_t r) const;
  BitVec mul(const BitVec& x) const;  // length cols -> length rows

  static BitMatrix identity(std::size_t n);

  bool operator==(const BitMatrix&) const = default;

 private:
  std::size_t rows_ = 0, cols_ = 0, stride_ = 0;
  std::vector<std::uint64_t> data_;
};

// GF(2) rank; works on a copy, the input is not mutated.
std::size_t gf2_rank(const BitMatrix& m);

// Some x with M x = b, or nullopt. The returned x is re-verified by
// multiplication before being handed back.
std::optional<BitVec> gf2_solve(const BitMatrix& m, const BitVec& b);

// Basis of {x : M x = 0}, one vector per free column.
std::vector<BitVec> gf2_kernel_basis(const BitMatrix& m);

// Elimination factored once for many right-hand sides against the same
// matrix (cohomology checks solve dozens of systems over one coboundary).
class Gf2Solver {
 public:
  explicit Gf2Solver(const BitMatrix& m);
  std::size_t rank() const { return pivots_.size(); }
  std::optional<BitVec> solve(const BitVec& b) const;

 private:
  BitMatrix reduced_;     // E * M in reduced row echelon form
  BitMatrix transform_;   // E
  std::vector<std::pair<std::size_t, std::size_t>> pivots_;  // (row, col)
  std::size_t cols_;
  const BitMatrix original_;
};

}  // namespace linkobs
