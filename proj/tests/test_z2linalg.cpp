#include <doctest.h>

#include <algorithm>
#include <vector>

#include "linkobs/bitmatrix.hpp"
#include "linkobs/complex.hpp"
#include "linkobs/deleted_product.hpp"
#include "linkobs/rng.hpp"

using namespace linkobs;

namespace {

BitMatrix random_matrix(std::size_t rows, std::size_t cols, SplitMix64& rng) {
  BitMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, rng.next() & 1);
  return m;
}

}  // namespace

TEST_CASE("rank basics") {
  CHECK(gf2_rank(BitMatrix::identity(3)) == 3);
  BitMatrix ones(3, 3);
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = 0; c < 3; ++c) ones.set(r, c, true);
  CHECK(gf2_rank(ones) == 1);
}

TEST_CASE("coboundary of the triple join of points has corank one") {
  Complex k33 = join_with_points(skeleton(2, 0), {"a", "b", "c"}).first;
  QuotientDeletedComplex D(k33);
  BitMatrix delta = top_coboundary(D, 1);
  CHECK(delta.rows() == 18);
  CHECK(delta.cols() == 36);
  CHECK(gf2_rank(delta) == 17);
}

TEST_CASE("solve basics") {
  BitMatrix id = BitMatrix::identity(5);
  BitVec b(5);
  b.set(1, true);
  b.set(4, true);
  auto x = gf2_solve(id, b);
  REQUIRE(x.has_value());
  CHECK(*x == b);

  BitMatrix zero(4, 6);
  BitVec nz(4);
  nz.set(2, true);
  CHECK_FALSE(gf2_solve(zero, nz).has_value());
}

TEST_CASE("rank is invariant under row permutation") {
  SplitMix64 rng(42);
  for (int trial = 0; trial < 30; ++trial) {
    std::size_t rows = 2 + rng.next_below(8);
    std::size_t cols = 2 + rng.next_below(10);
    BitMatrix m = random_matrix(rows, cols, rng);
    std::size_t base = gf2_rank(m);
    CHECK(base <= std::min(rows, cols));
    BitMatrix shuffled = m;
    for (std::size_t r = rows; r > 1; --r)
      shuffled.swap_rows(r - 1, rng.next_below(r));
    CHECK(gf2_rank(shuffled) == base);
  }
}

TEST_CASE("solve is complete against exhaustive search") {
  SplitMix64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    std::size_t rows = 1 + rng.next_below(6);
    std::size_t cols = 1 + rng.next_below(10);  // <= 12 keeps 2^cols cheap
    BitMatrix m = random_matrix(rows, cols, rng);
    BitVec b(rows);
    for (std::size_t r = 0; r < rows; ++r) b.set(r, rng.next() & 1);

    bool solvable = false;
    for (std::size_t mask = 0; mask < (std::size_t{1} << cols) && !solvable; ++mask) {
      BitVec x(cols);
      for (std::size_t c = 0; c < cols; ++c)
        if (mask & (std::size_t{1} << c)) x.set(c, true);
      if (m.mul(x) == b) solvable = true;
    }

    auto x = gf2_solve(m, b);
    CHECK(x.has_value() == solvable);
    if (x) CHECK(m.mul(*x) == b);
  }
}

TEST_CASE("kernel basis spans the kernel") {
  SplitMix64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    std::size_t rows = 1 + rng.next_below(6);
    std::size_t cols = 1 + rng.next_below(10);
    BitMatrix m = random_matrix(rows, cols, rng);
    auto basis = gf2_kernel_basis(m);
    CHECK(basis.size() == cols - gf2_rank(m));
    BitVec zero(rows);
    for (const BitVec& v : basis) CHECK(m.mul(v) == zero);
  }
}
