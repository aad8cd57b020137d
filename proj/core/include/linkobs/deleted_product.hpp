// Quotient deleted products. Cells are unordered pairs {s, s'} of
// vertex-disjoint simplices, graded by dim s + dim s'; the swap
// identification is baked in by storing the lexicographically smaller
// simplex first. For an n-complex the top grade 2n and grade 2n-1 carry
// everything the obstruction theory needs.
#pragma once

#include <map>
#include <optional>
#include <vector>

#include "linkobs/bitmatrix.hpp"
#include "linkobs/complex.hpp"

namespace linkobs {

struct QuotientCell {
  Simplex first, second;  // first < second lexicographically, vertex-disjoint

  QuotientCell(Simplex s, Simplex t);
  int grade() const { return first.dim() + second.dim(); }
  auto operator<=>(const QuotientCell&) const = default;
};

class QuotientDeletedComplex {
 public:
  explicit QuotientDeletedComplex(const Complex& K);

  int max_grade() const { return static_cast<int>(cells_.size()) - 1; }
  const std::vector<QuotientCell>& cells(int grade) const;
  std::optional<std::size_t> index_of(int grade, const QuotientCell& cell) const;
  const Complex& source() const { return source_; }

 private:
  Complex source_;
  std::vector<std::vector<QuotientCell>> cells_;              // by grade, canonical order
  std::vector<std::map<QuotientCell, std::size_t>> indices_;  // by grade
};

// Coboundary matrix from grade 2n-1 into the top grade 2n: rows are top
// cells, columns grade-(2n-1) cells, entry 1 iff the column cell is a
// facet-pair of the row cell. Grades (n,n) and (n-1,n) split cleanly, so
// the swap identification never folds an incidence onto itself here.
BitMatrix top_coboundary(const QuotientDeletedComplex& D, int n);

// dim H^{2n}(K~*; Z2) = #top cells - rank of the top coboundary (top
// cochains are all cocycles). K must be an n-complex.
int top_cohomology_dim(const Complex& K, int n);

struct CohomologousResult {
  bool cohomologous = false;
  std::optional<BitVec> witness;  // (2n-1)-cochain with coboundary c1 + c2
};

// Whether two top cochains differ by a coboundary; witness returned when so.
// Callers with many cochain pairs against one complex should factor the
// coboundary once via Gf2Solver and use the first overload.
CohomologousResult cohomologous(const Gf2Solver& top_solver, const BitVec& c1,
                                const BitVec& c2);
CohomologousResult cohomologous(const QuotientDeletedComplex& D, int n, const BitVec& c1,
                                const BitVec& c2);

// Incidence matrix from grade g cells into grade g+1 cells (rows = grade
// g+1). Used by the delta-compose-delta tests; the verification pipeline
// itself only ever consumes top_coboundary.
BitMatrix incidence_matrix(const QuotientDeletedComplex& D, int g);

}  // namespace linkobs
