#include "linkobs/deleted_product.hpp"

#include <algorithm>
#include <stdexcept>

namespace linkobs {

QuotientCell::QuotientCell(Simplex s, Simplex t) {
  if (!s.disjoint_from(t))
    throw std::invalid_argument("QuotientCell: simplices share a vertex");
  if (t < s) std::swap(s, t);
  first = std::move(s);
  second = std::move(t);
}

QuotientDeletedComplex::QuotientDeletedComplex(const Complex& K) : source_(K) {
  const auto& sims = K.simplices();
  cells_.assign(static_cast<std::size_t>(std::max(0, 2 * K.dim())) + 1, {});
  for (std::size_t i = 0; i < sims.size(); ++i)
    for (std::size_t j = i + 1; j < sims.size(); ++j)
      if (sims[i].disjoint_from(sims[j])) {
        QuotientCell cell(sims[i], sims[j]);
        cells_[static_cast<std::size_t>(cell.grade())].push_back(std::move(cell));
      }
  indices_.resize(cells_.size());
  for (std::size_t g = 0; g < cells_.size(); ++g) {
    std::sort(cells_[g].begin(), cells_[g].end());
    for (std::size_t i = 0; i < cells_[g].size(); ++i) indices_[g][cells_[g][i]] = i;
  }
}

const std::vector<QuotientCell>& QuotientDeletedComplex::cells(int grade) const {
  static const std::vector<QuotientCell> empty;
  if (grade < 0 || grade > max_grade()) return empty;
  return cells_[static_cast<std::size_t>(grade)];
}

std::optional<std::size_t> QuotientDeletedComplex::index_of(int grade,
                                                            const QuotientCell& cell) const {
  if (grade < 0 || grade > max_grade()) return std::nullopt;
  auto it = indices_[static_cast<std::size_t>(grade)].find(cell);
  if (it == indices_[static_cast<std::size_t>(grade)].end()) return std::nullopt;
  return it->second;
}

BitMatrix top_coboundary(const QuotientDeletedComplex& D, int n) {
  if (D.source().dim() != n)
    throw std::invalid_argument("top_coboundary: complex is not an n-complex for given n");
  return incidence_matrix(D, 2 * n - 1);
}

BitMatrix incidence_matrix(const QuotientDeletedComplex& D, int g) {
  if (g < 0 || g + 1 > D.max_grade())
    throw std::invalid_argument("incidence_matrix: grade out of range");
  const auto& lower = D.cells(g);
  const auto& upper = D.cells(g + 1);
  BitMatrix m(upper.size(), lower.size());
  for (std::size_t r = 0; r < upper.size(); ++r) {
    const QuotientCell& cell = upper[r];
    // Facet-pairs drop one vertex from either component. Incidences are
    // accumulated mod 2: with the swap identification a facet-pair could in
    // principle be reached twice, and then it must cancel.
    auto emit = [&](const Simplex& shrunk, const Simplex& kept) {
      QuotientCell facet(shrunk, kept);
      if (auto idx = D.index_of(g, facet))
        m.set(r, *idx, !m.get(r, *idx));
    };
    if (cell.first.dim() > 0)
      for (const Simplex& f : cell.first.facets()) emit(f, cell.second);
    if (cell.second.dim() > 0)
      for (const Simplex& f : cell.second.facets()) emit(f, cell.first);
  }
  return m;
}

int top_cohomology_dim(const Complex& K, int n) {
  if (K.dim() != n)
    throw std::invalid_argument("top_cohomology_dim: complex is not an n-complex for given n");
  QuotientDeletedComplex D(K);
  if (2 * n > D.max_grade() || D.cells(2 * n).empty()) return 0;
  BitMatrix delta = top_coboundary(D, n);
  return static_cast<int>(delta.rows()) - static_cast<int>(gf2_rank(delta));
}

CohomologousResult cohomologous(const Gf2Solver& top_solver, const BitVec& c1,
                                const BitVec& c2) {
  if (c1.size() != c2.size())
    throw std::invalid_argument("cohomologous: cochain length mismatch");
  BitVec diff = c1;
  diff ^= c2;
  CohomologousResult out;
  auto witness = top_solver.solve(diff);
  out.cohomologous = witness.has_value();
  out.witness = std::move(witness);
  return out;
}

CohomologousResult cohomologous(const QuotientDeletedComplex& D, int n, const BitVec& c1,
                                const BitVec& c2) {
  if (c1.size() != D.cells(2 * n).size())
    throw std::invalid_argument("cohomologous: cochain not indexed by the top cells");
  Gf2Solver solver(top_coboundary(D, n));
  return cohomologous(solver, c1, c2);
}

}  // namespace linkobs
