// The mod-2 van Kampen obstruction pipeline: the double-point parity
// cochain of a generic immersion, coboundary membership over the quotient
// deleted product, and the parity statement for joins of a skeleton with
// three extra vertices.
#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "linkobs/deleted_product.hpp"
#include "linkobs/geometry.hpp"

namespace linkobs {

struct VKCocycle {
  BitVec bits;          // indexed by the canonical top-cell order
  std::uint64_t seed = 0;
  GeometricMap map;     // the immersion that produced it
};

// Double-point parity per top cell of the quotient deleted product of
// map.complex (an n-complex immersed in R^{2n}).
VKCocycle vk_cocycle(const QuotientDeletedComplex& D, int n, const GeometricMap& map,
                     std::uint64_t seed = 0);

struct ObstructionEvidence {
  bool nonzero = false;
  int cohomology_dim = 0;
  std::size_t top_cells = 0;
  std::size_t cocycle_weight = 0;
  std::uint64_t seed = 0;
};

// Sample one generic immersion of K into R^{2n} and decide whether its
// cocycle is a coboundary. Resamples on degeneracy within the budget.
ObstructionEvidence obstruction_nonzero(const Complex& K, int n, std::uint64_t seed,
                                        long coordinate_bound = 1000000, int retries = 64);

struct Lemma21Report {
  int n = 0;
  std::size_t top_cells = 0;
  std::size_t lower_cells = 0;  // grade 2n-1
  std::size_t rank = 0;
  int cohomology_dim = 0;
  bool all_top_duals_cohomologous = false;
  bool pass = false;
};

// dim H^{2n} = 1 and all top-cell duals pairwise cohomologous, for
// K = (n-1)-skeleton of a 2n-simplex joined with three points. Pairwise
// follows from checking every dual against the first: coboundaries form a
// subspace.
Lemma21Report verify_lemma_2_1(int n);
Lemma21Report verify_lemma_2_1_for(const Complex& K, int n);

struct Thm22Report {
  int n = 0;
  std::uint64_t seed = 0;
  int trials = 0;
  std::vector<long> totals;         // double points per trial
  std::vector<int> parities;        // totals mod 2
  bool all_odd = false;
  int invariance_pairs_checked = 0; // cocycle differences tested
  bool all_differences_coboundaries = false;
  Lemma21Report lemma;
  bool pass = false;
};

// Random generic immersions of the join complex; every total double-point
// count must be odd, and cocycles of different trials must agree up to
// coboundary.
Thm22Report verify_theorem_2_2(int n, int trials, std::uint64_t seed);
Thm22Report verify_theorem_2_2_for(const Complex& K, int n, int trials, std::uint64_t seed);

}  // namespace linkobs
