#include "linkobs/obstruction.hpp"

#include <stdexcept>

#include "linkobs/rng.hpp"

namespace linkobs {

namespace {

Complex join_complex(int n) {
  return join_with_points(skeleton(2 * n, n - 1), {"a", "b", "c"}).first;
}

GeometricMap sample_generic(const Complex& K, int n, long bound, std::uint64_t seed,
                            int retries) {
  // A configuration with every <= 2n+1 points affinely independent realizes
  // every disjoint n-simplex pair transversally, so double_point_table
  // cannot hit a degenerate pair; the retry loop below is belt and braces
  // for callers that pass weaker configurations.
  SplitMix64 seeds(seed);
  for (int attempt = 0; attempt < retries; ++attempt) {
    GeometricMap map = random_geometric_map(K, 2 * n, bound, seeds.next(), retries);
    try {
      double_point_table(map, n);
      return map;
    } catch (const DegeneracyError&) {
      continue;
    }
  }
  throw RetryExhausted("sample_generic: no generic immersion within budget");
}

}  // namespace

VKCocycle vk_cocycle(const QuotientDeletedComplex& D, int n, const GeometricMap& map,
                     std::uint64_t seed) {
  DoublePointTable table = double_point_table(map, n);
  const auto& tops = D.cells(2 * n);
  VKCocycle out;
  out.bits = BitVec(tops.size());
  out.seed = seed;
  out.map = map;
  for (const auto& entry : table.pairs) {
    if (entry.count % 2 == 0) continue;
    QuotientCell cell(entry.s, entry.t);
    auto idx = D.index_of(2 * n, cell);
    if (!idx) throw std::logic_error("vk_cocycle: double-point pair missing from deleted product");
    out.bits.flip(*idx);
  }
  return out;
}

ObstructionEvidence obstruction_nonzero(const Complex& K, int n, std::uint64_t seed,
                                        long coordinate_bound, int retries) {
  QuotientDeletedComplex D(K);
  ObstructionEvidence out;
  out.seed = seed;
  out.top_cells = D.cells(2 * n).size();
  if (out.top_cells == 0) {
    // No disjoint n-simplex pairs at all: the obstruction group is trivial.
    out.cohomology_dim = 0;
    out.nonzero = false;
    return out;
  }
  BitMatrix delta = top_coboundary(D, n);
  Gf2Solver solver(delta);
  out.cohomology_dim = static_cast<int>(delta.rows()) - static_cast<int>(solver.rank());

  GeometricMap map = sample_generic(K, n, coordinate_bound, seed, retries);
  VKCocycle cocycle = vk_cocycle(D, n, map, seed);
  out.cocycle_weight = cocycle.bits.weight();
  BitVec zero(cocycle.bits.size());
  out.nonzero = !cohomologous(solver, cocycle.bits, zero).cohomologous;
  return out;
}

Lemma21Report verify_lemma_2_1_for(const Complex& K, int n) {
  Lemma21Report rep;
  rep.n = n;
  QuotientDeletedComplex D(K);
  BitMatrix delta = top_coboundary(D, n);
  Gf2Solver solver(delta);
  rep.top_cells = delta.rows();
  rep.lower_cells = delta.cols();
  rep.rank = solver.rank();
  rep.cohomology_dim = static_cast<int>(rep.top_cells) - static_cast<int>(rep.rank);

  // e_0 ~ e_i for all i gives pairwise: differences of coboundary
  // differences are coboundaries.
  rep.all_top_duals_cohomologous = true;
  for (std::size_t i = 1; i < rep.top_cells && rep.all_top_duals_cohomologous; ++i) {
    BitVec a(rep.top_cells), b(rep.top_cells);
    a.set(0, true);
    b.set(i, true);
    if (!cohomologous(solver, a, b).cohomologous) rep.all_top_duals_cohomologous = false;
  }
  rep.pass = rep.cohomology_dim == 1 && rep.all_top_duals_cohomologous;
  return rep;
}

Lemma21Report verify_lemma_2_1(int n) {
  if (n < 1 || n > 3) throw std::invalid_argument("verify_lemma_2_1: n in {1,2,3} supported");
  return verify_lemma_2_1_for(join_complex(n), n);
}

Thm22Report verify_theorem_2_2_for(const Complex& K, int n, int trials, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("verify_theorem_2_2: n >= 1 required");
  if (trials < 1) throw std::invalid_argument("verify_theorem_2_2: trials >= 1 required");

  Thm22Report rep;
  rep.n = n;
  rep.seed = seed;
  rep.trials = trials;
  rep.lemma = verify_lemma_2_1_for(K, n);

  QuotientDeletedComplex D(K);
  Gf2Solver solver(top_coboundary(D, n));

  SplitMix64 seeds(seed);
  std::vector<VKCocycle> cocycles;
  rep.all_odd = true;
  for (int t = 0; t < trials; ++t) {
    std::uint64_t trial_seed = seeds.next();
    GeometricMap map = sample_generic(K, n, 1000000, trial_seed, 64);
    DoublePointTable table = double_point_table(map, n);
    rep.totals.push_back(table.total);
    rep.parities.push_back(static_cast<int>(table.total % 2));
    if (table.total % 2 == 0) rep.all_odd = false;
    cocycles.push_back(vk_cocycle(D, n, map, trial_seed));
  }

  rep.all_differences_coboundaries = true;
  for (int i = 0; i + 1 < trials && rep.invariance_pairs_checked < 10; i += 2) {
    ++rep.invariance_pairs_checked;
    if (!cohomologous(solver, cocycles[static_cast<std::size_t>(i)].bits,
                      cocycles[static_cast<std::size_t>(i) + 1].bits)
             .cohomologous)
      rep.all_differences_coboundaries = false;
  }

  rep.pass = rep.all_odd && rep.all_differences_coboundaries && rep.lemma.pass;
  return rep;
}

Thm22Report verify_theorem_2_2(int n, int trials, std::uint64_t seed) {
  if (n < 1 || n > 3) throw std::invalid_argument("verify_theorem_2_2: n in {1,2,3} supported");
  return verify_theorem_2_2_for(join_complex(n), n, trials, seed);
}

}  // namespace linkobs
