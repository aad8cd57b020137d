// Sphere families inside M^(n), link-pair enumeration, and the headline
// verifications: sum of Z2-linking numbers over all (n-1,n) link pairs,
// the minimality certificates for the two maximal subcomplex types, the
// suspension counting claims, and the triple-join variant.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "linkobs/complex.hpp"
#include "linkobs/geometry.hpp"
#include "linkobs/obstruction.hpp"

namespace linkobs {

struct LinkPair {
  Complex gamma;      // (n-1)-sphere: boundary of tau_prime * c
  Complex delta;      // n-sphere: boundary of tau joined with {a, b}
  Simplex tau_prime;  // n vertices of the base skeleton
  Simplex tau;        // the complementary n+1 vertices
};

// One n-sphere per (n+1)-subset tau of the base vertices: boundary of tau
// joined with the two apexes.
std::vector<std::pair<Simplex, Complex>> gamma_family_n(const MJComplex& M);

// One (n-1)-sphere per n-subset tau': the boundary of the (missing)
// n-simplex tau' * c.
std::vector<std::pair<Simplex, Complex>> gamma_family_n_minus_1(const MJComplex& M);

// All disjoint pairs from the two families: tau' and tau partition the
// base vertex set, so there are C(2n+1, n) of them, in canonical order.
std::vector<LinkPair> lambda_pairs(const MJComplex& M);

// d = 0: two points. d = 1: connected and 2-regular. d = 2: connected
// closed surface with Euler characteristic 2. d >= 3 is not supported.
bool validate_sphere(const Complex& sub, int d);

// Exhaustive sphere-pair sweep for n <= 2: every pair of vertex-disjoint
// subcomplexes homeomorphic to S^{n-1} and S^n. Pairs are returned as
// (gamma simplices, delta simplices), canonically sorted.
using SpherePairKey = std::pair<std::vector<Simplex>, std::vector<Simplex>>;
std::vector<SpherePairKey> sphere_pairs_bruteforce(const MJComplex& M);

// The sweep coincides with the two-family enumeration.
bool lambda_enumeration_exhaustive(const MJComplex& M);

struct BaseLinkTable {
  struct Entry {
    Simplex first_part, second_part;  // vertex partition, first contains id 0
    int lk = 0;
  };
  std::vector<Entry> entries;
  int nontrivial = 0;
};

// lk2 of every partition pair of boundary spheres of an embedded
// (n-1)-skeleton of a (2n+1)-simplex in R^{2n-1}.
BaseLinkTable base_link_table(const GeometricMap& h, int n, std::uint64_t apex_seed = 0);

// The (n-1)-skeleton of a (2n+1)-simplex on moment-curve points.
GeometricMap moment_base_map(int n, const std::vector<long>& params);

// Default moment parameters 1..2n+2.
std::vector<long> default_moment_params(int n);

// Suspension embedding of M^(n): base vertex in slot i (ids 0..2n, then c
// in slot 2n+1) sits on moment point perm[i]; apexes at heights +1 / -1.
GeometricMap embed_M_suspension(const MJComplex& M, const std::vector<long>& params,
                                const std::vector<int>& perm = {});

// Suspension embedding of S = suspension(skeleton(2n+1, n-1)) as built by
// those constructors (base ids 0..2n+1, apexes 2n+2, 2n+3).
GeometricMap embed_suspension_complex(const Complex& S, int n,
                                      const std::vector<long>& params);

struct Thm12Report {
  int n = 0;
  std::uint64_t seed = 0;
  std::vector<long> base_params;
  bool embedding_ok = false;
  std::size_t lambda_count = 0;
  std::vector<int> lk_values;              // canonical lambda order
  std::vector<std::size_t> nontrivial;     // indices with lk2 = 1
  int sum_mod2 = 0;
  int filling_route_mismatches = 0;                  // cone route vs filling route
  bool pass = false;
  GeometricMap map;
  std::vector<LinkPair> lambdas;
};

Thm12Report verify_theorem_1_2(int n, std::uint64_t seed,
                               std::vector<long> base_params = {});

enum class Prop13Which { N1, N2, AllMaximal, All };

struct Prop13Report {
  int n = 0;
  std::uint64_t seed = 0;
  std::size_t base_pairs = 0;
  int base_nontrivial = 0;        // must be exactly 1
  std::vector<int> relabel;       // slot i of the base carries moment point relabel[i]
  struct SubcomplexCheck {
    std::string name;             // "N1" or "N2"
    std::string removed;          // deleted simplex, by labels
    bool embedding_ok = false;
    std::size_t surviving_lambdas = 0;
    std::size_t zero_count = 0;
    bool all_zero = false;
    GeometricMap map;
  };
  std::vector<SubcomplexCheck> checks;
  std::size_t maximal_simplices = 0;
  std::size_t n1_type = 0, n2_type = 0, unclassified = 0;
  bool pass = false;
};

Prop13Report verify_prop_1_3(int n, Prop13Which which, std::uint64_t seed);

struct SuspensionReport {
  int n = 0;
  std::uint64_t seed = 0;
  std::size_t copies = 0;           // expected 2n+2
  std::size_t expected_copies = 0;
  bool sharing_ok = false;          // each lambda lies in exactly n+1 copies
  std::size_t sharing_value = 0;    // n+1
  std::size_t lambda_union = 0;
  bool embedding_ok = false;
  std::vector<int> lk_values;
  int nontrivial_count = 0;         // expected >= 2
  long lk_integer_sum = 0;
  int sum_mod4 = -1;                // single-embedding evidence, expected 2
  bool pass = false;
  GeometricMap map;
};

SuspensionReport verify_suspension_claims(int n, std::uint64_t seed);

struct Remark14Report {
  int n = 0;
  std::uint64_t seed = 0;
  int trials = 0;
  bool iso_to_n2 = false;
  Lemma21Report lemma_analogue;
  std::vector<int> parities;
  bool all_odd = false;
  bool pass = false;
};

Remark14Report verify_remark_1_4(int n, std::uint64_t seed, int trials);

// Direct enumeration of the 3n+3 vertex complex the triple-join variant is
// compared against: the n-fold join of three points joined with {a, b},
// plus the c-cones over its faces of dimension <= n-2. Built by explicit
// loops, independent of the join machinery, so the comparison is a real
// cross-check of the constructors.
Complex construct_N2(int n);

}  // namespace linkobs
