// Exact rational dense linear algebra and a small exact LP. Everything the
// geometric predicates need reduces to solving tiny systems and deciding
// feasibility of {A x = b, x >= 0}; the simplex method below pivots with
// Bland's rule, so it terminates and never leaves rational arithmetic.
#pragma once

#include <optional>
#include <vector>

#include "linkobs/rational.hpp"

namespace linkobs {

using RatMatrix = std::vector<std::vector<Rat>>;  // row-major

struct LinearSolution {
  enum class Kind { Unique, None, Underdetermined } kind;
  std::vector<Rat> x;  // populated when Unique
};

// Solve A x = b exactly by Gauss-Jordan elimination.
LinearSolution solve_linear(RatMatrix A, std::vector<Rat> b);

std::size_t rat_rank(RatMatrix A);

// Affine rank is the linear rank of differences against the first point;
// a set is affinely independent iff affine rank = count - 1.
std::size_t affine_rank(const std::vector<Point>& pts);
bool affinely_independent(const std::vector<Point>& pts);

struct LpResult {
  bool feasible = false;
  bool unbounded = false;
  Rat value;             // optimal objective when feasible && !unbounded
  std::vector<Rat> x;    // an optimal (or feasible) point
};

// max c.x subject to A x = b, x >= 0. Two-phase simplex, Bland's rule.
LpResult lp_maximize(const RatMatrix& A, const std::vector<Rat>& b,
                     const std::vector<Rat>& c);

// Feasibility of {A x = b, x >= 0}.
bool lp_feasible(const RatMatrix& A, const std::vector<Rat>& b);

}  // namespace linkobs
