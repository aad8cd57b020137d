// Exact rational geometry: linear realizations of complexes, transversal
// simplex intersection, double-point counting, Z2-linking numbers and the
// suspension embeddings. Degeneracy is detected exactly and reported, never
// perturbed away; randomized callers resample and retry.
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "linkobs/complex.hpp"
#include "linkobs/rational.hpp"

namespace linkobs {

// Non-generic configuration found where a transversal answer was required.
class DegeneracyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Resample budget exhausted while hunting for a generic configuration.
class RetryExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct GeometricMap {
  Complex complex;
  int ambient = 0;
  std::map<VertexId, Point> coords;

  const Point& at(VertexId v) const;
  std::vector<Point> points_of(const Simplex& s) const;
};

// Points (t_i, t_i^2, ..., t_i^m) on the moment curve; parameters must be
// strictly increasing. Any min(k, m+1) of them are affinely independent.
std::vector<Point> moment_curve(const std::vector<long>& params, int m);

// Integer coordinates uniform in [-bound, bound], resampled wholesale until
// the general position check passes; throws RetryExhausted after `retries`.
std::vector<Point> random_integer_points(int count, int m, long bound,
                                         std::uint64_t seed, int retries = 64);

// True iff every subset of at most m+1 points is affinely independent.
bool general_position_check(const std::vector<Point>& pts, int m);

enum class IntersectKind { Empty, Transversal, Degenerate };
struct IntersectionResult {
  IntersectKind kind = IntersectKind::Empty;
  std::optional<Point> point;  // set for Transversal
};

// Intersection of a p-simplex and a q-simplex with p + q = m, both given by
// affinely independent point lists. Transversal means the barycentric
// system has a unique solution with all coordinates strictly positive.
IntersectionResult intersect_complementary(const std::vector<Point>& s_pts,
                                           const std::vector<Point>& t_pts, int m);

struct DoublePointTable {
  struct Entry {
    Simplex s, t;  // s < t, vertex-disjoint n-simplices
    int count = 0; // 0 or 1 for linear simplices
  };
  std::vector<Entry> pairs;  // canonical pair order
  long total = 0;
};

// Transversal double points of a realization of an n-complex in R^{2n},
// per unordered disjoint n-simplex pair. Throws DegeneracyError on any
// non-transversal pair; callers resample coordinates.
DoublePointTable double_point_table(const GeometricMap& map, int n);

// Whether the linear realization is injective on the whole polyhedron:
// every simplex affinely independent, and every pair of simplices meets
// exactly in the convex hull of its shared vertices (decided by exact
// linear feasibility).
bool is_embedding(const GeometricMap& map);

struct ApexPolicy {
  std::uint64_t seed = 0;
  int retries = 64;
};

// Z2-linking number of two disjoint embedded spheres of complementary
// dimensions (p + q = m - 1): parity of the transversal intersections of a
// cone over gamma from a far generic apex with the top simplices of delta.
// The apex starts at twice the configuration diameter along the last axis
// from the centroid, with seeded integer jitter; degenerate apexes redraw.
int lk2(const GeometricMap& f, const Complex& gamma, const Complex& delta,
        const ApexPolicy& policy = {});

// Lift a base embedding into one higher dimension: base points get last
// coordinate 0, apex a sits above the base centroid at height_a > 0 and
// apex b below at height_b < 0. Every simplex of `target` must be a base
// simplex or an apex joined with one.
GeometricMap suspension_embedding(const GeometricMap& base, const Complex& target,
                                  VertexId apex_a, VertexId apex_b,
                                  const Rat& height_a, const Rat& height_b);

// Parity of the crossings of the realized n-simplex `filling` with the
// polyhedron of the n-sphere `delta` in R^{2n}. Crossings through the
// interior of a top simplex count once; crossings through the relative
// interior of a shared facet count once when the two adjacent top
// simplices leave the hyperplane spanned by filling and facet on opposite
// sides (the bent sheet crosses) and zero when on the same side (it
// touches). Anything deeper is non-generic: DegeneracyError.
int filling_intersection_parity(const GeometricMap& f, const Simplex& filling,
                                const Complex& delta);

// Same coordinates, smaller complex.
GeometricMap restrict_map(const GeometricMap& map, const Complex& sub);

// Vertex coordinates over a fixed complex from a seeded sample in general
// position (a generic immersion at desk scale).
GeometricMap random_geometric_map(const Complex& K, int ambient, long bound,
                                  std::uint64_t seed, int retries = 64);

// Text format: one line per vertex, "<label> <num>/<den> ...", vertex id order.
std::string map_to_text(const GeometricMap& map);
std::map<std::string, Point> coords_from_text(const std::string& text);
GeometricMap map_from_text(const std::string& text, const Complex& complex);

}  // namespace linkobs
