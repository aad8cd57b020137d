// Finite abstract simplicial complexes and the constructions used
// throughout: skeleta of simplices, joins, suspensions, the complexes
// M_J built over an (n-1)-complex J, and iterated joins of three points.
#pragma once

#include <map>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "linkobs/simplex.hpp"

namespace linkobs {

// Face-closed set of simplices. Every vertex mentioned anywhere is itself a
// 0-simplex; isolated vertices are allowed. Iteration is always in canonical
// (lexicographic) order, so everything downstream is deterministic.
class Complex {
 public:
  Complex() = default;

  // Face-closes the input. Labels may name any subset of the vertices;
  // unnamed vertices get "v<id>".
  static Complex closure(const std::vector<Simplex>& simplices,
                         std::map<VertexId, std::string> labels = {});

  const std::vector<Simplex>& simplices() const { return simplices_; }
  std::vector<Simplex> simplices_of_dim(int k) const;
  std::size_t count_of_dim(int k) const;
  int dim() const;  // -1 for the empty complex
  bool contains(const Simplex& s) const { return index_.count(s) > 0; }
  bool contains_all(const Complex& sub) const;

  std::vector<VertexId> vertex_ids() const;
  std::size_t vertex_count() const;

  const std::string& label(VertexId v) const;
  std::optional<VertexId> vertex_by_label(const std::string& name) const;
  const std::map<VertexId, std::string>& labels() const { return labels_; }

  // Per-vertex count of incident simplices in each dimension 0..dim().
  std::vector<int> degree_vector(VertexId v) const;

  bool operator==(const Complex& other) const { return simplices_ == other.simplices_; }

 private:
  std::vector<Simplex> simplices_;  // sorted canonically
  std::unordered_set<Simplex, SimplexHash> index_;
  std::map<VertexId, std::string> labels_;
};

// k-skeleton of an m-simplex on vertices labeled a0..am.
Complex skeleton(int m, int k);

// Join of two complexes on disjoint vertex id sets; throws on overlap.
Complex join(const Complex& K, const Complex& L);

// Join of K with fresh isolated points appended after K's largest id.
// Returns the extended complex and the new ids, in label order.
std::pair<Complex, std::vector<VertexId>> join_with_points(
    const Complex& K, const std::vector<std::string>& labels);

// Join of K with two fresh vertices labeled a and b.
Complex suspension(const Complex& K);

// m-fold join of three points, an (m-1)-complex on 3m vertices.
Complex triple_join(int m);

// The complex (J * {a,b}) with the (n-1)-simplices through a third
// vertex c attached: equivalently J * {a,b,c} minus the n-simplices
// through c. J must be an (n-1)-complex. For n = 1 the c part is the
// isolated vertex c alone.
struct MJComplex {
  Complex complex;
  int n = 0;
  VertexId a = -1, b = -1, c = -1;
};
MJComplex build_M_J(const Complex& J, int n);

// M^(n) = M_J over J = the (n-1)-skeleton of a 2n-simplex.
MJComplex build_M(int n);

// Removes each simplex in S (which must be present) together with all of
// its cofaces. Vertices not deleted stay, possibly isolated.
Complex delete_simplices(const Complex& K, const std::vector<Simplex>& doomed);

// Rename vertex ids; perm must be injective on K's vertices. Labels follow.
Complex relabel_vertices(const Complex& K, const std::map<VertexId, VertexId>& perm);

// Subcomplex given by a simplex subset (face-closed again defensively).
Complex subcomplex(const Complex& K, const std::vector<Simplex>& simplices);

// Text format: header "# vertices: <label> <label> ...", then one simplex
// per line as space-separated labels, lines in canonical order.
std::string complex_to_text(const Complex& K);
Complex complex_from_text(const std::string& text);

}  // namespace linkobs
