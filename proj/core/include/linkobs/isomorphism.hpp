// Simplicial isomorphism search: plain backtracking over vertex
// assignments, pruned by per-vertex degree vectors (incident simplex
// counts per dimension). Strong enough for the <= 12 vertex complexes
// this project ever compares.
#pragma once

#include <map>
#include <optional>
#include <vector>

#include "linkobs/complex.hpp"

namespace linkobs {

// Vertex bijection carrying simplices of K onto simplices of L, or nullopt.
// Deterministic: returns the lexicographically least bijection with respect
// to K's sorted vertex list.
std::optional<std::map<VertexId, VertexId>> find_isomorphism(const Complex& K,
                                                             const Complex& L);

struct SubcomplexMatches {
  // One entry per distinct subcomplex of the host isomorphic to the pattern,
  // identified by its simplex set; vertex_images[i] is the matching vertex set.
  std::vector<std::vector<Simplex>> subcomplexes;
  std::vector<std::vector<VertexId>> vertex_images;
  std::size_t count() const { return subcomplexes.size(); }
};

// Distinct subcomplexes of host isomorphic to pattern, counted as simplex
// sets. Guarded: throws if the host has more than 12 vertices.
SubcomplexMatches count_isomorphic_subcomplexes(const Complex& host,
                                                const Complex& pattern);

}  // namespace linkobs
