#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <vector>

namespace linkobs {

using VertexId = int;

// A simplex is its strictly increasing vertex list; dimension = size - 1.
// The empty simplex never escapes join logic, so a constructed Simplex is
// always nonempty.
class Simplex {
 public:
  Simplex() = default;
  explicit Simplex(std::vector<VertexId> vertices) : verts_(std::move(vertices)) {
    if (verts_.empty()) throw std::invalid_argument("empty simplex");
    if (!std::is_sorted(verts_.begin(), verts_.end()) ||
        std::adjacent_find(verts_.begin(), verts_.end()) != verts_.end())
      throw std::invalid_argument("simplex vertices must be strictly increasing");
  }
  Simplex(std::initializer_list<VertexId> vertices)
      : Simplex(std::vector<VertexId>(vertices)) {}

  static Simplex sorted(std::vector<VertexId> vertices) {
    std::sort(vertices.begin(), vertices.end());
    return Simplex(std::move(vertices));
  }

  const std::vector<VertexId>& vertices() const { return verts_; }
  int dim() const { return static_cast<int>(verts_.size()) - 1; }
  std::size_t size() const { return verts_.size(); }

  bool contains(VertexId v) const {
    return std::binary_search(verts_.begin(), verts_.end(), v);
  }
  bool is_face_of(const Simplex& other) const {
    return std::includes(other.verts_.begin(), other.verts_.end(),
                         verts_.begin(), verts_.end());
  }
  bool disjoint_from(const Simplex& other) const {
    auto a = verts_.begin();
    auto b = other.verts_.begin();
    while (a != verts_.end() && b != other.verts_.end()) {
      if (*a < *b)
        ++a;
      else if (*b < *a)
        ++b;
      else
        return false;
    }
    return true;
  }

  // Codimension-1 faces; empty result for a vertex.
  std::vector<Simplex> facets() const {
    std::vector<Simplex> out;
    if (verts_.size() < 2) return out;
    for (std::size_t skip = 0; skip < verts_.size(); ++skip) {
      std::vector<VertexId> f;
      f.reserve(verts_.size() - 1);
      for (std::size_t i = 0; i < verts_.size(); ++i)
        if (i != skip) f.push_back(verts_[i]);
      out.emplace_back(std::move(f));
    }
    return out;
  }

  // All nonempty subsets, self included.
  std::vector<Simplex> faces() const {
    std::vector<Simplex> out;
    const std::size_t k = verts_.size();
    for (std::size_t mask = 1; mask < (std::size_t{1} << k); ++mask) {
      std::vector<VertexId> f;
      for (std::size_t i = 0; i < k; ++i)
        if (mask & (std::size_t{1} << i)) f.push_back(verts_[i]);
      out.emplace_back(std::move(f));
    }
    return out;
  }

  Simplex with_vertex(VertexId v) const {
    std::vector<VertexId> w = verts_;
    w.insert(std::lower_bound(w.begin(), w.end(), v), v);
    return Simplex(std::move(w));
  }
  Simplex united(const Simplex& other) const {
    std::vector<VertexId> w;
    std::set_union(verts_.begin(), verts_.end(), other.verts_.begin(),
                   other.verts_.end(), std::back_inserter(w));
    return Simplex(std::move(w));
  }
  Simplex intersect(const Simplex& other) const {
    std::vector<VertexId> w;
    std::set_intersection(verts_.begin(), verts_.end(), other.verts_.begin(),
                          other.verts_.end(), std::back_inserter(w));
    if (w.empty()) throw std::domain_error("simplex intersection is empty");
    return Simplex(std::move(w));
  }
  std::vector<VertexId> common_vertices(const Simplex& other) const {
    std::vector<VertexId> w;
    std::set_intersection(verts_.begin(), verts_.end(), other.verts_.begin(),
                          other.verts_.end(), std::back_inserter(w));
    return w;
  }

  // Canonical order: lexicographic on the vertex sequence.
  auto operator<=>(const Simplex&) const = default;

 private:
  std::vector<VertexId> verts_;
};

struct SimplexHash {
  std::size_t operator()(const Simplex& s) const {
    std::size_t h = 0x9e3779b97f4a7c15ULL;
    for (VertexId v : s.vertices())
      h = (h ^ static_cast<std::size_t>(v + 0x45d9f3b)) * 0x100000001b3ULL;
    return h;
  }
};

}  // namespace linkobs
