#include "linkobs/isomorphism.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace linkobs {

namespace {

// Simplices of K grouped by the largest position (within order) of their
// vertices, so a partial assignment can be checked incrementally.
struct SearchTables {
  std::vector<VertexId> order;                   // vertices in ascending id
  std::vector<std::vector<Simplex>> closed_by;   // simplices whose vertices all lie in order[0..i]
};

SearchTables make_tables(const Complex& K) {
  SearchTables t;
  t.order = K.vertex_ids();
  std::map<VertexId, std::size_t> pos;
  for (std::size_t i = 0; i < t.order.size(); ++i) pos[t.order[i]] = i;
  t.closed_by.resize(t.order.size());
  for (const Simplex& s : K.simplices()) {
    std::size_t last = 0;
    for (VertexId v : s.vertices()) last = std::max(last, pos[v]);
    t.closed_by[last].push_back(s);
  }
  return t;
}

Simplex map_simplex(const Simplex& s, const std::map<VertexId, VertexId>& f) {
  std::vector<VertexId> w;
  w.reserve(s.size());
  for (VertexId v : s.vertices()) w.push_back(f.at(v));
  return Simplex::sorted(std::move(w));
}

}  // namespace

std::optional<std::map<VertexId, VertexId>> find_isomorphism(const Complex& K,
                                                             const Complex& L) {
  if (K.vertex_count() != L.vertex_count()) return std::nullopt;
  int d = std::max(K.dim(), L.dim());
  for (int k = 0; k <= d; ++k)
    if (K.count_of_dim(k) != L.count_of_dim(k)) return std::nullopt;

  SearchTables tab = make_tables(K);
  std::vector<VertexId> l_verts = L.vertex_ids();

  // Degree-vector pruning.
  std::map<VertexId, std::vector<int>> k_deg, l_deg;
  for (VertexId v : tab.order) k_deg[v] = K.degree_vector(v);
  for (VertexId w : l_verts) l_deg[w] = L.degree_vector(w);

  std::map<VertexId, VertexId> assign;
  std::set<VertexId> used;

  auto rec = [&](auto&& self, std::size_t i) -> bool {
    if (i == tab.order.size()) return true;
    VertexId u = tab.order[i];
    for (VertexId w : l_verts) {
      if (used.count(w) || k_deg[u] != l_deg[w]) continue;
      assign[u] = w;
      used.insert(w);
      bool ok = true;
      for (const Simplex& s : tab.closed_by[i])
        if (!L.contains(map_simplex(s, assign))) {
          ok = false;
          break;
        }
      if (ok && self(self, i + 1)) return true;
      assign.erase(u);
      used.erase(w);
    }
    return false;
  };

  // Since simplex counts match and the vertex map is injective, mapping
  // every simplex of K into L already forces a bijection on simplices.
  if (rec(rec, 0)) return assign;
  return std::nullopt;
}

SubcomplexMatches count_isomorphic_subcomplexes(const Complex& host,
                                                const Complex& pattern) {
  if (host.vertex_count() > 12)
    throw std::invalid_argument("count_isomorphic_subcomplexes: host exceeds 12 vertices");

  SubcomplexMatches out;
  if (pattern.vertex_count() > host.vertex_count() || pattern.dim() > host.dim())
    return out;

  SearchTables tab = make_tables(pattern);
  std::vector<VertexId> h_verts = host.vertex_ids();

  std::map<VertexId, std::vector<int>> p_deg, h_deg;
  for (VertexId v : tab.order) p_deg[v] = pattern.degree_vector(v);
  for (VertexId w : h_verts) h_deg[w] = host.degree_vector(w);
  // A pattern vertex can land on a host vertex only if the host offers at
  // least its incidences in every shared dimension.
  auto fits = [&](VertexId u, VertexId w) {
    const auto& pu = p_deg[u];
    const auto& hw = h_deg[w];
    for (std::size_t k = 0; k < pu.size(); ++k)
      if (pu[k] > (k < hw.size() ? hw[k] : 0)) return false;
    return true;
  };

  std::set<std::vector<Simplex>> seen;
  std::map<VertexId, VertexId> assign;
  std::set<VertexId> used;

  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == tab.order.size()) {
      std::set<Simplex> image;
      for (const Simplex& s : pattern.simplices()) image.insert(map_simplex(s, assign));
      std::vector<Simplex> image_vec(image.begin(), image.end());
      if (seen.insert(image_vec).second) {
        std::vector<VertexId> verts;
        for (const auto& [u, w] : assign) verts.push_back(w);
        std::sort(verts.begin(), verts.end());
        out.subcomplexes.push_back(std::move(image_vec));
        out.vertex_images.push_back(std::move(verts));
      }
      return;
    }
    VertexId u = tab.order[i];
    for (VertexId w : h_verts) {
      if (used.count(w) || !fits(u, w)) continue;
      assign[u] = w;
      used.insert(w);
      bool ok = true;
      for (const Simplex& s : tab.closed_by[i])
        if (!host.contains(map_simplex(s, assign))) {
          ok = false;
          break;
        }
      if (ok) self(self, i + 1);
      assign.erase(u);
      used.erase(w);
    }
  };
  rec(rec, 0);
  return out;
}

}  // namespace linkobs
