#include "linkobs/links.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "linkobs/isomorphism.hpp"

namespace linkobs {

namespace {

void require_standard_M(const MJComplex& M) {
  if (M.n < 1 || !(M.complex == build_M(M.n).complex))
    throw std::invalid_argument("expected the complex built over the skeleton of a 2n-simplex");
}

std::vector<std::vector<VertexId>> subsets_of_size(const std::vector<VertexId>& pool,
                                                   std::size_t k) {
  std::vector<std::vector<VertexId>> out;
  std::vector<VertexId> cur(k);
  auto rec = [&](auto&& self, std::size_t start, std::size_t depth) -> void {
    if (depth == k) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = start; i + (k - depth) <= pool.size(); ++i) {
      cur[depth] = pool[i];
      self(self, i + 1, depth + 1);
    }
  };
  if (k <= pool.size()) rec(rec, 0, 0);
  return out;
}

// Boundary sphere of the simplex on `verts`: the closure of its facets.
Complex boundary_complex(const Complex& host, const std::vector<VertexId>& verts) {
  Simplex top = Simplex::sorted(std::vector<VertexId>(verts));
  std::vector<Simplex> tops = top.facets();
  std::map<VertexId, std::string> labels;
  for (VertexId v : top.vertices()) labels[v] = host.label(v);
  return Complex::closure(tops, std::move(labels));
}

bool connected(const Complex& K) {
  std::vector<VertexId> verts = K.vertex_ids();
  if (verts.empty()) return false;
  std::map<VertexId, std::size_t> pos;
  for (std::size_t i = 0; i < verts.size(); ++i) pos[verts[i]] = i;
  std::vector<std::size_t> parent(verts.size());
  for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = i;
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const Simplex& s : K.simplices())
    for (std::size_t i = 1; i < s.size(); ++i) {
      std::size_t a = find(pos[s.vertices()[0]]);
      std::size_t b = find(pos[s.vertices()[i]]);
      if (a != b) parent[a] = b;
    }
  std::size_t root = find(0);
  for (std::size_t i = 1; i < verts.size(); ++i)
    if (find(i) != root) return false;
  return true;
}

}  // namespace

std::vector<std::pair<Simplex, Complex>> gamma_family_n(const MJComplex& M) {
  require_standard_M(M);
  std::vector<VertexId> base;
  for (VertexId v = 0; v < 2 * M.n + 1; ++v) base.push_back(v);
  std::vector<std::pair<Simplex, Complex>> out;
  for (const auto& tau : subsets_of_size(base, static_cast<std::size_t>(M.n) + 1)) {
    // Boundary of tau joined with both apexes.
    std::vector<Simplex> tops;
    for (const Simplex& rho : Simplex::sorted(std::vector<VertexId>(tau)).facets()) {
      tops.push_back(rho.with_vertex(M.a));
      tops.push_back(rho.with_vertex(M.b));
    }
    std::map<VertexId, std::string> labels;
    for (VertexId v : tau) labels[v] = M.complex.label(v);
    labels[M.a] = M.complex.label(M.a);
    labels[M.b] = M.complex.label(M.b);
    out.emplace_back(Simplex::sorted(std::vector<VertexId>(tau)),
                     Complex::closure(tops, std::move(labels)));
  }
  return out;
}

std::vector<std::pair<Simplex, Complex>> gamma_family_n_minus_1(const MJComplex& M) {
  require_standard_M(M);
  std::vector<VertexId> base;
  for (VertexId v = 0; v < 2 * M.n + 1; ++v) base.push_back(v);
  std::vector<std::pair<Simplex, Complex>> out;
  for (const auto& tp : subsets_of_size(base, static_cast<std::size_t>(M.n))) {
    std::vector<VertexId> verts = tp;
    verts.push_back(M.c);
    std::map<VertexId, std::string> labels;
    for (VertexId v : verts) labels[v] = M.complex.label(v);
    Simplex filled = Simplex::sorted(std::vector<VertexId>(verts));
    out.emplace_back(Simplex::sorted(std::vector<VertexId>(tp)),
                     Complex::closure(filled.facets(), std::move(labels)));
  }
  return out;
}

std::vector<LinkPair> lambda_pairs(const MJComplex& M) {
  require_standard_M(M);
  auto spheres_n = gamma_family_n(M);
  auto spheres_n_minus_1 = gamma_family_n_minus_1(M);
  std::vector<LinkPair> out;
  for (const auto& [tp, gamma] : spheres_n_minus_1)
    for (const auto& [tau, delta] : spheres_n) {
      if (!tp.disjoint_from(tau)) continue;
      out.push_back({gamma, delta, tp, tau});
    }
  return out;
}

bool validate_sphere(const Complex& sub, int d) {
  if (d < 0 || d > 2)
    throw std::invalid_argument("validate_sphere: only d <= 2 supported");
  if (sub.simplices().empty()) return false;
  if (sub.dim() != d) return false;

  if (d == 0) return sub.simplices().size() == 2 && sub.count_of_dim(0) == 2;

  if (d == 1) {
    if (!connected(sub)) return false;
    for (VertexId v : sub.vertex_ids()) {
      int deg = 0;
      for (const Simplex& s : sub.simplices())
        if (s.dim() == 1 && s.contains(v)) ++deg;
      if (deg != 2) return false;
    }
    return true;
  }

  // d == 2: closed connected surface with chi = 2.
  if (!connected(sub)) return false;
  std::vector<Simplex> tris = sub.simplices_of_dim(2);
  for (const Simplex& e : sub.simplices_of_dim(1)) {
    int cofaces = 0;
    for (const Simplex& t : tris)
      if (e.is_face_of(t)) ++cofaces;
    if (cofaces != 2) return false;
  }
  for (VertexId v : sub.vertex_ids()) {
    // Link of v: neighbors joined when they share a triangle with v; must
    // be a single cycle.
    std::vector<VertexId> nbrs;
    std::vector<std::pair<VertexId, VertexId>> ledges;
    for (const Simplex& t : tris) {
      if (!t.contains(v)) continue;
      std::vector<VertexId> others;
      for (VertexId w : t.vertices())
        if (w != v) others.push_back(w);
      ledges.emplace_back(others[0], others[1]);
      nbrs.push_back(others[0]);
      nbrs.push_back(others[1]);
    }
    if (ledges.empty()) return false;
    std::sort(nbrs.begin(), nbrs.end());
    nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
    std::map<VertexId, int> deg;
    for (const auto& [x, y] : ledges) {
      ++deg[x];
      ++deg[y];
    }
    for (VertexId w : nbrs)
      if (deg[w] != 2) return false;
    // Connectivity of the link graph.
    std::map<VertexId, VertexId> parent;
    for (VertexId w : nbrs) parent[w] = w;
    auto find = [&](VertexId x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const auto& [x, y] : ledges) {
      VertexId a = find(x), b = find(y);
      if (a != b) parent[a] = b;
    }
    for (VertexId w : nbrs)
      if (find(w) != find(nbrs[0])) return false;
  }
  long chi = static_cast<long>(sub.count_of_dim(0)) - static_cast<long>(sub.count_of_dim(1)) +
             static_cast<long>(tris.size());
  return chi == 2;
}

namespace {

// All simple cycles of the 1-skeleton, as edge-set subcomplexes.
std::vector<std::vector<Simplex>> simple_cycles(const Complex& K) {
  std::vector<VertexId> verts = K.vertex_ids();
  std::map<VertexId, std::vector<VertexId>> adj;
  for (const Simplex& e : K.simplices_of_dim(1)) {
    adj[e.vertices()[0]].push_back(e.vertices()[1]);
    adj[e.vertices()[1]].push_back(e.vertices()[0]);
  }
  for (auto& [v, nb] : adj) std::sort(nb.begin(), nb.end());

  std::set<std::vector<Simplex>> found;
  std::vector<VertexId> path;
  std::set<VertexId> on_path;

  auto emit = [&](const std::vector<VertexId>& cycle) {
    std::vector<Simplex> edges;
    for (std::size_t i = 0; i < cycle.size(); ++i)
      edges.push_back(Simplex::sorted({cycle[i], cycle[(i + 1) % cycle.size()]}));
    std::sort(edges.begin(), edges.end());
    found.insert(std::move(edges));
  };

  // Cycles rooted at their smallest vertex; interior vertices larger.
  auto rec = [&](auto&& self, VertexId root, VertexId v) -> void {
    for (VertexId w : adj[v]) {
      if (w == root && path.size() >= 3) emit(path);
      if (w <= root || on_path.count(w)) continue;
      path.push_back(w);
      on_path.insert(w);
      self(self, root, w);
      path.pop_back();
      on_path.erase(w);
    }
  };
  for (VertexId root : verts) {
    path = {root};
    on_path = {root};
    rec(rec, root, root);
  }
  return {found.begin(), found.end()};
}

std::vector<Simplex> closure_simplices(const std::vector<Simplex>& tops) {
  std::set<Simplex> closed;
  for (const Simplex& t : tops)
    for (Simplex& f : t.faces()) closed.insert(std::move(f));
  return {closed.begin(), closed.end()};
}

}  // namespace

std::vector<SpherePairKey> sphere_pairs_bruteforce(const MJComplex& M) {
  require_standard_M(M);
  const int n = M.n;
  if (n > 2)
    throw std::invalid_argument("sphere_pairs_bruteforce: exhaustive sweep supported for n <= 2");
  const Complex& K = M.complex;

  // Candidate (n-1)-spheres.
  std::vector<std::vector<Simplex>> gammas;
  if (n == 1) {
    std::vector<VertexId> verts = K.vertex_ids();
    for (std::size_t i = 0; i < verts.size(); ++i)
      for (std::size_t j = i + 1; j < verts.size(); ++j)
        gammas.push_back({Simplex{verts[i]}, Simplex{verts[j]}});
  } else {
    for (const auto& edges : simple_cycles(K)) {
      std::vector<Simplex> sims = closure_simplices(edges);
      if (validate_sphere(subcomplex(K, sims), 1)) gammas.push_back(std::move(sims));
    }
  }

  // Candidate n-spheres.
  std::vector<std::vector<Simplex>> deltas;
  if (n == 1) {
    for (const auto& edges : simple_cycles(K)) {
      std::vector<Simplex> sims = closure_simplices(edges);
      if (validate_sphere(subcomplex(K, sims), 1)) deltas.push_back(std::move(sims));
    }
  } else {
    // Closed triangle sets are exactly the GF(2) kernel of the boundary
    // map from triangles to edges; spheres are the connected ones with
    // good links and chi = 2.
    std::vector<Simplex> tris = K.simplices_of_dim(2);
    std::vector<Simplex> edges = K.simplices_of_dim(1);
    std::map<Simplex, std::size_t> edge_index;
    for (std::size_t i = 0; i < edges.size(); ++i) edge_index[edges[i]] = i;
    BitMatrix boundary(edges.size(), tris.size());
    for (std::size_t c = 0; c < tris.size(); ++c)
      for (const Simplex& f : tris[c].facets())
        boundary.set(edge_index.at(f), c, true);
    std::vector<BitVec> kernel = gf2_kernel_basis(boundary);
    if (kernel.size() > 20)
      throw std::invalid_argument("sphere_pairs_bruteforce: cycle space too large to enumerate");
    for (std::size_t mask = 1; mask < (std::size_t{1} << kernel.size()); ++mask) {
      BitVec combo(tris.size());
      for (std::size_t b = 0; b < kernel.size(); ++b)
        if (mask & (std::size_t{1} << b)) combo ^= kernel[b];
      std::vector<Simplex> tops;
      for (std::size_t c = 0; c < tris.size(); ++c)
        if (combo.get(c)) tops.push_back(tris[c]);
      if (tops.empty()) continue;
      std::vector<Simplex> sims = closure_simplices(tops);
      if (validate_sphere(subcomplex(K, sims), 2)) deltas.push_back(std::move(sims));
    }
  }

  auto vertex_set = [](const std::vector<Simplex>& sims) {
    std::set<VertexId> out;
    for (const Simplex& s : sims)
      for (VertexId v : s.vertices()) out.insert(v);
    return out;
  };

  std::set<SpherePairKey> pairs;
  for (const auto& g : gammas) {
    std::set<VertexId> gv = vertex_set(g);
    for (const auto& d : deltas) {
      bool disjoint = true;
      for (VertexId v : vertex_set(d))
        if (gv.count(v)) {
          disjoint = false;
          break;
        }
      if (disjoint) pairs.insert({g, d});
    }
  }
  return {pairs.begin(), pairs.end()};
}

bool lambda_enumeration_exhaustive(const MJComplex& M) {
  std::set<SpherePairKey> family;
  for (const LinkPair& lp : lambda_pairs(M))
    family.insert({lp.gamma.simplices(), lp.delta.simplices()});
  auto swept = sphere_pairs_bruteforce(M);
  return family == std::set<SpherePairKey>(swept.begin(), swept.end());
}

BaseLinkTable base_link_table(const GeometricMap& h, int n, std::uint64_t apex_seed) {
  const Complex& base = h.complex;
  std::vector<VertexId> verts = base.vertex_ids();
  if (verts.size() != static_cast<std::size_t>(2 * n + 2))
    throw std::invalid_argument("base_link_table: expected 2n+2 vertices");

  BaseLinkTable table;
  std::vector<VertexId> rest(verts.begin() + 1, verts.end());
  for (const auto& half : subsets_of_size(rest, static_cast<std::size_t>(n))) {
    std::vector<VertexId> first = {verts[0]};
    first.insert(first.end(), half.begin(), half.end());
    std::sort(first.begin(), first.end());
    std::vector<VertexId> second;
    std::set_difference(verts.begin(), verts.end(), first.begin(), first.end(),
                        std::back_inserter(second));
    Complex gamma = boundary_complex(base, first);
    Complex delta = boundary_complex(base, second);
    int lk = lk2(h, gamma, delta, {apex_seed});
    table.entries.push_back({Simplex::sorted(std::vector<VertexId>(first)),
                             Simplex::sorted(std::vector<VertexId>(second)), lk});
    table.nontrivial += lk;
  }
  return table;
}

std::vector<long> default_moment_params(int n) {
  std::vector<long> params;
  for (long t = 1; t <= 2 * n + 2; ++t) params.push_back(t);
  return params;
}

GeometricMap moment_base_map(int n, const std::vector<long>& params) {
  if (params.size() != static_cast<std::size_t>(2 * n + 2))
    throw std::invalid_argument("moment_base_map: need 2n+2 parameters");
  Complex base = skeleton(2 * n + 1, n - 1);
  std::vector<Point> pts = moment_curve(params, std::max(1, 2 * n - 1));
  GeometricMap out;
  out.complex = base;
  out.ambient = std::max(1, 2 * n - 1);
  std::vector<VertexId> verts = base.vertex_ids();
  for (std::size_t i = 0; i < verts.size(); ++i) out.coords[verts[i]] = pts[i];
  return out;
}

GeometricMap embed_M_suspension(const MJComplex& M, const std::vector<long>& params,
                                const std::vector<int>& perm) {
  require_standard_M(M);
  const int n = M.n;
  const std::size_t slots = static_cast<std::size_t>(2 * n + 2);
  if (params.size() != slots)
    throw std::invalid_argument("embed_M_suspension: need 2n+2 moment parameters");
  std::vector<int> assignment(perm);
  if (assignment.empty())
    for (std::size_t i = 0; i < slots; ++i) assignment.push_back(static_cast<int>(i));
  if (assignment.size() != slots)
    throw std::invalid_argument("embed_M_suspension: relabeling must cover all base slots");

  std::vector<Point> pts = moment_curve(params, std::max(1, 2 * n - 1));

  // Base part of M: everything not joined with an apex. That is the
  // (n-1)-skeleton of a (2n+1)-simplex, with c in the last slot.
  std::vector<Simplex> base_sims;
  for (const Simplex& s : M.complex.simplices())
    if (!s.contains(M.a) && !s.contains(M.b)) base_sims.push_back(s);
  Complex base = subcomplex(M.complex, base_sims);

  GeometricMap base_map;
  base_map.complex = base;
  base_map.ambient = std::max(1, 2 * n - 1);
  for (VertexId v = 0; v < 2 * n + 1; ++v)
    base_map.coords[v] = pts[static_cast<std::size_t>(assignment[static_cast<std::size_t>(v)])];
  base_map.coords[M.c] = pts[static_cast<std::size_t>(assignment[slots - 1])];

  return suspension_embedding(base_map, M.complex, M.a, M.b, Rat(1), Rat(-1));
}

GeometricMap embed_suspension_complex(const Complex& S, int n,
                                      const std::vector<long>& params) {
  GeometricMap base_map = moment_base_map(n, params);
  VertexId apex_a = 2 * n + 2, apex_b = 2 * n + 3;
  return suspension_embedding(base_map, S, apex_a, apex_b, Rat(1), Rat(-1));
}

Thm12Report verify_theorem_1_2(int n, std::uint64_t seed, std::vector<long> base_params) {
  if (n < 1 || n > 3)
    throw std::invalid_argument("verify_theorem_1_2: n in {1,2,3} supported");
  Thm12Report rep;
  rep.n = n;
  rep.seed = seed;
  rep.base_params = base_params.empty() ? default_moment_params(n) : std::move(base_params);

  MJComplex M = build_M(n);
  rep.map = embed_M_suspension(M, rep.base_params);
  rep.embedding_ok = is_embedding(rep.map);

  rep.lambdas = lambda_pairs(M);
  rep.lambda_count = rep.lambdas.size();
  int sum = 0;
  for (std::size_t i = 0; i < rep.lambdas.size(); ++i) {
    const LinkPair& lp = rep.lambdas[i];
    int lk = lk2(rep.map, lp.gamma, lp.delta, {seed});
    // Independent route: crossings of the realized filling simplex
    // tau' * c with the polyhedron of delta.
    int filled = filling_intersection_parity(rep.map, lp.tau_prime.with_vertex(M.c), lp.delta);
    if (lk != filled) ++rep.filling_route_mismatches;
    rep.lk_values.push_back(lk);
    if (lk) rep.nontrivial.push_back(i);
    sum += lk;
  }
  rep.sum_mod2 = sum % 2;
  rep.pass = rep.embedding_ok && rep.sum_mod2 == 1 && !rep.nontrivial.empty() &&
             rep.filling_route_mismatches == 0;
  return rep;
}

namespace {

std::vector<Simplex> maximal_simplices(const Complex& K) {
  std::vector<Simplex> out;
  for (const Simplex& s : K.simplices()) {
    bool maximal = true;
    for (const Simplex& t : K.simplices())
      if (s != t && s.is_face_of(t)) {
        maximal = false;
        break;
      }
    if (maximal) out.push_back(s);
  }
  return out;
}

std::string simplex_labels(const Complex& K, const Simplex& s) {
  std::string out;
  for (VertexId v : s.vertices()) {
    if (!out.empty()) out += ' ';
    out += K.label(v);
  }
  return out;
}

}  // namespace

Prop13Report verify_prop_1_3(int n, Prop13Which which, std::uint64_t seed) {
  if (n < 1 || n > 3)
    throw std::invalid_argument("verify_prop_1_3: n in {1,2,3} supported");
  Prop13Report rep;
  rep.n = n;
  rep.seed = seed;

  MJComplex M = build_M(n);
  std::vector<long> params = default_moment_params(n);
  GeometricMap base = moment_base_map(n, params);
  BaseLinkTable table = base_link_table(base, n, seed);
  rep.base_pairs = table.entries.size();
  rep.base_nontrivial = table.nontrivial;
  if (table.nontrivial != 1) {
    rep.pass = false;
    return rep;
  }

  // Relabel the base so the unique nontrivial pair becomes
  // {a_{n+1}..a_{2n+1}} | {a_0..a_n}; slot i then carries moment point
  // relabel[i]. The slot for c is 2n+1. Both side assignments are valid,
  // keep the lexicographically smaller permutation.
  const BaseLinkTable::Entry* hot = nullptr;
  for (const auto& e : table.entries)
    if (e.lk == 1) hot = &e;
  std::vector<int> best;
  for (int flip = 0; flip < 2; ++flip) {
    const auto& to_t1 = flip ? hot->first_part : hot->second_part;   // points for slots n+1..2n+1
    const auto& to_t0 = flip ? hot->second_part : hot->first_part;   // points for slots 0..n
    std::vector<int> perm(static_cast<std::size_t>(2 * n + 2), -1);
    for (int i = 0; i <= n; ++i) perm[static_cast<std::size_t>(i)] = to_t0.vertices()[static_cast<std::size_t>(i)];
    for (int i = 0; i <= n; ++i)
      perm[static_cast<std::size_t>(n + 1 + i)] = to_t1.vertices()[static_cast<std::size_t>(i)];
    if (best.empty() || perm < best) best = perm;
  }
  rep.relabel = best;

  // Confirm the relabeled table is normalized as intended.
  {
    GeometricMap relabeled = base;
    std::vector<Point> pts = moment_curve(params, std::max(1, 2 * n - 1));
    for (std::size_t slot = 0; slot < best.size(); ++slot)
      relabeled.coords[static_cast<VertexId>(slot)] = pts[static_cast<std::size_t>(best[slot])];
    BaseLinkTable check = base_link_table(relabeled, n, seed);
    std::vector<VertexId> t0, t1;
    for (int i = 0; i <= n; ++i) t0.push_back(i);
    for (int i = n + 1; i <= 2 * n + 1; ++i) t1.push_back(i);
    Simplex s0 = Simplex::sorted(std::vector<VertexId>(t0));
    Simplex s1 = Simplex::sorted(std::vector<VertexId>(t1));
    bool normalized = check.nontrivial == 1;
    for (const auto& e : check.entries)
      if (e.lk == 1 && !((e.first_part == s0 && e.second_part == s1) ||
                         (e.first_part == s1 && e.second_part == s0)))
        normalized = false;
    if (!normalized) {
      rep.pass = false;
      return rep;
    }
  }

  GeometricMap full = embed_M_suspension(M, params, rep.relabel);
  std::vector<LinkPair> lambdas = lambda_pairs(M);

  auto run_check = [&](const std::string& name, const Simplex& removed) {
    Prop13Report::SubcomplexCheck check;
    check.name = name;
    check.removed = simplex_labels(M.complex, removed);
    Complex sub = delete_simplices(M.complex, {removed});
    check.map = restrict_map(full, sub);
    check.embedding_ok = is_embedding(check.map);
    for (const LinkPair& lp : lambdas) {
      if (!sub.contains_all(lp.gamma) || !sub.contains_all(lp.delta)) continue;
      ++check.surviving_lambdas;
      if (lk2(check.map, lp.gamma, lp.delta, {seed}) == 0) ++check.zero_count;
    }
    check.all_zero = check.zero_count == check.surviving_lambdas;
    rep.checks.push_back(std::move(check));
  };

  // N1 drops the last c-cone simplex; N2 drops one apex-joined n-simplex.
  std::vector<VertexId> n1_verts, n2_verts;
  for (int v = n + 2; v <= 2 * n; ++v) n1_verts.push_back(v);
  n1_verts.push_back(M.c);
  for (int v = 0; v <= n - 1; ++v) n2_verts.push_back(v);
  n2_verts.push_back(M.a);
  Simplex n1_removed = Simplex::sorted(std::vector<VertexId>(n1_verts));
  Simplex n2_removed = Simplex::sorted(std::vector<VertexId>(n2_verts));

  if (which == Prop13Which::N1 || which == Prop13Which::All) run_check("N1", n1_removed);
  if (which == Prop13Which::N2 || which == Prop13Which::All) run_check("N2", n2_removed);

  bool classification_ok = true;
  if (which == Prop13Which::AllMaximal || which == Prop13Which::All) {
    Complex n1_ref = delete_simplices(M.complex, {n1_removed});
    Complex n2_ref = delete_simplices(M.complex, {n2_removed});
    for (const Simplex& top : maximal_simplices(M.complex)) {
      ++rep.maximal_simplices;
      Complex cut = delete_simplices(M.complex, {top});
      if (find_isomorphism(cut, n1_ref))
        ++rep.n1_type;
      else if (find_isomorphism(cut, n2_ref))
        ++rep.n2_type;
      else
        ++rep.unclassified;
    }
    classification_ok = rep.maximal_simplices > 0 && rep.unclassified == 0;
  }

  rep.pass = classification_ok;
  for (const auto& check : rep.checks)
    rep.pass = rep.pass && check.all_zero && check.embedding_ok;
  return rep;
}

SuspensionReport verify_suspension_claims(int n, std::uint64_t seed) {
  if (n < 1 || n > 2)
    throw std::invalid_argument("verify_suspension_claims: n in {1,2} supported");
  SuspensionReport rep;
  rep.n = n;
  rep.seed = seed;
  rep.expected_copies = static_cast<std::size_t>(2 * n + 2);
  rep.sharing_value = static_cast<std::size_t>(n + 1);

  Complex S = suspension(skeleton(2 * n + 1, n - 1));
  MJComplex M = build_M(n);
  SubcomplexMatches matches = count_isomorphic_subcomplexes(S, M.complex);
  rep.copies = matches.count();

  // Transport each copy's link pairs into the suspension through one
  // isomorphism; the pair set is intrinsic to the copy.
  std::vector<LinkPair> lambdas = lambda_pairs(M);
  std::set<SpherePairKey> union_lambdas;
  std::vector<std::set<Simplex>> copy_sets;
  for (const auto& sims : matches.subcomplexes) {
    copy_sets.emplace_back(sims.begin(), sims.end());
    Complex copy = subcomplex(S, sims);
    auto iso = find_isomorphism(M.complex, copy);
    if (!iso) {
      rep.pass = false;
      return rep;
    }
    auto transport = [&](const Complex& part) {
      std::vector<Simplex> mapped;
      for (const Simplex& s : part.simplices()) {
        std::vector<VertexId> w;
        for (VertexId v : s.vertices()) w.push_back(iso->at(v));
        mapped.push_back(Simplex::sorted(std::move(w)));
      }
      std::sort(mapped.begin(), mapped.end());
      return mapped;
    };
    for (const LinkPair& lp : lambdas)
      union_lambdas.insert({transport(lp.gamma), transport(lp.delta)});
  }
  rep.lambda_union = union_lambdas.size();

  rep.sharing_ok = true;
  for (const auto& [g, d] : union_lambdas) {
    std::size_t owners = 0;
    for (const auto& copy : copy_sets) {
      bool inside = true;
      for (const Simplex& s : g)
        if (!copy.count(s)) {
          inside = false;
          break;
        }
      if (inside)
        for (const Simplex& s : d)
          if (!copy.count(s)) {
            inside = false;
            break;
          }
      if (inside) ++owners;
    }
    if (owners != rep.sharing_value) rep.sharing_ok = false;
  }

  rep.map = embed_suspension_complex(S, n, default_moment_params(n));
  rep.embedding_ok = is_embedding(rep.map);
  for (const auto& [g, d] : union_lambdas) {
    int lk = lk2(rep.map, subcomplex(S, g), subcomplex(S, d), {seed});
    rep.lk_values.push_back(lk);
    rep.lk_integer_sum += lk;
    if (lk) ++rep.nontrivial_count;
  }
  rep.sum_mod4 = static_cast<int>(rep.lk_integer_sum % 4);

  rep.pass = rep.copies == rep.expected_copies && rep.sharing_ok && rep.embedding_ok &&
             rep.nontrivial_count >= 2;
  if (n == 2) rep.pass = rep.pass && rep.sum_mod4 == 2;
  return rep;
}

Complex construct_N2(int n) {
  if (n < 1) throw std::invalid_argument("construct_N2: n >= 1 required");
  const VertexId a = 3 * n, b = 3 * n + 1, c = 3 * n + 2;
  std::vector<Simplex> sims;

  // Transversal faces of the n-fold join of three points: pick a subset of
  // factors and one point in each.
  std::vector<std::vector<VertexId>> transversal{{}};
  for (int i = 0; i < n; ++i) {
    std::vector<std::vector<VertexId>> next;
    for (const auto& partial : transversal) {
      next.push_back(partial);  // skip factor i
      for (int j = 0; j < 3; ++j) {
        auto ext = partial;
        ext.push_back(3 * i + j);
        next.push_back(std::move(ext));
      }
    }
    transversal = std::move(next);
  }

  for (const auto& verts : transversal) {
    if (!verts.empty()) sims.push_back(Simplex::sorted(std::vector<VertexId>(verts)));
    for (VertexId apex : {a, b}) {
      auto ext = verts;
      ext.push_back(apex);
      sims.push_back(Simplex::sorted(std::move(ext)));
    }
    if (static_cast<int>(verts.size()) <= n - 1) {
      auto ext = verts;
      ext.push_back(c);
      sims.push_back(Simplex::sorted(std::move(ext)));
    }
  }

  std::map<VertexId, std::string> labels;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < 3; ++j) labels[3 * i + j] = "u" + std::to_string(i) + std::to_string(j);
  labels[a] = "a";
  labels[b] = "b";
  labels[c] = "c";
  return Complex::closure(sims, std::move(labels));
}

Remark14Report verify_remark_1_4(int n, std::uint64_t seed, int trials) {
  if (n < 1 || n > 2)
    throw std::invalid_argument("verify_remark_1_4: n in {1,2} supported");
  Remark14Report rep;
  rep.n = n;
  rep.seed = seed;
  rep.trials = trials;

  MJComplex MJ = build_M_J(triple_join(n), n);
  rep.iso_to_n2 = find_isomorphism(MJ.complex, construct_N2(n)).has_value();

  Complex K = join_with_points(triple_join(n), {"a", "b", "c"}).first;
  rep.lemma_analogue = verify_lemma_2_1_for(K, n);

  Thm22Report thm = verify_theorem_2_2_for(K, n, trials, seed);
  rep.parities = thm.parities;
  rep.all_odd = thm.all_odd;

  rep.pass = rep.iso_to_n2 && rep.lemma_analogue.pass && rep.all_odd;
  return rep;
}

}  // namespace linkobs
