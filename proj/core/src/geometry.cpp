#include "linkobs/geometry.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "linkobs/linear.hpp"
#include "linkobs/parallel.hpp"
#include "linkobs/rng.hpp"

namespace linkobs {

const Point& GeometricMap::at(VertexId v) const {
  auto it = coords.find(v);
  if (it == coords.end())
    throw std::invalid_argument("GeometricMap: no coordinates for vertex " + std::to_string(v));
  return it->second;
}

std::vector<Point> GeometricMap::points_of(const Simplex& s) const {
  std::vector<Point> pts;
  pts.reserve(s.size());
  for (VertexId v : s.vertices()) pts.push_back(at(v));
  return pts;
}

std::vector<Point> moment_curve(const std::vector<long>& params, int m) {
  if (m < 1) throw std::invalid_argument("moment_curve: m >= 1 required");
  for (std::size_t i = 1; i < params.size(); ++i)
    if (params[i] <= params[i - 1])
      throw std::invalid_argument("moment_curve: parameters must be strictly increasing");
  std::vector<Point> pts;
  for (long t : params) {
    Point p(static_cast<std::size_t>(m));
    Rat pow(1);
    for (int j = 0; j < m; ++j) {
      pow *= Rat(t);
      p[static_cast<std::size_t>(j)] = pow;
    }
    pts.push_back(std::move(p));
  }
  return pts;
}

bool general_position_check(const std::vector<Point>& pts, int m) {
  for (const Point& p : pts)
    if (static_cast<int>(p.size()) != m)
      throw std::invalid_argument("general_position_check: wrong ambient dimension");
  const std::size_t n = pts.size();
  const std::size_t k = std::min<std::size_t>(n, static_cast<std::size_t>(m) + 1);
  // Affine independence is inherited by subsets, so testing all k-subsets
  // covers every smaller subset as well.
  std::vector<std::size_t> idx(k);
  bool ok = true;
  auto rec = [&](auto&& self, std::size_t start, std::size_t depth) -> void {
    if (!ok) return;
    if (depth == k) {
      std::vector<Point> sub;
      sub.reserve(k);
      for (std::size_t i : idx) sub.push_back(pts[i]);
      if (!affinely_independent(sub)) ok = false;
      return;
    }
    for (std::size_t i = start; i + (k - depth) <= n; ++i) {
      idx[depth] = i;
      self(self, i + 1, depth + 1);
    }
  };
  if (n >= 2) rec(rec, 0, 0);
  return ok;
}

std::vector<Point> random_integer_points(int count, int m, long bound,
                                         std::uint64_t seed, int retries) {
  if (bound < 1) throw std::invalid_argument("random_integer_points: bound >= 1 required");
  if (count < 0 || m < 1) throw std::invalid_argument("random_integer_points: bad shape");
  SplitMix64 rng(seed);
  for (int attempt = 0; attempt < retries; ++attempt) {
    std::vector<Point> pts;
    pts.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) {
      Point p(static_cast<std::size_t>(m));
      for (int j = 0; j < m; ++j)
        p[static_cast<std::size_t>(j)] = Rat(static_cast<long>(rng.next_symmetric(bound)));
      pts.push_back(std::move(p));
    }
    if (general_position_check(pts, m)) return pts;
  }
  throw RetryExhausted("random_integer_points: no general-position sample within budget (bound too small?)");
}

namespace {

// Barycentric system for conv(s_pts) vs conv(t_pts): unknowns (lambda, mu),
// rows = ambient coordinate match plus the two normalizations.
void build_pair_system(const std::vector<Point>& s_pts, const std::vector<Point>& t_pts,
                       int m, RatMatrix& A, std::vector<Rat>& b) {
  const std::size_t ns = s_pts.size(), nt = t_pts.size();
  A.assign(static_cast<std::size_t>(m) + 2, std::vector<Rat>(ns + nt, Rat(0)));
  b.assign(static_cast<std::size_t>(m) + 2, Rat(0));
  for (int row = 0; row < m; ++row) {
    for (std::size_t i = 0; i < ns; ++i) A[static_cast<std::size_t>(row)][i] = s_pts[i][static_cast<std::size_t>(row)];
    for (std::size_t j = 0; j < nt; ++j) A[static_cast<std::size_t>(row)][ns + j] = -t_pts[j][static_cast<std::size_t>(row)];
  }
  for (std::size_t i = 0; i < ns; ++i) A[static_cast<std::size_t>(m)][i] = 1;
  b[static_cast<std::size_t>(m)] = 1;
  for (std::size_t j = 0; j < nt; ++j) A[static_cast<std::size_t>(m) + 1][ns + j] = 1;
  b[static_cast<std::size_t>(m) + 1] = 1;
}

Point combination(const std::vector<Point>& pts, const std::vector<Rat>& w, int m) {
  Point x(static_cast<std::size_t>(m), Rat(0));
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (int j = 0; j < m; ++j) x[static_cast<std::size_t>(j)] += w[i] * pts[i][static_cast<std::size_t>(j)];
  return x;
}

}  // namespace

IntersectionResult intersect_complementary(const std::vector<Point>& s_pts,
                                           const std::vector<Point>& t_pts, int m) {
  const int p = static_cast<int>(s_pts.size()) - 1;
  const int q = static_cast<int>(t_pts.size()) - 1;
  if (p < 0 || q < 0 || p + q != m)
    throw std::invalid_argument("intersect_complementary: dimensions must satisfy p + q = m");
  for (const Point& pt : s_pts)
    if (static_cast<int>(pt.size()) != m) throw std::invalid_argument("intersect_complementary: bad point dimension");
  for (const Point& pt : t_pts)
    if (static_cast<int>(pt.size()) != m) throw std::invalid_argument("intersect_complementary: bad point dimension");
  if (!affinely_independent(s_pts) || !affinely_independent(t_pts))
    throw std::invalid_argument("intersect_complementary: affinely dependent input simplex");

  RatMatrix A;
  std::vector<Rat> b;
  build_pair_system(s_pts, t_pts, m, A, b);
  LinearSolution sol = solve_linear(std::move(A), std::move(b));
  switch (sol.kind) {
    case LinearSolution::Kind::None:
      return {IntersectKind::Empty, std::nullopt};
    case LinearSolution::Kind::Underdetermined:
      return {IntersectKind::Degenerate, std::nullopt};
    case LinearSolution::Kind::Unique:
      break;
  }
  bool zero = false;
  for (const Rat& v : sol.x) {
    if (v < 0) return {IntersectKind::Empty, std::nullopt};
    if (v == 0) zero = true;
  }
  if (zero) return {IntersectKind::Degenerate, std::nullopt};
  std::vector<Rat> lambda(sol.x.begin(), sol.x.begin() + static_cast<std::ptrdiff_t>(s_pts.size()));
  return {IntersectKind::Transversal, combination(s_pts, lambda, m)};
}

DoublePointTable double_point_table(const GeometricMap& map, int n) {
  if (map.ambient != 2 * n)
    throw std::invalid_argument("double_point_table: ambient dimension must be 2n");
  std::vector<Simplex> tops = map.complex.simplices_of_dim(n);
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < tops.size(); ++i)
    for (std::size_t j = i + 1; j < tops.size(); ++j)
      if (tops[i].disjoint_from(tops[j])) pairs.emplace_back(i, j);

  std::vector<int> counts(pairs.size(), 0);
  parallel_for(pairs.size(), [&](std::size_t k) {
    const auto& [i, j] = pairs[k];
    IntersectionResult res =
        intersect_complementary(map.points_of(tops[i]), map.points_of(tops[j]), map.ambient);
    if (res.kind == IntersectKind::Degenerate)
      throw DegeneracyError("double_point_table: non-transversal pair, resample");
    counts[k] = res.kind == IntersectKind::Transversal ? 1 : 0;
  });

  DoublePointTable table;
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    table.pairs.push_back({tops[pairs[k].first], tops[pairs[k].second], counts[k]});
    table.total += counts[k];
  }
  return table;
}

namespace {

// conv(S) meets conv(T) exactly in conv(S cap T)? For disjoint vertex sets
// this is plain disjointness. Otherwise the shared face is always contained
// in the intersection, and the pair is clean iff no barycentric weight can
// be put on any non-shared vertex: max of their sum over the intersection
// polytope is zero.
bool pair_intersection_clean(const GeometricMap& map, const Simplex& s, const Simplex& t) {
  std::vector<Point> s_pts = map.points_of(s);
  std::vector<Point> t_pts = map.points_of(t);
  RatMatrix A;
  std::vector<Rat> b;
  build_pair_system(s_pts, t_pts, map.ambient, A, b);

  std::vector<VertexId> shared = s.common_vertices(t);
  if (shared.empty()) return !lp_feasible(A, b);

  std::vector<Rat> goal(s_pts.size() + t_pts.size(), Rat(0));
  auto mark = [&](const Simplex& sim, std::size_t offset) {
    const auto& verts = sim.vertices();
    for (std::size_t i = 0; i < verts.size(); ++i)
      if (!std::binary_search(shared.begin(), shared.end(), verts[i]))
        goal[offset + i] = 1;
  };
  mark(s, 0);
  mark(t, s_pts.size());
  LpResult res = lp_maximize(A, b, goal);
  if (!res.feasible) return true;  // cannot happen (shared face is feasible) but harmless
  return !res.unbounded && res.value == 0;
}

}  // namespace

bool is_embedding(const GeometricMap& map) {
  const auto& sims = map.complex.simplices();
  for (const Simplex& s : sims) {
    if (map.at(s.vertices()[0]).size() != static_cast<std::size_t>(map.ambient)) return false;
    if (!affinely_independent(map.points_of(s))) return false;
  }
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < sims.size(); ++i)
    for (std::size_t j = i + 1; j < sims.size(); ++j) {
      if (sims[i].is_face_of(sims[j]) || sims[j].is_face_of(sims[i])) continue;
      pairs.emplace_back(i, j);
    }
  std::vector<char> clean(pairs.size(), 1);
  parallel_for(pairs.size(), [&](std::size_t k) {
    clean[k] = pair_intersection_clean(map, sims[pairs[k].first], sims[pairs[k].second]) ? 1 : 0;
  });
  for (char c : clean)
    if (!c) return false;
  return true;
}

namespace {

bool is_pure(const Complex& K, int d) {
  if (K.dim() != d) return false;
  std::vector<Simplex> tops = K.simplices_of_dim(d);
  for (const Simplex& s : K.simplices()) {
    bool covered = false;
    for (const Simplex& t : tops)
      if (s.is_face_of(t)) {
        covered = true;
        break;
      }
    if (!covered) return false;
  }
  return true;
}

Rat configuration_diameter(const std::vector<Point>& pts, int m) {
  Rat diam(0);
  for (int j = 0; j < m; ++j) {
    Rat lo = pts[0][static_cast<std::size_t>(j)], hi = lo;
    for (const Point& p : pts) {
      const Rat& c = p[static_cast<std::size_t>(j)];
      if (c < lo) lo = c;
      if (c > hi) hi = c;
    }
    Rat spread = hi - lo;
    if (spread > diam) diam = spread;
  }
  return diam == 0 ? Rat(1) : diam;
}

}  // namespace

int lk2(const GeometricMap& f, const Complex& gamma, const Complex& delta,
        const ApexPolicy& policy) {
  const int m = f.ambient;
  const int p = gamma.dim();
  const int q = delta.dim();
  if (p < 0 || q < 0 || p + q != m - 1)
    throw std::invalid_argument("lk2: sphere dimensions must satisfy p + q = m - 1");
  if (!is_pure(gamma, p) || !is_pure(delta, q))
    throw std::invalid_argument("lk2: components must be pure complexes");
  for (VertexId v : gamma.vertex_ids())
    for (VertexId w : delta.vertex_ids())
      if (v == w) throw std::invalid_argument("lk2: components share a vertex");

  std::vector<Simplex> g_tops = gamma.simplices_of_dim(p);
  std::vector<Simplex> d_tops = delta.simplices_of_dim(q);

  // Image disjointness: the polyhedra are unions of the top simplices.
  for (const Simplex& g : g_tops)
    for (const Simplex& d : d_tops) {
      RatMatrix A;
      std::vector<Rat> b;
      build_pair_system(f.points_of(g), f.points_of(d), m, A, b);
      if (lp_feasible(A, b)) throw std::invalid_argument("lk2: component images intersect");
    }

  std::vector<Point> config;
  for (VertexId v : gamma.vertex_ids()) config.push_back(f.at(v));
  for (VertexId v : delta.vertex_ids()) config.push_back(f.at(v));
  Rat diam = configuration_diameter(config, m);
  Point centroid(static_cast<std::size_t>(m), Rat(0));
  for (const Point& pt : config)
    for (int j = 0; j < m; ++j) centroid[static_cast<std::size_t>(j)] += pt[static_cast<std::size_t>(j)];
  for (int j = 0; j < m; ++j) centroid[static_cast<std::size_t>(j)] /= Rat(static_cast<long>(config.size()));

  SplitMix64 rng(policy.seed);
  for (int attempt = 0; attempt < policy.retries; ++attempt) {
    Point apex = centroid;
    apex[static_cast<std::size_t>(m - 1)] += 2 * diam;
    for (int j = 0; j < m; ++j)
      apex[static_cast<std::size_t>(j)] +=
          diam * Rat(static_cast<long>(rng.next_symmetric(1024))) / 1024;

    bool degenerate = false;
    int crossings = 0;
    for (const Simplex& g : g_tops) {
      std::vector<Point> cone = f.points_of(g);
      cone.push_back(apex);
      if (!affinely_independent(cone)) {
        degenerate = true;
        break;
      }
      for (const Simplex& d : d_tops) {
        IntersectionResult res = intersect_complementary(cone, f.points_of(d), m);
        if (res.kind == IntersectKind::Degenerate) {
          degenerate = true;
          break;
        }
        if (res.kind == IntersectKind::Transversal) ++crossings;
      }
      if (degenerate) break;
    }
    if (!degenerate) return crossings % 2;
  }
  throw RetryExhausted("lk2: apex retries exhausted");
}

GeometricMap suspension_embedding(const GeometricMap& base, const Complex& target,
                                  VertexId apex_a, VertexId apex_b,
                                  const Rat& height_a, const Rat& height_b) {
  if (!(height_a > 0) || !(height_b < 0))
    throw std::invalid_argument("suspension_embedding: need height_a > 0 > height_b");
  if (!target.contains(Simplex{apex_a}) || !target.contains(Simplex{apex_b}))
    throw std::invalid_argument("suspension_embedding: apex vertex not in target complex");

  for (const Simplex& s : target.simplices()) {
    bool has_a = s.contains(apex_a), has_b = s.contains(apex_b);
    if (has_a && has_b)
      throw std::invalid_argument("suspension_embedding: simplex joins both apexes");
    if (!has_a && !has_b) {
      if (!base.complex.contains(s))
        throw std::invalid_argument("suspension_embedding: foreign simplex not in base");
    } else if (s.dim() > 0) {
      std::vector<VertexId> rest;
      for (VertexId v : s.vertices())
        if (v != apex_a && v != apex_b) rest.push_back(v);
      if (!base.complex.contains(Simplex(rest)))
        throw std::invalid_argument("suspension_embedding: apex joined over non-base simplex");
    }
  }
  if (!is_embedding(base))
    throw std::invalid_argument("suspension_embedding: base map is not an embedding");

  GeometricMap out;
  out.complex = target;
  out.ambient = base.ambient + 1;
  Point centroid(static_cast<std::size_t>(base.ambient), Rat(0));
  std::size_t count = 0;
  for (const auto& [v, pt] : base.coords) {
    Point lifted = pt;
    lifted.push_back(Rat(0));
    out.coords[v] = std::move(lifted);
    for (int j = 0; j < base.ambient; ++j) centroid[static_cast<std::size_t>(j)] += pt[static_cast<std::size_t>(j)];
    ++count;
  }
  for (int j = 0; j < base.ambient; ++j) centroid[static_cast<std::size_t>(j)] /= Rat(static_cast<long>(count));
  Point pa = centroid, pb = centroid;
  pa.push_back(height_a);
  pb.push_back(height_b);
  out.coords[apex_a] = std::move(pa);
  out.coords[apex_b] = std::move(pb);
  return out;
}

int filling_intersection_parity(const GeometricMap& f, const Simplex& filling,
                                const Complex& delta) {
  const int n = filling.dim();
  const int m = f.ambient;
  if (m != 2 * n)
    throw std::invalid_argument("filling_intersection_parity: ambient must be 2n");
  if (!is_pure(delta, n))
    throw std::invalid_argument("filling_intersection_parity: delta must be a pure n-complex");
  std::vector<Point> c_pts = f.points_of(filling);
  if (!affinely_independent(c_pts))
    throw std::invalid_argument("filling_intersection_parity: degenerate filling simplex");

  std::vector<Simplex> tops = delta.simplices_of_dim(n);
  long interior = 0;
  // facet -> crossing point, with the apex vertices of the cofaces seen.
  std::map<Simplex, std::pair<Point, std::vector<VertexId>>> facet_hits;

  for (const Simplex& t : tops) {
    std::vector<Point> t_pts = f.points_of(t);
    RatMatrix A;
    std::vector<Rat> b;
    build_pair_system(c_pts, t_pts, m, A, b);
    RatMatrix A_copy = A;
    std::vector<Rat> b_copy = b;
    LinearSolution sol = solve_linear(std::move(A), std::move(b));
    if (sol.kind == LinearSolution::Kind::None) continue;
    if (sol.kind == LinearSolution::Kind::Underdetermined) {
      if (lp_feasible(A_copy, b_copy))
        throw DegeneracyError("filling_intersection_parity: positive-dimensional overlap");
      continue;
    }
    const std::size_t nc = c_pts.size();
    bool outside = false;
    for (const Rat& v : sol.x)
      if (v < 0) outside = true;
    if (outside) continue;
    for (std::size_t i = 0; i < nc; ++i)
      if (sol.x[i] == 0)
        throw DegeneracyError("filling_intersection_parity: crossing on the filling boundary");
    std::vector<std::size_t> zero_mu;
    for (std::size_t j = nc; j < sol.x.size(); ++j)
      if (sol.x[j] == 0) zero_mu.push_back(j - nc);
    std::vector<Rat> lambda(sol.x.begin(), sol.x.begin() + static_cast<std::ptrdiff_t>(nc));
    Point x = combination(c_pts, lambda, m);
    if (zero_mu.empty()) {
      ++interior;
      continue;
    }
    if (zero_mu.size() > 1)
      throw DegeneracyError("filling_intersection_parity: crossing in a codimension >= 2 face");
    // Crossing sits in the relative interior of the facet opposite the
    // zero-weight vertex; remember which coface we came through.
    VertexId apex = t.vertices()[zero_mu[0]];
    std::vector<VertexId> fv;
    for (VertexId v : t.vertices())
      if (v != apex) fv.push_back(v);
    Simplex facet{std::vector<VertexId>(fv)};
    auto [it, inserted] = facet_hits.try_emplace(facet, std::make_pair(x, std::vector<VertexId>{}));
    if (!inserted && !(it->second.first == x))
      throw DegeneracyError("filling_intersection_parity: inconsistent facet crossing");
    it->second.second.push_back(apex);
  }

  long bent = 0;
  for (const auto& [facet, hit] : facet_hits) {
    const auto& [x, apexes] = hit;
    // The facet must be shared by exactly two top simplices of the sphere,
    // and both must have reported the crossing.
    std::vector<VertexId> cofaces;
    for (const Simplex& t : tops)
      if (facet.is_face_of(t))
        for (VertexId v : t.vertices())
          if (!facet.contains(v)) cofaces.push_back(v);
    if (cofaces.size() != 2 || apexes.size() != 2)
      throw DegeneracyError("filling_intersection_parity: facet crossing without two cofaces");

    // Hyperplane spanned by the filling and the facet; the two sheets cross
    // it iff their apexes lie strictly on opposite sides.
    std::vector<Point> span_pts = c_pts;
    for (VertexId v : facet.vertices()) span_pts.push_back(f.at(v));
    RatMatrix diffs;
    for (std::size_t i = 1; i < span_pts.size(); ++i) {
      std::vector<Rat> row(static_cast<std::size_t>(m));
      for (int j = 0; j < m; ++j)
        row[static_cast<std::size_t>(j)] = span_pts[i][static_cast<std::size_t>(j)] - span_pts[0][static_cast<std::size_t>(j)];
      diffs.push_back(std::move(row));
    }
    if (rat_rank(diffs) != static_cast<std::size_t>(m - 1))
      throw DegeneracyError("filling_intersection_parity: filling and facet do not span a hyperplane");
    // One normal: nonzero kernel vector of the difference matrix.
    RatMatrix A = diffs;
    std::vector<Rat> normal(static_cast<std::size_t>(m), Rat(0));
    {
      // Reduce and read off a free column.
      std::size_t rank = 0;
      std::vector<std::size_t> pivot_cols;
      for (std::size_t col = 0; col < static_cast<std::size_t>(m) && rank < A.size(); ++col) {
        std::size_t pivot = rank;
        while (pivot < A.size() && A[pivot][col] == 0) ++pivot;
        if (pivot == A.size()) continue;
        std::swap(A[pivot], A[rank]);
        Rat inv = A[rank][col];
        for (std::size_t j = 0; j < static_cast<std::size_t>(m); ++j) A[rank][j] /= inv;
        for (std::size_t r = 0; r < A.size(); ++r) {
          if (r == rank || A[r][col] == 0) continue;
          Rat fac = A[r][col];
          for (std::size_t j = 0; j < static_cast<std::size_t>(m); ++j) A[r][j] -= fac * A[rank][j];
        }
        pivot_cols.push_back(col);
        ++rank;
      }
      std::size_t free_col = 0;
      while (std::find(pivot_cols.begin(), pivot_cols.end(), free_col) != pivot_cols.end()) ++free_col;
      normal[free_col] = 1;
      for (std::size_t r = 0; r < pivot_cols.size(); ++r) normal[pivot_cols[r]] = -A[r][free_col];
    }
    auto side = [&](VertexId v) {
      Rat dot(0);
      const Point& pt = f.at(v);
      for (int j = 0; j < m; ++j)
        dot += normal[static_cast<std::size_t>(j)] * (pt[static_cast<std::size_t>(j)] - x[static_cast<std::size_t>(j)]);
      return sign(dot);
    };
    int sa = side(cofaces[0]);
    int sb = side(cofaces[1]);
    if (sa == 0 || sb == 0)
      throw DegeneracyError("filling_intersection_parity: coface apex on the crossing hyperplane");
    if (sa != sb) ++bent;
  }
  return static_cast<int>((interior + bent) % 2);
}

GeometricMap restrict_map(const GeometricMap& map, const Complex& sub) {
  GeometricMap out;
  out.complex = sub;
  out.ambient = map.ambient;
  for (VertexId v : sub.vertex_ids()) out.coords[v] = map.at(v);
  return out;
}

GeometricMap random_geometric_map(const Complex& K, int ambient, long bound,
                                  std::uint64_t seed, int retries) {
  std::vector<VertexId> verts = K.vertex_ids();
  std::vector<Point> pts =
      random_integer_points(static_cast<int>(verts.size()), ambient, bound, seed, retries);
  GeometricMap out;
  out.complex = K;
  out.ambient = ambient;
  for (std::size_t i = 0; i < verts.size(); ++i) out.coords[verts[i]] = pts[i];
  return out;
}

std::string map_to_text(const GeometricMap& map) {
  std::ostringstream out;
  for (const auto& [v, pt] : map.coords) {
    out << map.complex.label(v);
    for (const Rat& c : pt) out << ' ' << rat_to_string(c);
    out << '\n';
  }
  return out.str();
}

std::map<std::string, Point> coords_from_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::map<std::string, Point> out;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::string label, tok;
    ls >> label;
    Point p;
    while (ls >> tok) p.push_back(rat_from_string(tok));
    if (p.empty()) throw std::invalid_argument("coordinate file: vertex with no coordinates");
    if (!out.emplace(label, std::move(p)).second)
      throw std::invalid_argument("coordinate file: duplicate vertex " + label);
  }
  return out;
}

GeometricMap map_from_text(const std::string& text, const Complex& complex) {
  std::map<std::string, Point> named = coords_from_text(text);
  GeometricMap out;
  out.complex = complex;
  for (VertexId v : complex.vertex_ids()) {
    auto it = named.find(complex.label(v));
    if (it == named.end())
      throw std::invalid_argument("coordinate file: missing vertex " + complex.label(v));
    if (out.coords.empty()) out.ambient = static_cast<int>(it->second.size());
    if (it->second.size() != static_cast<std::size_t>(out.ambient))
      throw std::invalid_argument("coordinate file: inconsistent ambient dimension");
    out.coords[v] = it->second;
  }
  return out;
}

}  // namespace linkobs
