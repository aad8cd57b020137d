#include "linkobs/complex.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace linkobs {

Complex Complex::closure(const std::vector<Simplex>& simplices,
                         std::map<VertexId, std::string> labels) {
  std::set<Simplex> closed;
  for (const Simplex& s : simplices)
    for (Simplex& f : s.faces()) closed.insert(std::move(f));

  Complex K;
  K.simplices_.assign(closed.begin(), closed.end());
  K.index_.insert(K.simplices_.begin(), K.simplices_.end());
  for (const Simplex& s : K.simplices_)
    for (VertexId v : s.vertices())
      if (!labels.count(v)) labels[v] = "v" + std::to_string(v);
  // Drop labels of vertices that are not present.
  for (auto it = labels.begin(); it != labels.end();) {
    if (!K.index_.count(Simplex{it->first}))
      it = labels.erase(it);
    else
      ++it;
  }
  K.labels_ = std::move(labels);
  return K;
}

std::vector<Simplex> Complex::simplices_of_dim(int k) const {
  std::vector<Simplex> out;
  for (const Simplex& s : simplices_)
    if (s.dim() == k) out.push_back(s);
  return out;
}

std::size_t Complex::count_of_dim(int k) const {
  std::size_t n = 0;
  for (const Simplex& s : simplices_)
    if (s.dim() == k) ++n;
  return n;
}

int Complex::dim() const {
  int d = -1;
  for (const Simplex& s : simplices_) d = std::max(d, s.dim());
  return d;
}

bool Complex::contains_all(const Complex& sub) const {
  for (const Simplex& s : sub.simplices())
    if (!contains(s)) return false;
  return true;
}

std::vector<VertexId> Complex::vertex_ids() const {
  std::vector<VertexId> out;
  for (const Simplex& s : simplices_)
    if (s.dim() == 0) out.push_back(s.vertices()[0]);
  return out;
}

std::size_t Complex::vertex_count() const { return count_of_dim(0); }

const std::string& Complex::label(VertexId v) const {
  auto it = labels_.find(v);
  if (it == labels_.end()) throw std::out_of_range("no such vertex id");
  return it->second;
}

std::optional<VertexId> Complex::vertex_by_label(const std::string& name) const {
  for (const auto& [id, lab] : labels_)
    if (lab == name) return id;
  return std::nullopt;
}

std::vector<int> Complex::degree_vector(VertexId v) const {
  std::vector<int> deg(static_cast<std::size_t>(dim()) + 1, 0);
  for (const Simplex& s : simplices_)
    if (s.contains(v)) ++deg[static_cast<std::size_t>(s.dim())];
  return deg;
}

Complex skeleton(int m, int k) {
  if (m < 0 || k < 0 || k > m)
    throw std::invalid_argument("skeleton requires 0 <= k <= m");
  std::vector<Simplex> top;
  // All subsets of {0..m} of size k+1.
  std::vector<VertexId> pick(static_cast<std::size_t>(k) + 1);
  auto rec = [&](auto&& self, int start, int depth) -> void {
    if (depth == k + 1) {
      top.emplace_back(std::vector<VertexId>(pick.begin(), pick.end()));
      return;
    }
    for (int v = start; v <= m; ++v) {
      pick[static_cast<std::size_t>(depth)] = v;
      self(self, v + 1, depth + 1);
    }
  };
  rec(rec, 0, 0);
  std::map<VertexId, std::string> labels;
  for (int v = 0; v <= m; ++v) labels[v] = "a" + std::to_string(v);
  return Complex::closure(top, std::move(labels));
}

Complex join(const Complex& K, const Complex& L) {
  for (VertexId v : K.vertex_ids())
    for (VertexId w : L.vertex_ids())
      if (v == w) throw std::invalid_argument("join factors share vertex id " + std::to_string(v));

  std::vector<Simplex> sims;
  for (const Simplex& s : K.simplices()) sims.push_back(s);
  for (const Simplex& t : L.simplices()) sims.push_back(t);
  for (const Simplex& s : K.simplices())
    for (const Simplex& t : L.simplices()) sims.push_back(s.united(t));

  std::map<VertexId, std::string> labels = K.labels();
  labels.insert(L.labels().begin(), L.labels().end());
  return Complex::closure(sims, std::move(labels));
}

std::pair<Complex, std::vector<VertexId>> join_with_points(
    const Complex& K, const std::vector<std::string>& labels) {
  VertexId next = 0;
  for (VertexId v : K.vertex_ids()) next = std::max(next, v + 1);
  std::vector<Simplex> pts;
  std::map<VertexId, std::string> pt_labels;
  std::vector<VertexId> ids;
  for (const std::string& lab : labels) {
    pts.push_back(Simplex{next});
    pt_labels[next] = lab;
    ids.push_back(next);
    ++next;
  }
  return {join(K, Complex::closure(pts, std::move(pt_labels))), ids};
}

Complex suspension(const Complex& K) {
  return join_with_points(K, {"a", "b"}).first;
}

Complex triple_join(int m) {
  if (m < 1) throw std::invalid_argument("triple_join requires m >= 1");
  auto factor = [](int i) {
    std::vector<Simplex> pts;
    std::map<VertexId, std::string> labels;
    for (int j = 0; j < 3; ++j) {
      VertexId v = 3 * i + j;
      pts.push_back(Simplex{v});
      labels[v] = "p" + std::to_string(i) + std::to_string(j);
    }
    return Complex::closure(pts, std::move(labels));
  };
  Complex acc = factor(0);
  for (int i = 1; i < m; ++i) acc = join(acc, factor(i));
  return acc;
}

MJComplex build_M_J(const Complex& J, int n) {
  if (n < 1) throw std::invalid_argument("build_M_J requires n >= 1");
  if (J.dim() != n - 1)
    throw std::invalid_argument("build_M_J: J must be an (n-1)-complex");

  auto [joined, ids] = join_with_points(J, {"a", "b", "c"});
  const VertexId a = ids[0], b = ids[1], c = ids[2];

  // Keep everything except the n-simplices c * s, s an (n-1)-simplex of J.
  std::vector<Simplex> kept;
  for (const Simplex& s : joined.simplices())
    if (!(s.dim() == n && s.contains(c))) kept.push_back(s);

  MJComplex out;
  out.complex = Complex::closure(kept, joined.labels());
  out.n = n;
  out.a = a;
  out.b = b;
  out.c = c;
  return out;
}

MJComplex build_M(int n) { return build_M_J(skeleton(2 * n, n - 1), n); }

Complex delete_simplices(const Complex& K, const std::vector<Simplex>& doomed) {
  for (const Simplex& s : doomed)
    if (!K.contains(s)) throw std::invalid_argument("delete_simplices: simplex not present");

  std::vector<Simplex> kept;
  for (const Simplex& s : K.simplices()) {
    bool dead = false;
    for (const Simplex& d : doomed)
      if (d.is_face_of(s)) {
        dead = true;
        break;
      }
    if (!dead) kept.push_back(s);
  }
  std::map<VertexId, std::string> labels;
  for (const auto& [v, lab] : K.labels()) labels[v] = lab;
  return Complex::closure(kept, std::move(labels));
}

Complex relabel_vertices(const Complex& K, const std::map<VertexId, VertexId>& perm) {
  auto mapped = [&](VertexId v) {
    auto it = perm.find(v);
    return it == perm.end() ? v : it->second;
  };
  {
    std::set<VertexId> images;
    for (VertexId v : K.vertex_ids())
      if (!images.insert(mapped(v)).second)
        throw std::invalid_argument("relabel_vertices: map not injective");
  }
  std::vector<Simplex> sims;
  for (const Simplex& s : K.simplices()) {
    std::vector<VertexId> w;
    w.reserve(s.size());
    for (VertexId v : s.vertices()) w.push_back(mapped(v));
    sims.push_back(Simplex::sorted(std::move(w)));
  }
  std::map<VertexId, std::string> labels;
  for (const auto& [v, lab] : K.labels()) labels[mapped(v)] = lab;
  return Complex::closure(sims, std::move(labels));
}

Complex subcomplex(const Complex& K, const std::vector<Simplex>& simplices) {
  std::map<VertexId, std::string> labels;
  for (const Simplex& s : simplices) {
    if (!K.contains(s)) throw std::invalid_argument("subcomplex: simplex not in complex");
    for (VertexId v : s.vertices()) labels[v] = K.label(v);
  }
  return Complex::closure(simplices, std::move(labels));
}

std::string complex_to_text(const Complex& K) {
  std::ostringstream out;
  out << "# vertices:";
  for (const auto& [v, lab] : K.labels()) out << ' ' << lab;
  out << '\n';
  for (const Simplex& s : K.simplices()) {
    bool first = true;
    for (VertexId v : s.vertices()) {
      if (!first) out << ' ';
      out << K.label(v);
      first = false;
    }
    out << '\n';
  }
  return out.str();
}

Complex complex_from_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::map<std::string, VertexId> id_of;
  std::map<VertexId, std::string> labels;
  std::vector<Simplex> sims;
  auto intern = [&](const std::string& lab) {
    auto it = id_of.find(lab);
    if (it != id_of.end()) return it->second;
    VertexId v = static_cast<VertexId>(id_of.size());
    id_of[lab] = v;
    labels[v] = lab;
    return v;
  };
  bool seen_header = false;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line[0] == '#') {
      std::istringstream hs(line.substr(1));
      std::string word;
      hs >> word;  // "vertices:"
      if (word != "vertices:")
        throw std::invalid_argument("complex file: bad header line");
      while (hs >> word) intern(word);
      seen_header = true;
      continue;
    }
    std::istringstream ls(line);
    std::vector<VertexId> verts;
    std::string lab;
    while (ls >> lab) verts.push_back(intern(lab));
    sims.push_back(Simplex::sorted(std::move(verts)));
  }
  if (!seen_header) throw std::invalid_argument("complex file: missing '# vertices:' header");
  return Complex::closure(sims, std::move(labels));
}

}  // namespace linkobs
