#include <doctest.h>

#include <set>

#include "linkobs/complex.hpp"
#include "linkobs/isomorphism.hpp"
#include "linkobs/links.hpp"

using namespace linkobs;

namespace {

long binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

bool face_closed(const Complex& K) {
  for (const Simplex& s : K.simplices())
    for (const Simplex& f : s.faces())
      if (!K.contains(f)) return false;
  return true;
}

// Oracle for M_J built from the other displayed form: enumerate the full
// join J * {a,b,c} by hand (any J-face, at most one extra letter), drop the
// n-simplices through c, close. Shares no code with build_M_J.
std::set<Simplex> brute_force_M_J(const Complex& J, int n) {
  VertexId next = 0;
  for (VertexId v : J.vertex_ids()) next = std::max(next, v + 1);
  VertexId a = next, b = next + 1, c = next + 2;

  std::set<Simplex> join_sims;
  std::vector<Simplex> j_faces = J.simplices();
  for (VertexId letter : {a, b, c}) join_sims.insert(Simplex{letter});
  for (const Simplex& s : j_faces) {
    join_sims.insert(s);
    for (VertexId letter : {a, b, c}) join_sims.insert(s.with_vertex(letter));
  }

  std::set<Simplex> kept;
  for (const Simplex& s : join_sims)
    if (!(s.dim() == n && s.contains(c))) kept.insert(s);

  // close under faces
  std::set<Simplex> closed;
  for (const Simplex& s : kept)
    for (const Simplex& f : s.faces()) closed.insert(f);
  return closed;
}

}  // namespace

TEST_CASE("skeleton counts") {
  Complex k6 = skeleton(5, 1);
  CHECK(k6.count_of_dim(0) == 6);
  CHECK(k6.count_of_dim(1) == 15);
  Complex k5 = skeleton(4, 1);
  CHECK(k5.count_of_dim(1) == 10);
  Complex pts = skeleton(2, 0);
  CHECK(pts.simplices().size() == 3);
  CHECK(pts.dim() == 0);
  CHECK_THROWS_AS(skeleton(3, 4), std::invalid_argument);
  CHECK(face_closed(k6));
}

TEST_CASE("join counts and errors") {
  auto [K, ids] = join_with_points(skeleton(4, 1), {"a", "b", "c"});
  CHECK(K.simplices().size() == 63);
  CHECK(K.count_of_dim(2) == 30);
  CHECK(face_closed(K));

  Complex k33 = join_with_points(skeleton(2, 0), {"a", "b", "c"}).first;
  CHECK(k33.count_of_dim(1) == 9);
  CHECK(k33.count_of_dim(0) == 6);

  // cone over K_5
  Complex cone = join_with_points(skeleton(4, 1), {"apex"}).first;
  CHECK(cone.dim() == skeleton(4, 1).dim() + 1);

  CHECK_THROWS_AS(join(skeleton(2, 0), skeleton(2, 0)), std::invalid_argument);
}

TEST_CASE("suspension counts") {
  Complex s = suspension(skeleton(5, 1));
  CHECK(s.count_of_dim(0) == 8);
  CHECK(s.count_of_dim(1) == 27);
  CHECK(s.count_of_dim(2) == 30);

  Complex k24 = suspension(skeleton(3, 0));
  CHECK(k24.count_of_dim(0) == 6);
  CHECK(k24.count_of_dim(1) == 8);

  Complex degenerate = suspension(Complex());
  CHECK(degenerate.simplices().size() == 2);
  CHECK(degenerate.dim() == 0);
}

TEST_CASE("build_M_J against the deletion-form oracle") {
  for (int n = 1; n <= 3; ++n) {
    Complex J = skeleton(2 * n, n - 1);
    MJComplex M = build_M(n);
    std::set<Simplex> oracle = brute_force_M_J(J, n);
    std::set<Simplex> got(M.complex.simplices().begin(), M.complex.simplices().end());
    CHECK(got == oracle);
    CHECK(face_closed(M.complex));
    CHECK(M.complex.count_of_dim(n) == 2 * binom(2 * n + 1, n));
  }
  CHECK_THROWS_AS(build_M_J(skeleton(4, 1), 1), std::invalid_argument);
}

TEST_CASE("M^(1) is K_1 plus K_{2,3}") {
  MJComplex M1 = build_M(1);
  CHECK(M1.complex.count_of_dim(0) == 6);
  CHECK(M1.complex.count_of_dim(1) == 6);
  // explicit K_1 | K_{2,3}: parts {10, 11} x {20, 21, 22}, isolated 0
  std::vector<Simplex> sims{Simplex{0}};
  for (VertexId u : {10, 11})
    for (VertexId w : {20, 21, 22}) sims.push_back(Simplex{u, w});
  Complex reference = Complex::closure(sims);
  CHECK(find_isomorphism(M1.complex, reference).has_value());
}

TEST_CASE("M^(2) counts") {
  MJComplex M2 = build_M(2);
  CHECK(M2.complex.count_of_dim(0) == 8);
  CHECK(M2.complex.count_of_dim(1) == 25);
  CHECK(M2.complex.count_of_dim(2) == 20);
}

TEST_CASE("triple join") {
  CHECK(find_isomorphism(triple_join(2), join_with_points(skeleton(2, 0), {"a", "b", "c"}).first)
            .has_value());
  Complex one = triple_join(1);
  CHECK(one.simplices().size() == 3);
  CHECK(one.dim() == 0);
  Complex three = triple_join(3);
  CHECK(three.dim() == 2);
  CHECK(three.count_of_dim(2) == 27);
  CHECK(three.count_of_dim(0) == 9);
}

TEST_CASE("delete_simplices") {
  MJComplex M2 = build_M(2);
  Simplex top = M2.complex.simplices_of_dim(2).front();
  Complex cut = delete_simplices(M2.complex, {top});
  CHECK(cut.count_of_dim(2) == 19);
  CHECK(cut.count_of_dim(1) == 25);  // faces untouched
  CHECK(face_closed(cut));

  Complex k5 = skeleton(4, 1);
  Complex k5cut = delete_simplices(k5, {Simplex{0, 1}});
  CHECK(k5cut.count_of_dim(1) == 9);
  CHECK(k5cut.count_of_dim(0) == 5);

  MJComplex M1 = build_M(1);
  Complex nc = delete_simplices(M1.complex, {Simplex{M1.c}});
  std::vector<Simplex> sims;
  for (VertexId u : {10, 11})
    for (VertexId w : {20, 21, 22}) sims.push_back(Simplex{u, w});
  CHECK(find_isomorphism(nc, Complex::closure(sims)).has_value());

  CHECK_THROWS_AS(delete_simplices(k5, {Simplex{0, 1, 2}}), std::invalid_argument);
}

TEST_CASE("find_isomorphism") {
  Complex k5 = skeleton(4, 1);
  std::map<VertexId, VertexId> shuffle{{0, 7}, {1, 3}, {2, 9}, {3, 0}, {4, 5}};
  Complex permuted = relabel_vertices(k5, shuffle);
  auto iso = find_isomorphism(k5, permuted);
  REQUIRE(iso.has_value());
  for (const Simplex& s : k5.simplices()) {
    std::vector<VertexId> w;
    for (VertexId v : s.vertices()) w.push_back(iso->at(v));
    CHECK(permuted.contains(Simplex::sorted(std::move(w))));
  }

  Complex k23 = join_with_points(skeleton(1, 0), {"x", "y", "z"}).first;
  Complex k33 = join_with_points(skeleton(2, 0), {"x", "y", "z"}).first;
  CHECK_FALSE(find_isomorphism(k23, k33).has_value());

  // lexicographically least bijection: the identity when both sides agree
  auto self = find_isomorphism(k5, k5);
  REQUIRE(self.has_value());
  for (VertexId v : k5.vertex_ids()) CHECK(self->at(v) == v);
}

TEST_CASE("join associativity up to relabeling") {
  auto points = [](VertexId base) {
    std::vector<Simplex> p{Simplex{base}, Simplex{base + 1}, Simplex{base + 2}};
    return Complex::closure(p);
  };
  Complex A = points(0), B = points(10), C = points(20);
  Complex left = join(join(A, B), C);
  Complex right = join(A, join(B, C));
  CHECK(find_isomorphism(left, right).has_value());
}

TEST_CASE("count_isomorphic_subcomplexes") {
  MJComplex M1 = build_M(1);
  Complex host1 = suspension(skeleton(3, 0));
  SubcomplexMatches m1 = count_isomorphic_subcomplexes(host1, M1.complex);
  CHECK(m1.count() == 4);
  for (const auto& verts : m1.vertex_images) CHECK(verts.size() == 6);

  MJComplex M2 = build_M(2);
  Complex host2 = suspension(skeleton(5, 1));
  CHECK(count_isomorphic_subcomplexes(host2, M2.complex).count() == 6);

  CHECK(count_isomorphic_subcomplexes(skeleton(4, 1), skeleton(5, 1)).count() == 0);

  CHECK_THROWS_AS(count_isomorphic_subcomplexes(skeleton(12, 0), skeleton(1, 0)),
                  std::invalid_argument);
}

TEST_CASE("complex text round trip") {
  MJComplex M2 = build_M(2);
  std::string text = complex_to_text(M2.complex);
  Complex back = complex_from_text(text);
  CHECK(complex_to_text(back) == text);
  CHECK(back.count_of_dim(2) == 20);
  CHECK_THROWS_AS(complex_from_text("a b\n"), std::invalid_argument);  // missing header
}
