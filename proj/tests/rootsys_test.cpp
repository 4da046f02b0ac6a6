#include "common.hpp"
#include "rootsys.hpp"

#include <algorithm>
#include <set>

using namespace maxsolv;

namespace {

// Positive roots by root strings: beta + a_i is a root iff p - <a_i^vee, beta> > 0,
// where p is the length of the a_i-string below beta. Independent of reflections.
std::set<IntVec> positive_roots_by_strings(const CartanMatrix& a) {
  const std::size_t n = a.size();
  std::set<IntVec> roots;
  std::vector<IntVec> layer;
  for (std::size_t i = 0; i < n; ++i) {
    IntVec e(n, 0);
    e[i] = 1;
    layer.push_back(e);
    roots.insert(e);
  }
  while (!layer.empty()) {
    std::set<IntVec> next;
    for (const auto& beta : layer)
      for (std::size_t i = 0; i < n; ++i) {
        int p = 0;
        for (IntVec down = beta;;) {
          --down[i];
          if (!roots.count(down)) break;
          ++p;
        }
        int pairing = 0;
        for (std::size_t j = 0; j < n; ++j) pairing += a(i, j) * beta[j];
        if (p - pairing > 0) {
          IntVec up = beta;
          ++up[i];
          if (!roots.count(up)) next.insert(up);
        }
      }
    layer.assign(next.begin(), next.end());
    roots.insert(next.begin(), next.end());
  }
  return roots;
}

// Every Weyl element, stored as the images of the simple roots.
std::vector<std::vector<IntVec>> weyl_group(const CartanMatrix& a) {
  const std::size_t n = a.size();
  auto reflect = [&](std::size_t i, IntVec v) {
    int c = 0;
    for (std::size_t j = 0; j < n; ++j) c += a(i, j) * v[j];
    v[i] -= c;
    return v;
  };
  std::vector<IntVec> id;
  for (std::size_t i = 0; i < n; ++i) {
    IntVec e(n, 0);
    e[i] = 1;
    id.push_back(e);
  }
  std::set<std::vector<IntVec>> seen{id};
  std::vector<std::vector<IntVec>> queue{id};
  for (std::size_t q = 0; q < queue.size(); ++q)
    for (std::size_t i = 0; i < n; ++i) {
      auto w = queue[q];
      for (auto& v : w) v = reflect(i, v);
      if (seen.insert(w).second) queue.push_back(w);
    }
  return queue;
}

std::set<SimpleSubset> brute_orbit(const std::vector<std::vector<IntVec>>& group,
                                   const SimpleSubset& theta) {
  std::set<SimpleSubset> out;
  for (const auto& w : group) {
    SimpleSubset image;
    bool simple = true;
    for (auto t : theta) {
      const IntVec& img = w[t];
      auto nz = std::count_if(img.begin(), img.end(), [](int x) { return x != 0; });
      auto pos = std::find(img.begin(), img.end(), 1);
      if (nz != 1 || pos == img.end()) {
        simple = false;
        break;
      }
      image.push_back(static_cast<std::size_t>(pos - img.begin()));
    }
    if (!simple) continue;
    std::sort(image.begin(), image.end());
    out.insert(image);
  }
  return out;
}

int closed_form_root_count(SimpleType t) {
  const int n = t.rank;
  switch (t.family) {
    case 'A': return n * (n + 1);
    case 'B':
    case 'C': return 2 * n * n;
    case 'D': return 2 * n * (n - 1);
    case 'E': return n == 6 ? 72 : n == 7 ? 126 : 240;
    case 'F': return 48;
    case 'G': return 12;
  }
  return -1;
}

std::vector<SimpleType> bundled_types() {
  std::vector<SimpleType> out;
  for (int n = 1; n <= 8; ++n) out.push_back({'A', n});
  for (int n = 2; n <= 8; ++n) out.push_back({'B', n});
  for (int n = 3; n <= 8; ++n) out.push_back({'C', n});
  for (int n = 4; n <= 8; ++n) out.push_back({'D', n});
  for (int n = 6; n <= 8; ++n) out.push_back({'E', n});
  out.push_back({'F', 4});
  out.push_back({'G', 2});
  return out;
}

const char* small_types[] = {"A1", "A2", "A3", "A4", "B2", "B3", "B4", "C3", "C4", "D4", "G2", "A1+A1", "A2+B2"};

}  // namespace

TEST_CASE("root counts match the closed forms for every bundled type") {
  for (auto t : bundled_types()) {
    CAPTURE(t.str());
    const auto rs = RootSystem::generate(CartanMatrix::of_type(t));
    CHECK(int(rs.roots().size()) == closed_form_root_count(t));
    CHECK(rs.num_positive() * 2 == rs.roots().size());
    CHECK(rs.reduced());
  }
}

TEST_CASE("reflection closure agrees with root strings") {
  for (auto t : bundled_types()) {
    if (t.rank > 7) continue;
    CAPTURE(t.str());
    const auto cm = CartanMatrix::of_type(t);
    const auto rs = RootSystem::generate(cm);
    std::set<IntVec> mine;
    for (const auto& r : rs.positives()) mine.insert(r.coords());
    CHECK(mine == positive_roots_by_strings(cm));
  }
}

TEST_CASE("spec examples for generate_roots") {
  CHECK(RootSystem::generate(CartanMatrix::parse_type("A1")).roots().size() == 2);
  const auto a2 = RootSystem::generate(CartanMatrix::parse_type("A2"));
  CHECK(a2.roots().size() == 6);
  CHECK(a2.positives().size() == 3);
  const auto g2 = RootSystem::generate(CartanMatrix::parse_type("G2"));
  CHECK(g2.roots().size() == 12);
  CHECK(g2.positives().size() == 6);
}

TEST_CASE("simple reflections are involutions permuting the roots") {
  for (auto name : small_types) {
    CAPTURE(name);
    const auto rs = RootSystem::generate(CartanMatrix::parse_type(name));
    std::set<IntVec> all;
    for (const auto& r : rs.roots()) all.insert(r.coords());
    for (std::size_t i = 0; i < rs.rank(); ++i)
      for (const auto& r : rs.roots()) {
        const auto img = rs.reflect(i, r.coords());
        CHECK(all.count(img));
        CHECK(rs.reflect(i, img) == r.coords());
      }
    // simples generate everything under reflections
    std::set<IntVec> orbit;
    std::vector<IntVec> todo;
    for (const auto& s : rs.simples()) todo.push_back(s.coords());
    while (!todo.empty()) {
      auto v = todo.back();
      todo.pop_back();
      if (!orbit.insert(v).second) continue;
      for (std::size_t i = 0; i < rs.rank(); ++i) todo.push_back(rs.reflect(i, v));
    }
    CHECK(orbit == all);
  }
}

TEST_CASE("Weyl elements preserve the pairing") {
  const auto rs = RootSystem::generate(CartanMatrix::parse_type("B3"));
  const WeylElement w(rs, {0, 1, 2, 1});
  for (const auto& r : rs.roots())
    for (const auto& s : rs.roots())
      CHECK(rs.cartan().inner(w.apply(r.coords()), w.apply(s.coords())) == rs.cartan().inner(r.coords(), s.coords()));
  const auto& perm = w.permutation();
  CHECK(std::set<std::size_t>(perm.begin(), perm.end()).size() == rs.roots().size());
}

TEST_CASE("Root rejects zero and mixed-sign vectors") {
  MAXSOLV_CHECK_CODE(Root(IntVec{0, 0}), ErrorCode::not_root_system);
  MAXSOLV_CHECK_CODE(Root(IntVec{1, -1}), ErrorCode::not_root_system);
  CHECK(Root(IntVec{-1, -2}).height() == -3);
  CHECK_FALSE(Root(IntVec{-1, -2}).positive());
}

TEST_CASE("non-finite Cartan matrices are rejected with a witness") {
  const CartanMatrix affine_a1({{2, -2}, {-2, 2}}, {"x1", "x2"});
  try {
    RootSystem::generate(affine_a1);
    FAIL("affine A1 accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::not_finite_type);
    CHECK_FALSE(e.witness().empty());
  }
  const CartanMatrix affine_a2({{2, -1, -1}, {-1, 2, -1}, {-1, -1, 2}}, {"x1", "x2", "x3"});
  MAXSOLV_CHECK_CODE(RootSystem::generate(affine_a2), ErrorCode::not_finite_type);
  MAXSOLV_CHECK_CODE(CartanMatrix({{2, -1}, {0, 2}}, {"x1", "x2"}), ErrorCode::not_finite_type);
}

TEST_CASE("weyl_orbit_subsets agrees with brute force over the whole group") {
  for (auto name : small_types) {
    const auto cm = CartanMatrix::parse_type(name);
    if (cm.size() > 4) continue;
    CAPTURE(name);
    const auto rs = RootSystem::generate(cm);
    const auto group = weyl_group(cm);
    for (const auto& theta : all_subsets(cm.size())) {
      const auto orbit = weyl_orbit_subsets(rs, theta);
      CHECK(std::set<SimpleSubset>(orbit.begin(), orbit.end()) == brute_orbit(group, theta));
    }
  }
}

TEST_CASE("Weyl group orders") {
  CHECK(weyl_group(CartanMatrix::parse_type("A3")).size() == 24);
  CHECK(weyl_group(CartanMatrix::parse_type("B4")).size() == 384);
  CHECK(weyl_group(CartanMatrix::parse_type("D4")).size() == 192);
  CHECK(weyl_group(CartanMatrix::parse_type("G2")).size() == 12);
}

TEST_CASE("subset orbit examples") {
  const auto a2 = RootSystem::generate(CartanMatrix::parse_type("A2"));
  CHECK(weyl_orbit_subsets(a2, {0}) == std::vector<SimpleSubset>{{0}, {1}});
  CHECK(weyl_orbit_subsets(a2, {}) == std::vector<SimpleSubset>{{}});
  CHECK(weyl_orbit_subsets(a2, {0, 1}) == std::vector<SimpleSubset>{{0, 1}});
  CHECK(subsets_conjugate(a2, {0}, {1}));
  CHECK_FALSE(subsets_conjugate(a2, {}, {0}));
  const auto a3 = RootSystem::generate(CartanMatrix::parse_type("A3"));
  CHECK(subsets_conjugate(a3, {0}, {2}));
  CHECK_FALSE(subsets_conjugate(a3, {0, 1}, {0, 2}));
}

TEST_CASE("subsets_conjugate is an equivalence relation") {
  for (auto name : small_types) {
    const auto cm = CartanMatrix::parse_type(name);
    if (cm.size() > 4) continue;
    CAPTURE(name);
    const auto rs = RootSystem::generate(cm);
    const auto subsets = all_subsets(cm.size());
    const std::size_t m = subsets.size();
    std::vector<std::vector<char>> rel(m, std::vector<char>(m));
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) rel[i][j] = subsets_conjugate(rs, subsets[i], subsets[j]);
    for (std::size_t i = 0; i < m; ++i) {
      CHECK(rel[i][i]);
      for (std::size_t j = 0; j < m; ++j) {
        CHECK(rel[i][j] == rel[j][i]);
        for (std::size_t k = 0; k < m; ++k)
          if (rel[i][j] && rel[j][k]) CHECK(rel[i][k]);
      }
    }
  }
}

TEST_CASE("type identification survives relabeling") {
  // B3 with nodes listed backwards
  const auto b3 = CartanMatrix::parse_type("B3");
  std::vector<IntVec> rev(3, IntVec(3));
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) rev[i][j] = b3(2 - i, 2 - j);
  const CartanMatrix m(rev, {"x", "y", "z"});
  const auto match = identify_type(m);
  CHECK(match.type.str() == "B3");
  CHECK(match.to_node == NodeList{2, 1, 0});
  CHECK(type_string(CartanMatrix::parse_type("A2+A1")) == "A2+A1");
  CHECK(cartan_isomorphisms(CartanMatrix::parse_type("D4"), CartanMatrix::parse_type("D4")).size() == 6);
}
