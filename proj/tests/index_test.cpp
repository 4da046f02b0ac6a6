#include "admissible.hpp"
#include "common.hpp"

#include <fstream>
#include <set>
#include <sstream>

using namespace maxsolv;

namespace {

SatakeIndex idx(const std::string& text) { return parse_index(text); }

std::string slurp(const std::string& path) {
  std::ifstream f(path);
  std::ostringstream os;
  os << f.rdbuf();
  return os.str();
}

}  // namespace

TEST_CASE("validate_index examples") {
  CHECK(validate_index(idx("type: A2\nfield: real\n")).valid);
  CHECK(validate_index(idx("type: A2\ntau: (1 2)\nfield: real\n")).valid);

  SatakeIndex bad = idx("type: A2\ntau: (1 2)\nfield: real\n");
  bad.color[0] = Color::black;
  const auto rep = validate_index(bad);
  CHECK_FALSE(rep.valid);
  CHECK(rep.code == ErrorCode::tau_breaks_coloring);
  CHECK_FALSE(rep.witness.empty());
}

TEST_CASE("each invariant violation has its own code") {
  MAXSOLV_CHECK_CODE(require_valid(idx("type: A3\ntau: (1 2 3)\n")), ErrorCode::tau_not_involution);
  MAXSOLV_CHECK_CODE(require_valid(idx("type: A3\ntau: (1 2)\n")), ErrorCode::tau_not_automorphism);
  MAXSOLV_CHECK_CODE(require_valid(idx("type: A2\nblack: A2.1\nfield: closed\n")), ErrorCode::closed_mode_not_split);
  MAXSOLV_CHECK_CODE(idx("type: A2\nblack: Z9.9\n"), ErrorCode::bad_label);
  MAXSOLV_CHECK_CODE(idx("type: A2\nfield: p-adic\n"), ErrorCode::parse);
  MAXSOLV_CHECK_CODE(idx("type: Q2\n"), ErrorCode::parse);
  MAXSOLV_CHECK_CODE(idx("black: A2.1\n"), ErrorCode::parse);
  MAXSOLV_CHECK_CODE(load_index("/nonexistent/x.idx"), ErrorCode::io);
}

TEST_CASE("parsing tolerates whitespace, comments and line order") {
  const auto a = idx("type: A3\nblack: A3.1, A3.3\nfield: real\n");
  const auto b = idx("# comment\n  field:real  \n\n black:A3.3 ,A3.1\ntype:   A3   # trailing\n");
  CHECK(a.canonical() == b.canonical());
  CHECK(a.digest() == b.digest());

  const auto file = load_index(data_path("indices/sl4r.idx"));
  CHECK(file.digest() == idx("name: sl(4,R)\ntype: A3\nfield: real\n").digest());
  CHECK(parse_index(format_index(file)).canonical() == file.canonical());
  CHECK(format_index(parse_index(slurp(data_path("indices/e6_minus14.idx")))) ==
        format_index(load_index(data_path("indices/e6_minus14.idx"))));
}

TEST_CASE("nodes may be given by position") {
  const auto a = idx("type: A3\nblack: 1,3\n");
  const auto b = idx("type: A3\nblack: A3.1,A3.3\n");
  CHECK(a.canonical() == b.canonical());
}

TEST_CASE("su(2,1) restricts to BC1 with multiplicities 2 and 1") {
  const auto rrs = restricted_system(load_index(data_path("indices/su21.idx")));
  CHECK(rrs.rank() == 1);
  CHECK_FALSE(rrs.base.reduced());
  // absolute positives a1, a2, a1+a2 restrict to l, l, 2l under the swap
  CHECK(rrs.restrict({1, 0}) == IntVec{1});
  CHECK(rrs.restrict({0, 1}) == IntVec{1});
  CHECK(rrs.restrict({1, 1}) == IntVec{2});
  const std::map<IntVec, int> expected = {{{1}, 2}, {{2}, 1}, {{-1}, 2}, {{-2}, 1}};
  CHECK(rrs.multiplicity == expected);
}

TEST_CASE("split indices restrict identically") {
  for (auto name : {"A1", "A4", "B3", "C3", "D4", "G2", "F4", "A2+A1"}) {
    CAPTURE(name);
    const auto cm = CartanMatrix::parse_type(name);
    const auto rrs = restricted_system(SatakeIndex::split_of(cm, FieldMode::algebraically_closed));
    const auto rs = RootSystem::generate(cm);
    std::set<IntVec> a, b;
    for (const auto& r : rs.roots()) a.insert(r.coords());
    for (const auto& r : rrs.base.roots()) b.insert(r.coords());
    CHECK(a == b);
    for (const auto& [root, m] : rrs.multiplicity) CHECK(m == 1);
    CHECK(rrs.base.cartan() == cm);
  }
}

TEST_CASE("sl(2,H): black ends restrict to zero") {
  const auto rrs = restricted_system(load_index(data_path("indices/sl2h.idx")));
  CHECK(rrs.rank() == 1);
  CHECK(rrs.restrict({1, 0, 0}) == IntVec{0});
  CHECK(rrs.restrict({1, 1, 1}) == IntVec{1});
  CHECK(rrs.multiplicity.at({1}) == 4);
  CHECK(rrs.multiplicity.size() == 2);
}

TEST_CASE("catalog indices satisfy the restricted-system invariants") {
  for (const auto& e : RealFormCatalog::bundled().entries()) {
    const auto index = e.index();
    CAPTURE(e.label.name());
    const auto rrs = restricted_system(index);

    // k-rank from the family formulas / exceptional tables
    CHECK(int(rrs.rank()) == expected_real_rank(e.label));

    // black-supported roots restrict to zero and nothing else does
    std::size_t off_black = 0;
    for (const auto& r : rrs.absolute.roots()) {
      bool black_only = true;
      for (std::size_t i = 0; i < index.rank(); ++i)
        if (r.coords()[i] != 0 && !index.black(i)) black_only = false;
      const auto img = rrs.restrict(r.coords());
      const bool zero = std::all_of(img.begin(), img.end(), [](int x) { return x == 0; });
      CHECK(zero == black_only);
      if (!black_only) ++off_black;
    }
    int total = 0;
    for (const auto& [root, m] : rrs.multiplicity) total += m;
    CHECK(std::size_t(total) == off_black);

    // a root system in its own right
    std::set<IntVec> roots;
    for (const auto& r : rrs.base.roots()) roots.insert(r.coords());
    for (const auto& v : roots) {
      IntVec neg = v;
      for (auto& x : neg) x = -x;
      CHECK(roots.count(neg));
      for (std::size_t i = 0; i < rrs.rank(); ++i) CHECK(roots.count(rrs.base.reflect(i, v)));
    }
    CHECK(roots.size() == rrs.multiplicity.size());
  }
}

TEST_CASE("components group tau-orbits") {
  CHECK(components(idx("type: A1+A1\n")).size() == 2);
  const auto swapped = components(idx("type: A1+A1\ntau: (1 2)\n"));
  REQUIRE(swapped.size() == 1);
  CHECK(swapped[0].complex_type);
  CHECK(swapped[0].nodes == NodeList{0, 1});
  const auto a3 = components(idx("type: A3\nblack: 2\ntau: (1 3)\n"));
  REQUIRE(a3.size() == 1);
  CHECK_FALSE(a3[0].complex_type);
}

TEST_CASE("complex-type factor restricts with multiplicity 2") {
  const auto rrs = restricted_system(idx("type: A2+A2\ntau: (1 3)(2 4)\n"));
  CHECK(rrs.rank() == 2);
  for (const auto& [root, m] : rrs.multiplicity) CHECK(m == 2);
}
