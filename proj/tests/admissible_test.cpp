#include "admissible.hpp"
#include "common.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

using namespace maxsolv;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream f(path);
  std::ostringstream os;
  os << f.rdbuf();
  return os.str();
}

// Rank of a maximal compact subalgebra, from the usual list of maximal
// compact subgroups: S(O(n)), Sp(n), S(U(p)xU(q)), SO(p)xSO(q), U(n), Sp(p)xSp(q), U(n).
int compact_rank_oracle(const RealFormLabel& l) {
  const auto& p = l.params;
  switch (l.family) {
    case Family::sl_R: return p[0] / 2;
    case Family::sl_H: return p[0];
    case Family::su_pq: return p[0] + p[1] - 1;
    case Family::so_pq: return p[0] / 2 + p[1] / 2;
    case Family::sp_R: return p[0];
    case Family::sp_pq: return p[0] + p[1];
    case Family::so_star: return p[0];
    default: break;
  }
  // exceptional: maximal compact subalgebras
  static const std::map<std::string, int> k = {
      {"G2(2)", 2},    {"F4(4)", 4},    {"F4(-20)", 4},  {"E6(6)", 4},   {"E6(2)", 6},
      {"E6(-14)", 6},  {"E6(-26)", 4},  {"E7(7)", 7},    {"E7(-5)", 7},  {"E7(-25)", 7},
      {"E8(8)", 8},    {"E8(-24)", 8}};
  return k.at(l.tag);
}

int real_rank_oracle(const RealFormLabel& l) {
  const auto& p = l.params;
  switch (l.family) {
    case Family::sl_R:
    case Family::sl_H: return p[0] - 1;
    case Family::su_pq:
    case Family::so_pq:
    case Family::sp_pq: return std::min(p[0], p[1]);
    case Family::sp_R: return p[0];
    case Family::so_star: return p[0] / 2;
    default: break;
  }
  static const std::map<std::string, int> k = {
      {"G2(2)", 2},   {"F4(4)", 4},   {"F4(-20)", 1}, {"E6(6)", 6},   {"E6(2)", 4},  {"E6(-14)", 2},
      {"E6(-26)", 2}, {"E7(7)", 7},   {"E7(-5)", 4},  {"E7(-25)", 3}, {"E8(8)", 8},  {"E8(-24)", 4}};
  return k.at(l.tag);
}

// Satake diagrams of noncompact, non-complex simple real forms per Dynkin
// type. su(1,1) = sl(2,R) is one diagram; so*(8) = so(6,2) keeps its own.
int forms_of_type(SimpleType t) {
  const int n = t.rank;
  switch (t.family) {
    case 'A': return n == 1 ? 1 : 1 + (n % 2 == 1 ? 1 : 0) + (n + 1) / 2;
    case 'B': return n;
    case 'C': return 1 + n / 2;
    case 'D': return n + 1;
    case 'E': return n == 6 ? 4 : n == 7 ? 3 : 2;
    case 'F': return 2;
    case 'G': return 1;
  }
  return 0;
}

AdmissibilityCertificate check(const SatakeIndex& idx, const std::string& theta,
                               const AdmissibilityContext& ctx = {}) {
  const auto rrs = restricted_system(idx);
  return is_admissible(idx, rrs, parse_theta(rrs, theta), ctx);
}

}  // namespace

TEST_CASE("catalog ranks agree with the classical tables") {
  const auto& cat = RealFormCatalog::bundled();
  std::map<SimpleType, int> per_type;
  for (const auto& e : cat.entries()) {
    CAPTURE(e.label.name());
    CHECK(e.label.rank == e.type.rank);
    CHECK(e.label.compact_rank == compact_rank_oracle(e.label));
    CHECK(expected_real_rank(e.label) == real_rank_oracle(e.label));
    CHECK(int(restricted_system(e.index()).rank()) == real_rank_oracle(e.label));
    CHECK(e.label.rank >= e.label.compact_rank);
    CHECK(e.label.compact_rank >= 0);
    ++per_type[e.type];
  }
  for (const auto& [t, count] : per_type) {
    CAPTURE(t.str());
    CHECK(count == forms_of_type(t));
  }
  CHECK(cat.entries().size() == 133);
}

TEST_CASE("equal rank holds exactly for the expected families") {
  for (const auto& e : RealFormCatalog::bundled().entries()) {
    const auto& l = e.label;
    CAPTURE(l.name());
    bool expected = true;
    if (l.family == Family::sl_R) expected = l.params[0] == 2;
    else if (l.family == Family::sl_H) expected = false;
    else if (l.family == Family::so_pq) expected = l.params[0] % 2 == 0 || l.params[1] % 2 == 0;
    else if (l.family == Family::exceptional_id) expected = l.tag != "E6(6)" && l.tag != "E6(-26)";
    CHECK(l.equal_rank() == expected);
  }
}

TEST_CASE("catalog text round-trips and matches the shipped file") {
  const auto& cat = RealFormCatalog::bundled();
  const auto text = cat.serialize();
  CHECK(RealFormCatalog::parse(text).serialize() == text);
  CHECK(slurp(data_path("realforms.catalog")) == text);
  CHECK(RealFormCatalog::load(data_path("realforms.catalog")).entries().size() == cat.entries().size());
}

TEST_CASE("malformed catalog lines are rejected") {
  MAXSOLV_CHECK_CODE(RealFormCatalog::parse("sl_R 3 A2 ww id 2\n"), ErrorCode::catalog);
  MAXSOLV_CHECK_CODE(RealFormCatalog::parse("su_pq 2,1 A2 wb 2,1 2 2\n"), ErrorCode::catalog);
  MAXSOLV_CHECK_CODE(RealFormCatalog::parse("nonsense 3 A2 ww id 2 1\n"), ErrorCode::catalog);
  MAXSOLV_CHECK_CODE(RealFormCatalog::parse("sl_R 3 A2 ww id 2 5\n"), ErrorCode::catalog);
}

TEST_CASE("every catalog entry is recognized as itself") {
  for (const auto& e : RealFormCatalog::bundled().entries()) {
    CAPTURE(e.label.name());
    const auto comps = components(e.index());
    REQUIRE(comps.size() == 1);
    const auto label = recognize_real_form(comps[0]);
    // triality identifies the so*(8) diagram with that of so(6,2)
    if (e.label.name() == "so*(8)") CHECK(label.name() == "so(6,2)");
    else CHECK(label.name() == e.label.name());
    CHECK(label.compact_rank == e.label.compact_rank);
  }
}

TEST_CASE("compact and complex-type factors are structural") {
  const auto compact = components(parse_index("type: B3\nblack: 1,2,3\n"));
  CHECK(recognize_real_form(compact[0]).family == Family::compact);
  CHECK(recognize_real_form(compact[0]).equal_rank());
  const auto cx = components(parse_index("type: A2+A2\ntau: (1 3)(2 4)\n"));
  const auto label = recognize_real_form(cx[0]);
  CHECK(label.family == Family::complex_type);
  CHECK(label.rank == 4);
  CHECK(label.compact_rank == 2);
  MAXSOLV_CHECK_CODE(recognize_real_form(components(parse_index("type: A3\nblack: 2\n"))[0]),
                     ErrorCode::unrecognized_index);
}

TEST_CASE("sl(3,R): admissible subsets and the per-factor reason") {
  const auto idx = load_index(data_path("indices/sl3r.idx"));
  CHECK(check(idx, "-").admissible);
  CHECK(check(idx, "a1").admissible);
  CHECK(check(idx, "a2").admissible);
  const auto full = check(idx, "a1,a2");
  CHECK_FALSE(full.admissible);
  REQUIRE(full.per_factor.size() == 1);
  CHECK_FALSE(full.per_factor[0].equal_rank);
  CHECK(full.reason.find("sl(3,R): rank 2 != compact_rank 1") != std::string::npos);
}

TEST_CASE("closed mode: admissible iff the Levi is a torus") {
  const auto idx = load_index(data_path("indices/split_a2_closed.idx"));
  CHECK(check(idx, "-").admissible);
  CHECK_FALSE(check(idx, "a1").admissible);
  CHECK_FALSE(check(idx, "a1,a2").admissible);
}

TEST_CASE("oracle mode defers to the caller") {
  const auto idx = load_index(data_path("indices/a2_oracle.idx"));
  MAXSOLV_CHECK_CODE(check(idx, "a1"), ErrorCode::missing_oracle);
  AdmissibilityContext ctx;
  std::vector<std::string> asked;
  ctx.oracle = [&](const SatakeIndex&, const ThetaSubset& theta, const SatakeIndex& levi) {
    asked.push_back(type_string(levi.absolute));
    return theta.size() < 2;
  };
  CHECK(check(idx, "-", ctx).admissible);
  const auto c = check(idx, "a2", ctx);
  CHECK(c.admissible);
  CHECK(c.oracle_verdict == std::optional<bool>(true));
  CHECK_FALSE(check(idx, "a1,a2", ctx).admissible);
  CHECK(asked.back() == "A2");

  // the trivial Levi never reaches the oracle, even one that refuses everything
  asked.clear();
  ctx.oracle = [&](const SatakeIndex&, const ThetaSubset&, const SatakeIndex& levi) {
    asked.push_back(type_string(levi.absolute));
    return false;
  };
  CHECK(check(idx, "-", ctx).admissible);
  CHECK(check(idx, "-").admissible);
  CHECK(asked.empty());
  CHECK_FALSE(check(idx, "a1", ctx).admissible);
}

TEST_CASE("MAXSOLV_CATALOG replaces the bundled tables") {
  const auto path = std::filesystem::temp_directory_path() / "maxsolv_equal_rank_sl3.catalog";
  std::ofstream(path) << "sl_R 3 A2 ww id 2 2\n";  // pretend sl(3,R) were equal rank
  ::setenv("MAXSOLV_CATALOG", path.c_str(), 1);
  const auto& active = RealFormCatalog::active();
  CHECK(active.entries().size() == 1);
  const auto idx = load_index(data_path("indices/sl3r.idx"));
  CHECK(check(idx, "a1,a2").admissible);
  ::unsetenv("MAXSOLV_CATALOG");
  CHECK(RealFormCatalog::active().entries().size() == 133);
  CHECK_FALSE(check(idx, "a1,a2").admissible);
  std::filesystem::remove(path);
}
