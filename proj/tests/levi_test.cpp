#include "admissible.hpp"
#include "common.hpp"

#include <set>

using namespace maxsolv;

namespace {

std::vector<SatakeIndex> sample_indices() {
  std::vector<SatakeIndex> out;
  for (const auto& e : RealFormCatalog::bundled().entries())
    if (e.type.rank <= 6) out.push_back(e.index());
  for (auto t : {"A3", "B3", "G2", "A2+A1"})
    out.push_back(SatakeIndex::split_of(CartanMatrix::parse_type(t), FieldMode::algebraically_closed));
  out.push_back(parse_index("type: A2+A2\ntau: (1 3)(2 4)\n"));
  return out;
}

}  // namespace

TEST_CASE("parabolic bookkeeping against direct root counts") {
  for (const auto& idx : sample_indices()) {
    CAPTURE(idx.name);
    CAPTURE(format_index(idx));
    const auto rrs = restricted_system(idx);
    const int r = int(idx.rank());
    const int r_k = int(rrs.rank());
    const int n_pos = int(rrs.absolute.num_positive());
    for (const auto& theta : all_subsets(rrs.rank())) {
      const auto pd = parabolic(idx, rrs, theta);
      std::set<std::size_t> in_theta(theta.begin(), theta.end());

      // Levi nodes: black, or white in a class of Theta
      NodeList expect_nodes;
      for (std::size_t i = 0; i < idx.rank(); ++i)
        if (idx.black(i) || in_theta.count(std::size_t(rrs.node_class[i]))) expect_nodes.push_back(i);
      CHECK(pd.levi_nodes == expect_nodes);
      CHECK(pd.levi_absolute_rank == int(expect_nodes.size()));

      // positive absolute roots split into Levi roots and nilradical roots
      int levi_pos = 0, nil = 0;
      for (const auto& root : rrs.absolute.positives()) {
        bool levi = true;
        for (std::size_t i = 0; i < idx.rank(); ++i)
          if (root.coords()[i] != 0 && !std::count(expect_nodes.begin(), expect_nodes.end(), i)) levi = false;
        (levi ? levi_pos : nil)++;
      }
      CHECK(pd.dim_nilrad == nil);
      CHECK(levi_pos + nil == n_pos);
      // dim G = dim L + 2 dim N
      CHECK(r + 2 * n_pos == (r + 2 * levi_pos) + 2 * pd.dim_nilrad);

      CHECK(pd.dim_S_theta == r_k - int(theta.size()));
      CHECK(pd.dim_A == r - pd.levi_absolute_rank - pd.dim_S_theta);
      CHECK(pd.dim_A >= 0);
      CHECK(dim_B(pd) == r + pd.dim_nilrad);
      if (idx.split()) CHECK(pd.dim_A == 0);

      int mult = 0;
      for (const auto& [root, m] : pd.nilrad_restricted) {
        CHECK_FALSE(in_theta_span(root, theta));
        mult += m;
      }
      CHECK(mult == pd.dim_nilrad);
    }
  }
}

TEST_CASE("sl(4,R) with Theta = {a1,a3}") {
  const auto idx = load_index(data_path("indices/sl4r.idx"));
  const auto rrs = restricted_system(idx);
  const auto pd = parabolic(idx, rrs, parse_theta(rrs, "a1,a3"));
  CHECK(pd.dim_nilrad == 4);
  CHECK(dim_B(pd) == 7);
  CHECK(pd.dim_S_theta == 1);
  CHECK(type_string(pd.levi_subindex.absolute) == "A1+A1");
}

TEST_CASE("su(2,1) at Theta empty has a one-dimensional anisotropic center") {
  const auto idx = load_index(data_path("indices/su21.idx"));
  const auto rrs = restricted_system(idx);
  const auto pd = parabolic(idx, rrs, {});
  CHECK(pd.dim_A == 1);
  CHECK(pd.dim_S_theta == 1);
  CHECK(pd.dim_nilrad == 3);
  CHECK(dim_B(pd) == 5);
}

TEST_CASE("theta parsing") {
  const auto rrs = restricted_system(load_index(data_path("indices/sl4r.idx")));
  CHECK(parse_theta(rrs, "a3, a1") == ThetaSubset{0, 2});
  CHECK(parse_theta(rrs, "-").empty());
  CHECK(parse_theta(rrs, "").empty());
  CHECK(theta_string(rrs, {0, 2}) == "a1,a3");
  CHECK(theta_string(rrs, {}) == "-");
  MAXSOLV_CHECK_CODE(parse_theta(rrs, "a4"), ErrorCode::theta_not_subset);
  MAXSOLV_CHECK_CODE(parse_theta(rrs, "b1"), ErrorCode::theta_not_subset);
}
