#include "levi.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace maxsolv {

ThetaSubset parse_theta(const RestrictedRootSystem& rrs, const std::string& text) {
  ThetaSubset out;
  std::string cur;
  auto flush = [&] {
    if (cur.empty() || cur == "-") {
      cur.clear();
      return;
    }
    auto k = rrs.find_simple(cur);
    if (!k) throw Error(ErrorCode::theta_not_subset, "'" + cur + "' is not a simple restricted root");
    out.push_back(*k);
    cur.clear();
  };
  for (char c : text) {
    if (c == ',' || c == ' ' || c == '{' || c == '}')
      flush();
    else
      cur += c;
  }
  flush();
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::string theta_string(const RestrictedRootSystem& rrs, const ThetaSubset& theta) {
  if (theta.empty()) return "-";
  std::string out;
  for (auto t : theta) out += (out.empty() ? "" : ",") + rrs.simple_labels.at(t);
  return out;
}

bool in_theta_span(const IntVec& restricted, const ThetaSubset& theta) {
  for (std::size_t i = 0; i < restricted.size(); ++i)
    if (restricted[i] != 0 && !std::binary_search(theta.begin(), theta.end(), i)) return false;
  return true;
}

ParabolicDescriptor parabolic(const SatakeIndex& idx, const RestrictedRootSystem& rrs,
                              const ThetaSubset& theta) {
  for (auto t : theta)
    if (t >= rrs.rank())
      throw Error(ErrorCode::theta_not_subset, "theta is not a subset of the simple restricted roots");
  ThetaSubset th(theta);
  std::sort(th.begin(), th.end());
  th.erase(std::unique(th.begin(), th.end()), th.end());

  ParabolicDescriptor pd;
  pd.theta = th;
  pd.absolute_rank = static_cast<int>(idx.rank());
  pd.dim_S_theta = static_cast<int>(rrs.rank() - th.size());

  for (std::size_t i = 0; i < idx.rank(); ++i) {
    int k = rrs.node_class[i];
    if (k < 0 || std::binary_search(th.begin(), th.end(), static_cast<std::size_t>(k)))
      pd.levi_nodes.push_back(i);
  }
  pd.levi_subindex = idx.sub(pd.levi_nodes);
  pd.levi_absolute_rank = static_cast<int>(pd.levi_nodes.size());

  int levi_pos = 0;
  for (const auto& r : rrs.absolute.positives()) {
    bool inside = true;
    for (std::size_t i = 0; i < idx.rank() && inside; ++i)
      if (r.coords()[i] != 0 && !std::binary_search(pd.levi_nodes.begin(), pd.levi_nodes.end(), i))
        inside = false;
    levi_pos += inside;
  }
  pd.dim_nilrad = static_cast<int>(rrs.absolute.num_positive()) - levi_pos;

  for (const auto& r : rrs.base.positives())
    if (!in_theta_span(r.coords(), th))
      pd.nilrad_restricted.emplace_back(r.coords(), rrs.multiplicity.at(r.coords()));

  pd.dim_A = pd.absolute_rank - pd.levi_absolute_rank - pd.dim_S_theta;
  if (pd.dim_A < 0)
    throw Error(ErrorCode::internal, "negative anisotropic center dimension");
  return pd;
}

int dim_B(const ParabolicDescriptor& pd) { return pd.absolute_rank + pd.dim_nilrad; }

}  // namespace maxsolv
