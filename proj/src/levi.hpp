#pragma once

#include "index.hpp"

#include <string>
#include <utility>
#include <vector>

namespace maxsolv {

// Theta is a subset of the simple restricted roots, as sorted indices into Phi.
using ThetaSubset = SimpleSubset;

// "a1,a3" -> {0,2}; "" or "-" -> {}. Throws theta_not_subset on unknown labels.
ThetaSubset parse_theta(const RestrictedRootSystem& rrs, const std::string& text);
std::string theta_string(const RestrictedRootSystem& rrs, const ThetaSubset& theta);  // "a1,a3" / "-"

// True when the restricted root lies in the Z-span of Theta.
bool in_theta_span(const IntVec& restricted, const ThetaSubset& theta);

struct ParabolicDescriptor {
  ThetaSubset theta;
  int dim_S_theta = 0;
  SatakeIndex levi_subindex;  // index of the derived group of Z_G(S_Theta)
  NodeList levi_nodes;        // its nodes in the parent index
  std::vector<std::pair<IntVec, int>> nilrad_restricted;  // positive roots outside span(Theta)
  int dim_nilrad = 0;
  int dim_A = 0;  // anisotropic part of the connected center of the Levi
  int absolute_rank = 0;
  int levi_absolute_rank = 0;
};

ParabolicDescriptor parabolic(const SatakeIndex& idx, const RestrictedRootSystem& rrs,
                              const ThetaSubset& theta);

int dim_B(const ParabolicDescriptor& pd);

}  // namespace maxsolv
