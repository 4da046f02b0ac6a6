#include "classify.hpp"

#include <algorithm>
#include <set>

namespace maxsolv {

namespace {

SolvableClassDescriptor from_certificate(const SatakeIndex& idx, const RestrictedRootSystem& rrs,
                                         AdmissibilityCertificate cert) {
  SolvableClassDescriptor d;
  d.theta = cert.theta;
  d.parabolic = parabolic(idx, rrs, cert.theta);
  d.dim_B = dim_B(d.parabolic);
  for (const auto& f : cert.per_factor) d.levi_factors.push_back(f.label);
  d.certificate = std::move(cert);
  d.index_digest = idx.digest();
  return d;
}

}  // namespace

std::vector<SolvableClassDescriptor> enumerate_classes(const SatakeIndex& idx,
                                                       const AdmissibilityContext& ctx) {
  require_valid(idx);
  const auto rrs = restricted_system(idx);
  std::vector<SolvableClassDescriptor> out;
  for (const auto& theta : all_subsets(rrs.rank())) {
    auto cert = is_admissible(idx, rrs, theta, ctx);
    if (cert.admissible) out.push_back(from_certificate(idx, rrs, std::move(cert)));
  }
  return out;
}

SolvableClassDescriptor describe_class(const SatakeIndex& idx, const RestrictedRootSystem& rrs,
                                       const ThetaSubset& theta, const AdmissibilityContext& ctx) {
  auto cert = is_admissible(idx, rrs, theta, ctx);
  if (!cert.admissible)
    throw Error(ErrorCode::not_admissible,
                "theta {" + theta_string(rrs, cert.theta) + "} is not admissible: " + cert.reason);
  return from_certificate(idx, rrs, std::move(cert));
}

const char* conjugacy_name(Conjugacy c) {
  switch (c) {
    case Conjugacy::conjugate: return "CONJUGATE";
    case Conjugacy::not_conjugate: return "NOT_CONJUGATE";
    case Conjugacy::conditional: return "CONDITIONAL";
  }
  return "?";
}

ConjugacyVerdict conjugate_classes(const SatakeIndex& idx, const SolvableClassDescriptor& d1,
                                   const SolvableClassDescriptor& d2) {
  const auto digest = idx.digest();
  if (d1.index_digest != digest || d2.index_digest != digest)
    throw Error(ErrorCode::different_index, "descriptors come from different indices");
  const auto rrs = restricted_system(idx);
  ConjugacyVerdict v;
  v.weyl_conjugate = subsets_conjugate(rrs.base, d1.theta, d2.theta);
  if (d1.theta != d2.theta) {
    v.verdict = Conjugacy::not_conjugate;
    v.reason = "Θ differs";
  } else if (d1.torus_slot == d2.torus_slot) {
    v.verdict = Conjugacy::conjugate;
    v.reason = "identical descriptors";
  } else {
    v.verdict = Conjugacy::conditional;
    v.reason = "same Θ; conjugate iff the torus classes '" + d1.torus_slot + "' and '" +
               d2.torus_slot + "' are related by an element of P_Θ(k) normalizing the Levi";
  }
  return v;
}

std::vector<TypeClass> type_classes(const SatakeIndex& idx, const AdmissibilityContext& ctx) {
  require_valid(idx);
  const auto rrs = restricted_system(idx);
  std::vector<TypeClass> out;
  std::set<ThetaSubset> seen;
  for (const auto& theta : all_subsets(rrs.rank())) {
    if (seen.count(theta)) continue;
    TypeClass tc;
    tc.representatives = weyl_orbit_subsets(rrs.base, theta);
    std::sort(tc.representatives.begin(), tc.representatives.end(), subset_less);
    bool first = true;
    for (const auto& member : tc.representatives) {
      seen.insert(member);
      const bool adm = is_admissible(idx, rrs, member, ctx).admissible;
      if (first) {
        tc.admissible = adm;
        first = false;
      } else if (adm != tc.admissible) {
        throw Error(ErrorCode::internal, "admissibility is not constant on the W_k-orbit of {" +
                                             theta_string(rrs, theta) + "}");
      }
    }
    out.push_back(std::move(tc));
  }
  return out;
}

MembershipReport membership_report(const SatakeIndex& idx, const ThetaSubset& type,
                                   const AdmissibilityContext& ctx) {
  require_valid(idx);
  const auto rrs = restricted_system(idx);
  auto cert = is_admissible(idx, rrs, type, ctx);
  if (!cert.admissible)
    throw Error(ErrorCode::not_admissible,
                "inconsistent type {" + theta_string(rrs, cert.theta) +
                    "}: the type of a semisimple element is necessarily an admissible subset (" +
                    cert.reason + ")");
  MembershipReport r;
  r.type = cert.theta;
  r.family = from_certificate(idx, rrs, std::move(cert));
  return r;
}

}  // namespace maxsolv
