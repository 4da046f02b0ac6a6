#pragma once

#include "admissible.hpp"

#include <string>
#include <vector>

namespace maxsolv {

struct SolvableClassDescriptor {
  ThetaSubset theta;
  ParabolicDescriptor parabolic;
  AdmissibilityCertificate certificate;
  int dim_B = 0;
  std::string torus_slot;  // caller-chosen; empty = unbound
  std::vector<RealFormLabel> levi_factors;
  std::string index_digest;
};

// One descriptor per admissible Theta, sorted by (|Theta|, lexicographic).
std::vector<SolvableClassDescriptor> enumerate_classes(const SatakeIndex& idx,
                                                       const AdmissibilityContext& ctx = {});

// Descriptor for a single admissible Theta; throws not_admissible otherwise.
SolvableClassDescriptor describe_class(const SatakeIndex& idx, const RestrictedRootSystem& rrs,
                                       const ThetaSubset& theta, const AdmissibilityContext& ctx = {});

enum class Conjugacy { conjugate, not_conjugate, conditional };
const char* conjugacy_name(Conjugacy c);

struct ConjugacyVerdict {
  Conjugacy verdict = Conjugacy::conditional;
  std::string reason;
  bool weyl_conjugate = false;  // the Theta's are W_k-conjugate (informational)
};

// Theta must agree exactly; torus classes are only compared by slot identity.
ConjugacyVerdict conjugate_classes(const SatakeIndex& idx, const SolvableClassDescriptor& d1,
                                   const SolvableClassDescriptor& d2);

struct TypeClass {
  std::vector<ThetaSubset> representatives;  // sorted, first is the orbit minimum
  bool admissible = false;
};

// Power set of Phi split into W_k-orbits. Throws internal if admissibility
// is found to vary along an orbit.
std::vector<TypeClass> type_classes(const SatakeIndex& idx, const AdmissibilityContext& ctx = {});

struct MembershipReport {
  ThetaSubset type;
  SolvableClassDescriptor family;
};

// An element of semisimple type Theta lies in a conjugate of some B_{Theta,T};
// a non-admissible type is inconsistent.
MembershipReport membership_report(const SatakeIndex& idx, const ThetaSubset& type,
                                   const AdmissibilityContext& ctx = {});

}  // namespace maxsolv
