#pragma once

#include "levi.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace maxsolv {

enum class Family { sl_R, sl_H, su_pq, so_pq, so_star, sp_R, sp_pq, compact, complex_type, exceptional_id };

const char* family_name(Family f);
Family parse_family(const std::string& s);

// Isomorphism class of a simple real Lie algebra, with the two ranks the
// equal-rank test needs.
struct RealFormLabel {
  Family family = Family::compact;
  std::vector<int> params;
  std::string tag;  // exceptional name ("E6(-14)") or Dynkin type for compact/complex_type
  int rank = 0;
  int compact_rank = 0;

  bool equal_rank() const { return rank == compact_rank; }
  std::string name() const;  // "sl(3,R)", "su(2,1)", "E6(-14)", ...
  std::string params_string() const;
};

// Real rank predicted by the family formulas (used to cross-check catalog data).
int expected_real_rank(const RealFormLabel& label);
// Maximal-compact rank from the family formulas.
int expected_compact_rank(const RealFormLabel& label);

struct CatalogEntry {
  RealFormLabel label;
  SimpleType type;
  std::string coloring;           // 'w'/'b' per Bourbaki node
  std::vector<std::size_t> tau;   // 0-based images in Bourbaki order

  SatakeIndex index() const;      // field mode real, name = label.name()
  std::string record() const;     // one text line
};

// Satake diagrams of the simple real forms. Compact and complex-type
// factors are recognized structurally and never stored.
class RealFormCatalog {
public:
  RealFormCatalog() = default;
  explicit RealFormCatalog(std::vector<CatalogEntry> entries) : entries_(std::move(entries)) {}

  static const RealFormCatalog& bundled();  // all simple noncompact forms of rank <= 8
  static RealFormCatalog parse(const std::string& text);
  static RealFormCatalog load(const std::string& path);
  // MAXSOLV_CATALOG overrides the bundled tables when set.
  static const RealFormCatalog& active();

  const std::vector<CatalogEntry>& entries() const { return entries_; }
  const CatalogEntry* find(const std::string& name) const;
  std::string serialize() const;

private:
  std::vector<CatalogEntry> entries_;
};

// factor must be one tau-orbit of connected components.
RealFormLabel recognize_real_form(const SatakeIndex& factor, bool complex_type,
                                  const RealFormCatalog& catalog = RealFormCatalog::active());
RealFormLabel recognize_real_form(const IndexFactor& factor,
                                  const RealFormCatalog& catalog = RealFormCatalog::active());

// Caller-supplied admissibility decision for oracle mode.
using AdmissibilityOracle =
    std::function<bool(const SatakeIndex& idx, const ThetaSubset& theta, const SatakeIndex& levi)>;

struct FactorVerdict {
  RealFormLabel label;
  bool equal_rank = false;
};

struct AdmissibilityCertificate {
  ThetaSubset theta;
  bool admissible = false;
  FieldMode mode = FieldMode::real;
  std::vector<FactorVerdict> per_factor;
  std::optional<bool> oracle_verdict;
  std::string reason;  // human-readable justification
};

struct AdmissibilityContext {
  const RealFormCatalog* catalog = nullptr;  // null -> active()
  AdmissibilityOracle oracle;
};

AdmissibilityCertificate is_admissible(const SatakeIndex& idx, const RestrictedRootSystem& rrs,
                                       const ThetaSubset& theta,
                                       const AdmissibilityContext& ctx = {});

}  // namespace maxsolv
