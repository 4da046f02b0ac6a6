#pragma once

#include "classify.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace maxsolv {

struct Table {
  std::string name;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
};

// What every CLI command prints: a `#` header block and TSV tables, or the
// same content as one JSON document.
struct Report {
  std::string command;
  std::string digest;  // empty for index-free commands
  std::vector<std::pair<std::string, std::string>> meta;
  std::vector<Table> tables;
  ErrorCode status = ErrorCode::ok;  // certification_failed when a check did not hold

  std::string tsv() const;
  std::string json() const;
};

// Commands: roots restrict parabolic admissible classify types conjugate
// verify catalog. `idx` may be null for catalog. Options: theta, theta1,
// theta2, slot1, slot2, realization (verify against a realization file).
Report run_report(const SatakeIndex* idx, const std::string& command,
                  const std::map<std::string, std::string>& options,
                  const AdmissibilityContext& ctx = {});

}  // namespace maxsolv
