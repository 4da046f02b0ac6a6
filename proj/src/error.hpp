#pragma once

#include <stdexcept>
#include <string>

namespace maxsolv {

// Mirrors maxsolv_status in the C header; values must stay in sync.
enum class ErrorCode {
  ok = 0,
  parse = 1,
  not_finite_type = 2,
  not_symmetrizable = 3,
  tau_not_involution = 4,
  tau_not_automorphism = 5,
  tau_breaks_coloring = 6,
  closed_mode_not_split = 7,
  bad_label = 8,
  theta_not_subset = 9,
  not_root_system = 10,
  unrecognized_index = 11,
  missing_oracle = 12,
  not_admissible = 13,
  different_index = 14,
  rank_bound = 15,
  realization_invalid = 16,
  not_anisotropic = 17,
  catalog = 18,
  io = 19,
  argument = 20,
  certification_failed = 21,
  internal = 22,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& what, std::string witness = {})
      : std::runtime_error(what), code_(code), witness_(std::move(witness)) {}

  ErrorCode code() const { return code_; }
  // Concrete counterexample backing the error, if any (e.g. a vector of
  // nonpositive norm for a non-finite Cartan matrix).
  const std::string& witness() const { return witness_; }

private:
  ErrorCode code_;
  std::string witness_;
};

}  // namespace maxsolv
