#include "scalar.hpp"

#include "error.hpp"

#include <limits>

namespace maxsolv {

Rational Rational::parse(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw Error(ErrorCode::parse, "empty rational literal");
  if (s.front() == '+') s.erase(0, 1);
  mpq_class q;
  if (q.set_str(s, 10) != 0 || s.find_first_not_of("-0123456789/") != std::string::npos)
    throw Error(ErrorCode::parse, "bad rational literal '" + std::string(text) + "'");
  if (q.get_den() == 0) throw Error(ErrorCode::parse, "zero denominator in '" + s + "'");
  return Rational(q);
}

long Rational::to_long() const {
  if (!is_integer() || !q_.get_num().fits_slong_p())
    throw Error(ErrorCode::internal, "rational " + str() + " is not a machine integer");
  return q_.get_num().get_si();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error(ErrorCode::internal, "division by zero");
  q_ /= o.q_;
  return *this;
}

std::string Gaussian::str() const {
  if (im_.is_zero()) return re_.str();
  std::string out;
  if (!re_.is_zero()) out = re_.str() + (im_.sign() > 0 ? "+" : "");
  if (im_ == Rational(1)) return out + "i";
  if (im_ == Rational(-1)) return out + "-i";
  return out + im_.str() + "i";
}

Gaussian& Gaussian::operator/=(const Gaussian& o) {
  Rational n = o.norm();
  if (n.is_zero()) throw Error(ErrorCode::internal, "division by zero");
  *this *= o.conj();
  re_ /= n;
  im_ /= n;
  return *this;
}

mpz_class lcm_den(const mpz_class& a, const Rational& r) {
  mpz_class out;
  mpz_lcm(out.get_mpz_t(), a.get_mpz_t(), r.raw().get_den_mpz_t());
  return out;
}

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::ok: return "ok";
    case ErrorCode::parse: return "parse";
    case ErrorCode::not_finite_type: return "not_finite_type";
    case ErrorCode::not_symmetrizable: return "not_symmetrizable";
    case ErrorCode::tau_not_involution: return "tau_not_involution";
    case ErrorCode::tau_not_automorphism: return "tau_not_automorphism";
    case ErrorCode::tau_breaks_coloring: return "tau_breaks_coloring";
    case ErrorCode::closed_mode_not_split: return "closed_mode_not_split";
    case ErrorCode::bad_label: return "bad_label";
    case ErrorCode::theta_not_subset: return "theta_not_subset";
    case ErrorCode::not_root_system: return "not_root_system";
    case ErrorCode::unrecognized_index: return "unrecognized_index";
    case ErrorCode::missing_oracle: return "missing_oracle";
    case ErrorCode::not_admissible: return "not_admissible";
    case ErrorCode::different_index: return "different_index";
    case ErrorCode::rank_bound: return "rank_bound";
    case ErrorCode::realization_invalid: return "realization_invalid";
    case ErrorCode::not_anisotropic: return "not_anisotropic";
    case ErrorCode::catalog: return "catalog";
    case ErrorCode::io: return "io";
    case ErrorCode::argument: return "argument";
    case ErrorCode::certification_failed: return "certification_failed";
    case ErrorCode::internal: return "internal";
  }
  return "unknown";
}

}  // namespace maxsolv
