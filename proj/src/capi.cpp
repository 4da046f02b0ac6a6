#include "maxsolv/maxsolv.h"

#include "liealg.hpp"
#include "report.hpp"

#include <cstdlib>
#include <cstring>
#include <memory>

using namespace maxsolv;

struct maxsolv_index {
  SatakeIndex idx;
  maxsolv_oracle_fn oracle = nullptr;
  void* user = nullptr;

  AdmissibilityContext context() const {
    AdmissibilityContext ctx;
    if (oracle) {
      auto fn = oracle;
      auto* u = user;
      ctx.oracle = [fn, u](const SatakeIndex& g, const ThetaSubset& theta, const SatakeIndex& levi) {
        const auto rrs = restricted_system(g);
        const std::string t = theta_string(rrs, theta);
        const std::string type = levi.rank() ? type_string(levi.absolute) : "-";
        const int v = fn(u, t.c_str(), type.c_str(), levi.coloring_string().c_str());
        if (v < 0) throw Error(ErrorCode::missing_oracle, "oracle failed on theta {" + t + "}");
        return v != 0;
      };
    }
    return ctx;
  }
};

namespace {

thread_local std::string last_error;
thread_local std::string last_witness;

maxsolv_status fail(ErrorCode code, const std::string& msg, const std::string& witness = {}) {
  last_error = msg;
  last_witness = witness;
  return static_cast<maxsolv_status>(code);
}

template <class F>
maxsolv_status guarded(F&& body) {
  try {
    last_error.clear();
    last_witness.clear();
    return body();
  } catch (const Error& e) {
    return fail(e.code(), e.what(), e.witness());
  } catch (const std::bad_alloc&) {
    return fail(ErrorCode::internal, "out of memory");
  } catch (const std::exception& e) {
    return fail(ErrorCode::internal, e.what());
  }
}

char* dup(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

void need(const void* p, const char* what) {
  if (!p) throw Error(ErrorCode::argument, std::string(what) + " must not be NULL");
}

}  // namespace

extern "C" {

const char* maxsolv_version(void) { return "0.1.0"; }

const char* maxsolv_status_name(maxsolv_status status) {
  return error_code_name(static_cast<ErrorCode>(status));
}

const char* maxsolv_last_error(void) { return last_error.c_str(); }
const char* maxsolv_last_witness(void) { return last_witness.c_str(); }
void maxsolv_string_free(char* s) { std::free(s); }

maxsolv_status maxsolv_index_parse(const char* text, maxsolv_index** out) {
  return guarded([&] {
    need(text, "text");
    need(out, "out");
    *out = nullptr;
    auto h = std::make_unique<maxsolv_index>();
    h->idx = parse_index(text);
    require_valid(h->idx);
    *out = h.release();
    return MAXSOLV_OK;
  });
}

maxsolv_status maxsolv_index_load(const char* path, maxsolv_index** out) {
  return guarded([&] {
    need(path, "path");
    need(out, "out");
    *out = nullptr;
    auto h = std::make_unique<maxsolv_index>();
    h->idx = load_index(path);
    require_valid(h->idx);
    *out = h.release();
    return MAXSOLV_OK;
  });
}

void maxsolv_index_free(maxsolv_index* idx) { delete idx; }

maxsolv_status maxsolv_index_set_oracle(maxsolv_index* idx, maxsolv_oracle_fn fn, void* user) {
  return guarded([&] {
    need(idx, "idx");
    idx->oracle = fn;
    idx->user = user;
    return MAXSOLV_OK;
  });
}

maxsolv_status maxsolv_index_digest(const maxsolv_index* idx, char** out) {
  return guarded([&] {
    need(idx, "idx");
    need(out, "out");
    *out = dup(idx->idx.digest());
    return MAXSOLV_OK;
  });
}

maxsolv_status maxsolv_absolute_rank(const maxsolv_index* idx, size_t* out) {
  return guarded([&] {
    need(idx, "idx");
    need(out, "out");
    *out = idx->idx.rank();
    return MAXSOLV_OK;
  });
}

maxsolv_status maxsolv_k_rank(const maxsolv_index* idx, size_t* out) {
  return guarded([&] {
    need(idx, "idx");
    need(out, "out");
    *out = restricted_system(idx->idx).rank();
    return MAXSOLV_OK;
  });
}

maxsolv_status maxsolv_is_admissible(const maxsolv_index* idx, const char* theta, int* admissible) {
  return guarded([&] {
    need(idx, "idx");
    need(theta, "theta");
    need(admissible, "admissible");
    const auto rrs = restricted_system(idx->idx);
    *admissible = is_admissible(idx->idx, rrs, parse_theta(rrs, theta), idx->context()).admissible ? 1 : 0;
    return MAXSOLV_OK;
  });
}

maxsolv_status maxsolv_class_count(const maxsolv_index* idx, size_t* out) {
  return guarded([&] {
    need(idx, "idx");
    need(out, "out");
    *out = enumerate_classes(idx->idx, idx->context()).size();
    return MAXSOLV_OK;
  });
}

maxsolv_status maxsolv_class_at(const maxsolv_index* idx, size_t i, char** theta, int* dim_b) {
  return guarded([&] {
    need(idx, "idx");
    const auto classes = enumerate_classes(idx->idx, idx->context());
    if (i >= classes.size()) throw Error(ErrorCode::argument, "class index out of range");
    const auto rrs = restricted_system(idx->idx);
    if (theta) *theta = dup(theta_string(rrs, classes[i].theta));
    if (dim_b) *dim_b = classes[i].dim_B;
    return MAXSOLV_OK;
  });
}

maxsolv_status maxsolv_conjugate(const maxsolv_index* idx, const char* theta1, const char* slot1,
                                 const char* theta2, const char* slot2, maxsolv_verdict* verdict) {
  return guarded([&] {
    need(idx, "idx");
    need(theta1, "theta1");
    need(theta2, "theta2");
    need(verdict, "verdict");
    const auto rrs = restricted_system(idx->idx);
    auto d1 = describe_class(idx->idx, rrs, parse_theta(rrs, theta1), idx->context());
    auto d2 = describe_class(idx->idx, rrs, parse_theta(rrs, theta2), idx->context());
    d1.torus_slot = slot1 ? slot1 : "";
    d2.torus_slot = slot2 ? slot2 : "";
    switch (conjugate_classes(idx->idx, d1, d2).verdict) {
      case Conjugacy::conjugate: *verdict = MAXSOLV_CONJUGATE; break;
      case Conjugacy::not_conjugate: *verdict = MAXSOLV_NOT_CONJUGATE; break;
      case Conjugacy::conditional: *verdict = MAXSOLV_CONDITIONAL; break;
    }
    return MAXSOLV_OK;
  });
}

maxsolv_status maxsolv_membership(const maxsolv_index* idx, const char* type, char** theta, int* dim_b) {
  return guarded([&] {
    need(idx, "idx");
    need(type, "type");
    const auto rrs = restricted_system(idx->idx);
    const auto r = membership_report(idx->idx, parse_theta(rrs, type), idx->context());
    if (theta) *theta = dup(theta_string(rrs, r.family.theta));
    if (dim_b) *dim_b = r.family.dim_B;
    return MAXSOLV_OK;
  });
}

maxsolv_status maxsolv_verify(const maxsolv_index* idx, int* certified) {
  return guarded([&] {
    need(idx, "idx");
    need(certified, "certified");
    *certified = verify_index(idx->idx, idx->context()).ok() ? 1 : 0;
    return MAXSOLV_OK;
  });
}

maxsolv_status maxsolv_report(const maxsolv_index* idx, const char* command, const char* const* options,
                              int json, char** out) {
  return guarded([&] {
    need(command, "command");
    need(out, "out");
    *out = nullptr;
    std::map<std::string, std::string> opts;
    for (auto p = options; p && *p; ++p) {
      const std::string kv = *p;
      const auto eq = kv.find('=');
      if (eq == std::string::npos) throw Error(ErrorCode::argument, "option '" + kv + "' is not key=value");
      opts[kv.substr(0, eq)] = kv.substr(eq + 1);
    }
    const auto rep = idx ? run_report(&idx->idx, command, opts, idx->context())
                         : run_report(nullptr, command, opts);
    *out = dup(json ? rep.json() : rep.tsv());
    if (rep.status != ErrorCode::ok)
      return fail(rep.status, "certification failed for command '" + std::string(command) + "'");
    return MAXSOLV_OK;
  });
}

}  // extern "C"
