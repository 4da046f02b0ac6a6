#include "admissible.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>

namespace maxsolv {

namespace {

struct ExceptionalForm {
  const char* tag;
  SimpleType type;
  const char* coloring;
  std::vector<std::size_t> tau;  // 1-based, empty = id
  int compact_rank;
  int real_rank;
};

// Maximal compact subalgebras: E6(6) sp(4); E6(2) su(6)+su(2); E6(-14)
// so(10)+so(2); E6(-26) f4; E7(7) su(8); E7(-5) so(12)+su(2); E7(-25)
// e6+so(2); E8(8) so(16); E8(-24) e7+su(2); F4(4) sp(3)+su(2); F4(-20)
// so(9); G2(2) su(2)+su(2).
const std::vector<ExceptionalForm>& exceptional_forms() {
  static const std::vector<ExceptionalForm> forms = {
      {"E6(6)", {'E', 6}, "wwwwww", {}, 4, 6},
      {"E6(2)", {'E', 6}, "wwwwww", {6, 2, 5, 4, 3, 1}, 6, 4},
      {"E6(-14)", {'E', 6}, "wwbbbw", {6, 2, 5, 4, 3, 1}, 6, 2},
      {"E6(-26)", {'E', 6}, "wbbbbw", {}, 4, 2},
      {"E7(7)", {'E', 7}, "wwwwwww", {}, 7, 7},
      {"E7(-5)", {'E', 7}, "wbwwbwb", {}, 7, 4},
      {"E7(-25)", {'E', 7}, "wbbbbww", {}, 7, 3},
      {"E8(8)", {'E', 8}, "wwwwwwww", {}, 8, 8},
      {"E8(-24)", {'E', 8}, "wbbbbwww", {}, 8, 4},
      {"F4(4)", {'F', 4}, "wwww", {}, 4, 4},
      {"F4(-20)", {'F', 4}, "bbbw", {}, 4, 1},
      {"G2(2)", {'G', 2}, "ww", {}, 2, 2},
  };
  return forms;
}

const ExceptionalForm* find_exceptional(const std::string& tag) {
  for (const auto& f : exceptional_forms())
    if (tag == f.tag) return &f;
  return nullptr;
}

std::vector<std::size_t> identity_perm(std::size_t n) {
  std::vector<std::size_t> t(n);
  for (std::size_t i = 0; i < n; ++i) t[i] = i;
  return t;
}

CatalogEntry make_entry(Family f, std::vector<int> params, SimpleType type, std::string coloring,
                        std::vector<std::size_t> tau = {}) {
  CatalogEntry e;
  e.label.family = f;
  e.label.params = std::move(params);
  e.label.rank = type.rank;
  e.type = type;
  e.coloring = std::move(coloring);
  e.tau = tau.empty() ? identity_perm(static_cast<std::size_t>(type.rank)) : std::move(tau);
  if (f != Family::exceptional_id) e.label.compact_rank = expected_compact_rank(e.label);
  return e;
}

std::vector<CatalogEntry> generate_catalog(int max_rank) {
  std::vector<CatalogEntry> out;
  auto flip = [](int l) {
    std::vector<std::size_t> t(static_cast<std::size_t>(l));
    for (int i = 0; i < l; ++i) t[static_cast<std::size_t>(i)] = static_cast<std::size_t>(l - 1 - i);
    return t;
  };
  auto fork_swap = [](int l) {
    auto t = identity_perm(static_cast<std::size_t>(l));
    std::swap(t[static_cast<std::size_t>(l - 2)], t[static_cast<std::size_t>(l - 1)]);
    return t;
  };
  // A_l
  for (int n = 2; n <= max_rank + 1; ++n)
    out.push_back(make_entry(Family::sl_R, {n}, {'A', n - 1}, std::string(n - 1, 'w')));
  for (int n = 2; 2 * n - 1 <= max_rank; ++n) {
    std::string c;
    for (int i = 1; i <= 2 * n - 1; ++i) c += i % 2 ? 'b' : 'w';
    out.push_back(make_entry(Family::sl_H, {n}, {'A', 2 * n - 1}, c));
  }
  for (int m = 3; m <= max_rank + 1; ++m) {
    const int l = m - 1;
    for (int q = 1; 2 * q <= m; ++q) {
      std::string c(static_cast<std::size_t>(l), 'b');
      for (int i = 1; i <= q; ++i) c[i - 1] = c[l - i] = 'w';
      out.push_back(make_entry(Family::su_pq, {m - q, q}, {'A', l}, c, flip(l)));
    }
  }
  // B_l: so(p,q), p+q = 2l+1
  for (int l = 2; l <= max_rank; ++l)
    for (int q = 1; q <= l; ++q) {
      std::string c(static_cast<std::size_t>(l), 'b');
      for (int i = 0; i < q; ++i) c[i] = 'w';
      out.push_back(make_entry(Family::so_pq, {2 * l + 1 - q, q}, {'B', l}, c));
    }
  // C_l
  for (int l = 3; l <= max_rank; ++l) {
    out.push_back(make_entry(Family::sp_R, {l}, {'C', l}, std::string(l, 'w')));
    for (int q = 1; 2 * q <= l; ++q) {
      std::string c(static_cast<std::size_t>(l), 'b');
      for (int i = 2; i <= 2 * q; i += 2) c[i - 1] = 'w';
      out.push_back(make_entry(Family::sp_pq, {l - q, q}, {'C', l}, c));
    }
  }
  // D_l: so(p,q), p+q = 2l; the *-action swaps the fork when l-q is odd.
  for (int l = 4; l <= max_rank; ++l) {
    for (int q = 1; q <= l; ++q) {
      std::string c(static_cast<std::size_t>(l), 'b');
      if (q >= l - 1)
        c.assign(static_cast<std::size_t>(l), 'w');
      else
        for (int i = 0; i < q; ++i) c[i] = 'w';
      auto tau = (l - q) % 2 ? fork_swap(l) : identity_perm(static_cast<std::size_t>(l));
      out.push_back(make_entry(Family::so_pq, {2 * l - q, q}, {'D', l}, c, tau));
    }
    std::string c(static_cast<std::size_t>(l), 'w');
    for (int i = 1; i <= (l % 2 ? l - 2 : l - 1); i += 2) c[i - 1] = 'b';
    out.push_back(make_entry(Family::so_star, {l}, {'D', l}, c,
                             l % 2 ? fork_swap(l) : identity_perm(static_cast<std::size_t>(l))));
  }
  for (const auto& f : exceptional_forms()) {
    if (f.type.rank > max_rank) continue;
    std::vector<std::size_t> tau;
    for (auto t : f.tau) tau.push_back(t - 1);
    auto e = make_entry(Family::exceptional_id, {}, f.type, f.coloring, tau);
    e.label.tag = f.tag;
    e.label.compact_rank = f.compact_rank;
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<std::string> tokens(const std::string& line) {
  std::istringstream is(line);
  std::vector<std::string> out;
  std::string t;
  while (is >> t) out.push_back(t);
  return out;
}

}  // namespace

const char* family_name(Family f) {
  switch (f) {
    case Family::sl_R: return "sl_R";
    case Family::sl_H: return "sl_H";
    case Family::su_pq: return "su_pq";
    case Family::so_pq: return "so_pq";
    case Family::so_star: return "so_star";
    case Family::sp_R: return "sp_R";
    case Family::sp_pq: return "sp_pq";
    case Family::compact: return "compact";
    case Family::complex_type: return "complex_type";
    case Family::exceptional_id: return "exceptional_id";
  }
  return "?";
}

Family parse_family(const std::string& s) {
  for (auto f : {Family::sl_R, Family::sl_H, Family::su_pq, Family::so_pq, Family::so_star,
                 Family::sp_R, Family::sp_pq, Family::compact, Family::complex_type,
                 Family::exceptional_id})
    if (s == family_name(f)) return f;
  throw Error(ErrorCode::catalog, "unknown real-form family '" + s + "'");
}

std::string RealFormLabel::params_string() const {
  if (family == Family::exceptional_id || family == Family::compact || family == Family::complex_type)
    return tag;
  std::string out;
  for (int p : params) out += (out.empty() ? "" : ",") + std::to_string(p);
  return out.empty() ? "-" : out;
}

std::string RealFormLabel::name() const {
  auto p = [&](std::size_t i) { return std::to_string(params.at(i)); };
  switch (family) {
    case Family::sl_R: return "sl(" + p(0) + ",R)";
    case Family::sl_H: return "sl(" + p(0) + ",H)";
    case Family::su_pq: return "su(" + p(0) + "," + p(1) + ")";
    case Family::so_pq: return "so(" + p(0) + "," + p(1) + ")";
    case Family::so_star: return "so*(" + std::to_string(2 * params.at(0)) + ")";
    case Family::sp_R: return "sp(" + std::to_string(2 * params.at(0)) + ",R)";
    case Family::sp_pq: return "sp(" + p(0) + "," + p(1) + ")";
    case Family::compact: return "compact(" + tag + ")";
    case Family::complex_type: return "complex(" + tag + ")";
    case Family::exceptional_id: return tag;
  }
  return "?";
}

int expected_compact_rank(const RealFormLabel& l) {
  auto p = [&](std::size_t i) { return l.params.at(i); };
  switch (l.family) {
    case Family::sl_R: return p(0) / 2;            // so(n)
    case Family::sl_H: return p(0);                // sp(n)
    case Family::su_pq: return p(0) + p(1) - 1;    // s(u(p)+u(q))
    case Family::so_pq: return p(0) / 2 + p(1) / 2;  // so(p)+so(q)
    case Family::so_star: return p(0);             // u(n)
    case Family::sp_R: return p(0);               // u(n)
    case Family::sp_pq: return p(0) + p(1);        // sp(p)+sp(q)
    case Family::compact: return l.rank;
    case Family::complex_type: return l.rank / 2;
    case Family::exceptional_id: {
      auto* f = find_exceptional(l.tag);
      if (!f) throw Error(ErrorCode::catalog, "unknown exceptional form " + l.tag);
      return f->compact_rank;
    }
  }
  return 0;
}

int expected_real_rank(const RealFormLabel& l) {
  auto p = [&](std::size_t i) { return l.params.at(i); };
  switch (l.family) {
    case Family::sl_R: return p(0) - 1;
    case Family::sl_H: return p(0) - 1;
    case Family::su_pq: return std::min(p(0), p(1));
    case Family::so_pq: return std::min(p(0), p(1));
    case Family::so_star: return p(0) / 2;
    case Family::sp_R: return p(0);
    case Family::sp_pq: return std::min(p(0), p(1));
    case Family::compact: return 0;
    case Family::complex_type: return l.rank / 2;
    case Family::exceptional_id: {
      auto* f = find_exceptional(l.tag);
      if (!f) throw Error(ErrorCode::catalog, "unknown exceptional form " + l.tag);
      return f->real_rank;
    }
  }
  return 0;
}

SatakeIndex CatalogEntry::index() const {
  SatakeIndex idx;
  idx.absolute = CartanMatrix::of_type(type);
  for (char c : coloring) idx.color.push_back(c == 'b' ? Color::black : Color::white);
  idx.tau = tau;
  idx.mode = FieldMode::real;
  idx.name = label.name();
  return idx;
}

std::string CatalogEntry::record() const {
  std::ostringstream os;
  os << family_name(label.family) << " " << label.params_string() << " " << type.str() << " "
     << coloring << " ";
  bool id = true;
  for (std::size_t i = 0; i < tau.size(); ++i) id &= tau[i] == i;
  if (id) {
    os << "id";
  } else {
    for (std::size_t i = 0; i < tau.size(); ++i) os << (i ? "," : "") << tau[i] + 1;
  }
  os << " " << label.rank << " " << label.compact_rank;
  return os.str();
}

const RealFormCatalog& RealFormCatalog::bundled() {
  static const RealFormCatalog cat(generate_catalog(8));
  return cat;
}

RealFormCatalog RealFormCatalog::parse(const std::string& text) {
  std::vector<CatalogEntry> entries;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    auto t = tokens(line);
    if (t.empty()) continue;
    auto bad = [&](const std::string& why) {
      return Error(ErrorCode::catalog, "catalog line " + std::to_string(lineno) + ": " + why);
    };
    if (t.size() != 7) throw bad("expected 7 fields");
    CatalogEntry e;
    e.label.family = parse_family(t[0]);
    if (e.label.family == Family::exceptional_id) {
      e.label.tag = t[1];
    } else if (t[1] != "-") {
      std::stringstream ps(t[1]);
      std::string x;
      while (std::getline(ps, x, ',')) e.label.params.push_back(std::stoi(x));
    }
    auto m = CartanMatrix::parse_type(t[2]);
    if (m.components().size() != 1) throw bad("type must be connected");
    e.type = identify_type(m).type;
    if (e.type.str() != t[2]) throw bad("type must use canonical Bourbaki name");
    e.coloring = t[3];
    if (e.coloring.size() != m.size() || e.coloring.find_first_not_of("wb") != std::string::npos)
      throw bad("coloring must have one w/b per node");
    if (t[4] == "id") {
      e.tau = identity_perm(m.size());
    } else {
      std::stringstream ts(t[4]);
      std::string x;
      while (std::getline(ts, x, ',')) e.tau.push_back(std::stoul(x) - 1);
      if (e.tau.size() != m.size()) throw bad("tau must list one image per node");
    }
    e.label.rank = std::stoi(t[5]);
    e.label.compact_rank = std::stoi(t[6]);
    if (e.label.rank != static_cast<int>(m.size())) throw bad("rank does not match type");
    if (e.label.compact_rank < 0 || e.label.compact_rank > e.label.rank)
      throw bad("compact_rank out of range");
    auto v = validate_index(e.index());
    if (!v.valid) throw bad(v.message);
    entries.push_back(std::move(e));
  }
  return RealFormCatalog(std::move(entries));
}

RealFormCatalog RealFormCatalog::load(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw Error(ErrorCode::io, "cannot read catalog '" + path + "'");
  std::stringstream ss;
  ss << f.rdbuf();
  return parse(ss.str());
}

const RealFormCatalog& RealFormCatalog::active() {
  static std::mutex mu;
  static std::map<std::string, std::unique_ptr<RealFormCatalog>> loaded;
  const char* env = std::getenv("MAXSOLV_CATALOG");
  if (!env || !*env) return bundled();
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = loaded[env];
  if (!slot) slot = std::make_unique<RealFormCatalog>(load(env));
  return *slot;
}

const CatalogEntry* RealFormCatalog::find(const std::string& name) const {
  for (const auto& e : entries_)
    if (e.label.name() == name) return &e;
  return nullptr;
}

std::string RealFormCatalog::serialize() const {
  std::ostringstream os;
  os << "# family params type coloring tau rank compact_rank\n";
  for (const auto& e : entries_) os << e.record() << "\n";
  return os.str();
}

RealFormLabel recognize_real_form(const IndexFactor& f, const RealFormCatalog& catalog) {
  return recognize_real_form(f.index, f.complex_type, catalog);
}

RealFormLabel recognize_real_form(const SatakeIndex& factor, bool complex_type,
                                  const RealFormCatalog& catalog) {
  const auto comps = factor.absolute.components();
  const bool all_black = factor.white_nodes().empty();
  const bool all_white = factor.black_nodes().empty();
  RealFormLabel out;
  out.rank = static_cast<int>(factor.rank());
  if (complex_type) {
    if (comps.size() != 2) throw Error(ErrorCode::internal, "complex-type factor needs two components");
    auto t = identify_type(factor.absolute.sub(comps[0])).type;
    if (all_black) {
      out.family = Family::compact;
      out.tag = t.str() + "+" + t.str();
      out.compact_rank = out.rank;
      return out;
    }
    if (!all_white)
      throw Error(ErrorCode::unrecognized_index,
                  "unrecognized index: tau-swapped components with mixed coloring");
    out.family = Family::complex_type;
    out.tag = t.str();
    out.compact_rank = out.rank / 2;
    return out;
  }
  if (comps.size() != 1) throw Error(ErrorCode::internal, "factor is not connected");
  const auto matches = identify_type_all(factor.absolute);
  if (all_black) {
    out.family = Family::compact;
    out.tag = matches.front().type.str();
    out.compact_rank = out.rank;
    return out;
  }
  std::vector<const CatalogEntry*> hits;
  for (const auto& e : catalog.entries()) {
    if (e.type != matches.front().type) continue;
    for (const auto& m : matches) {
      bool ok = true;
      for (std::size_t k = 0; k < m.to_node.size() && ok; ++k) {
        const std::size_t node = m.to_node[k];
        ok = (e.coloring[k] == 'b') == factor.black(node);
        // Only the arrows between white nodes are part of a Satake diagram.
        if (ok && e.coloring[k] == 'w') ok = m.to_node[e.tau[k]] == factor.tau[node];
      }
      if (ok) {
        hits.push_back(&e);
        break;
      }
    }
  }
  if (hits.empty())
    throw Error(ErrorCode::unrecognized_index,
                "unrecognized index: no catalog entry matches " + type_string(factor.absolute) +
                    " coloring " + factor.coloring_string() + " tau " + factor.tau_cycles());
  for (const auto* h : hits)
    if (h->label.rank != hits.front()->label.rank ||
        h->label.compact_rank != hits.front()->label.compact_rank)
      throw Error(ErrorCode::unrecognized_index,
                  "ambiguous catalog match: " + hits.front()->label.name() + " vs " + h->label.name());
  return hits.front()->label;
}

AdmissibilityCertificate is_admissible(const SatakeIndex& idx, const RestrictedRootSystem& rrs,
                                       const ThetaSubset& theta, const AdmissibilityContext& ctx) {
  auto pd = parabolic(idx, rrs, theta);
  AdmissibilityCertificate cert;
  cert.theta = pd.theta;
  cert.mode = idx.mode;
  const SatakeIndex& levi = pd.levi_subindex;
  switch (idx.mode) {
    case FieldMode::algebraically_closed:
      cert.admissible = levi.rank() == 0;
      cert.reason = cert.admissible ? "trivial derived Levi"
                                    : "derived Levi of rank " + std::to_string(levi.rank()) +
                                          " has no nontrivial anisotropic torus over k-bar";
      break;
    case FieldMode::real: {
      const RealFormCatalog& cat = ctx.catalog ? *ctx.catalog : RealFormCatalog::active();
      cert.admissible = true;
      for (const auto& f : components(levi)) {
        FactorVerdict v{recognize_real_form(f, cat), false};
        v.equal_rank = v.label.equal_rank();
        cert.admissible &= v.equal_rank;
        if (!v.equal_rank && cert.reason.empty())
          cert.reason = v.label.name() + ": rank " + std::to_string(v.label.rank) +
                        " != compact_rank " + std::to_string(v.label.compact_rank);
        cert.per_factor.push_back(std::move(v));
      }
      if (cert.admissible)
        cert.reason = levi.rank() == 0 ? "trivial derived Levi" : "every Levi factor has equal rank";
      break;
    }
    case FieldMode::oracle:
      // a trivial Levi needs no anisotropic torus; never ask the oracle
      if (levi.rank() == 0) {
        cert.admissible = true;
        cert.reason = "trivial derived Levi";
        break;
      }
      if (!ctx.oracle)
        throw Error(ErrorCode::missing_oracle, "oracle field mode requires an admissibility oracle");
      cert.oracle_verdict = ctx.oracle(idx, pd.theta, levi);
      cert.admissible = *cert.oracle_verdict;
      cert.reason = cert.admissible ? "oracle: admissible" : "oracle: not admissible";
      break;
  }
  return cert;
}

}  // namespace maxsolv
