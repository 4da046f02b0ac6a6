#include "report.hpp"

#include "liealg.hpp"

#include <json.hpp>

#include <sstream>

namespace maxsolv {

namespace {

std::string coords(const IntVec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

std::string factor_list(const std::vector<RealFormLabel>& fs) {
  std::vector<std::string> names;
  for (const auto& f : fs) names.push_back(f.name());
  return names.empty() ? "-" : join(names, "+");
}

std::string levi_type(const SatakeIndex& levi) {
  return levi.rank() ? type_string(levi.absolute) + " [" + levi.coloring_string() + "]" : "-";
}

const std::string& option(const std::map<std::string, std::string>& opts, const std::string& key) {
  auto it = opts.find(key);
  if (it == opts.end()) throw Error(ErrorCode::argument, "missing option --" + key);
  return it->second;
}

std::string option_or(const std::map<std::string, std::string>& opts, const std::string& key,
                      const std::string& fallback) {
  auto it = opts.find(key);
  return it == opts.end() ? fallback : it->second;
}

void roots_report(Report& r, const SatakeIndex& idx, const RestrictedRootSystem& rrs) {
  r.meta.emplace_back("absolute_type", type_string(idx.absolute));
  r.meta.emplace_back("absolute_positive_roots", std::to_string(rrs.absolute.num_positive()));
  r.meta.emplace_back("k_rank", std::to_string(rrs.rank()));
  r.meta.emplace_back("restricted_reduced", yes_no(rrs.base.reduced()));
  Table abs{"absolute", {"root", "coords", "height", "restriction"}, {}};
  for (const auto& root : rrs.absolute.positives())
    abs.rows.push_back({root.str(idx.absolute.labels()), coords(root.coords()), std::to_string(root.height()),
                        coords(rrs.restrict(root.coords()))});
  Table res{"restricted", {"root", "coords", "multiplicity"}, {}};
  for (const auto& root : rrs.base.positives())
    res.rows.push_back({root.str(rrs.simple_labels), coords(root.coords()),
                        std::to_string(rrs.multiplicity.at(root.coords()))});
  r.tables.push_back(std::move(abs));
  r.tables.push_back(std::move(res));
}

void restrict_report(Report& r, const SatakeIndex& idx, const RestrictedRootSystem& rrs) {
  Table nodes{"nodes", {"node", "color", "tau", "class"}, {}};
  for (std::size_t i = 0; i < idx.rank(); ++i)
    nodes.rows.push_back({idx.absolute.labels()[i], idx.black(i) ? "black" : "white",
                          idx.absolute.labels()[idx.tau[i]],
                          rrs.node_class[i] < 0 ? "-" : rrs.simple_labels[rrs.node_class[i]]});
  Table cartan{"restricted_cartan", {"root"}, {}};
  for (const auto& l : rrs.simple_labels) cartan.columns.push_back(l);
  for (std::size_t i = 0; i < rrs.rank(); ++i) {
    std::vector<std::string> row{rrs.simple_labels[i]};
    for (std::size_t j = 0; j < rrs.rank(); ++j) row.push_back(std::to_string(rrs.base.cartan()(i, j)));
    cartan.rows.push_back(std::move(row));
  }
  Table mult{"multiplicities", {"root", "coords", "multiplicity"}, {}};
  for (const auto& root : rrs.base.positives())
    mult.rows.push_back({root.str(rrs.simple_labels), coords(root.coords()),
                         std::to_string(rrs.multiplicity.at(root.coords()))});
  r.meta.emplace_back("k_rank", std::to_string(rrs.rank()));
  r.meta.emplace_back("restricted_type",
                      rrs.rank() ? type_string(rrs.base.cartan()) + (rrs.base.reduced() ? "" : " (non-reduced)") : "-");
  r.tables.push_back(std::move(nodes));
  r.tables.push_back(std::move(cartan));
  r.tables.push_back(std::move(mult));
}

void parabolic_report(Report& r, const SatakeIndex& idx, const RestrictedRootSystem& rrs, const std::string& text) {
  const auto pd = parabolic(idx, rrs, parse_theta(rrs, text));
  r.meta.emplace_back("theta", theta_string(rrs, pd.theta));
  r.meta.emplace_back("dim_S_theta", std::to_string(pd.dim_S_theta));
  r.meta.emplace_back("levi", levi_type(pd.levi_subindex));
  r.meta.emplace_back("levi_absolute_rank", std::to_string(pd.levi_absolute_rank));
  r.meta.emplace_back("dim_A", std::to_string(pd.dim_A));
  r.meta.emplace_back("dim_nilradical", std::to_string(pd.dim_nilrad));
  r.meta.emplace_back("dim_B", std::to_string(dim_B(pd)));
  Table nil{"nilradical", {"root", "coords", "multiplicity"}, {}};
  for (const auto& [v, m] : pd.nilrad_restricted)
    nil.rows.push_back({Root(v).str(rrs.simple_labels), coords(v), std::to_string(m)});
  r.tables.push_back(std::move(nil));
}

void admissible_report(Report& r, const SatakeIndex& idx, const RestrictedRootSystem& rrs,
                       const AdmissibilityContext& ctx) {
  Table t{"admissibility", {"theta", "admissible", "levi", "factors", "reason"}, {}};
  std::size_t count = 0;
  for (const auto& theta : all_subsets(rrs.rank())) {
    const auto cert = is_admissible(idx, rrs, theta, ctx);
    count += cert.admissible;
    std::vector<RealFormLabel> labels;
    for (const auto& f : cert.per_factor) labels.push_back(f.label);
    t.rows.push_back({theta_string(rrs, theta), yes_no(cert.admissible),
                      levi_type(parabolic(idx, rrs, theta).levi_subindex), factor_list(labels), cert.reason});
  }
  r.meta.emplace_back("subsets", std::to_string(t.rows.size()));
  r.meta.emplace_back("admissible", std::to_string(count));
  r.tables.push_back(std::move(t));
}

void classify_report(Report& r, const SatakeIndex& idx, const RestrictedRootSystem& rrs,
                     const AdmissibilityContext& ctx) {
  const auto classes = enumerate_classes(idx, ctx);
  Table t{"classes", {"theta", "dim_B", "dim_S_theta", "dim_A", "dim_nilradical", "levi", "factors", "torus_slot"}, {}};
  for (const auto& d : classes)
    t.rows.push_back({theta_string(rrs, d.theta), std::to_string(d.dim_B), std::to_string(d.parabolic.dim_S_theta),
                      std::to_string(d.parabolic.dim_A), std::to_string(d.parabolic.dim_nilrad),
                      levi_type(d.parabolic.levi_subindex), factor_list(d.levi_factors),
                      d.torus_slot.empty() ? "unbound" : d.torus_slot});
  r.meta.emplace_back("classes", std::to_string(classes.size()));
  r.tables.push_back(std::move(t));
}

void types_report(Report& r, const SatakeIndex& idx, const RestrictedRootSystem& rrs,
                  const AdmissibilityContext& ctx) {
  const auto classes = type_classes(idx, ctx);
  Table t{"type_classes", {"class", "size", "admissible", "members"}, {}};
  for (std::size_t i = 0; i < classes.size(); ++i) {
    std::vector<std::string> members;
    for (const auto& m : classes[i].representatives) members.push_back("{" + theta_string(rrs, m) + "}");
    t.rows.push_back({std::to_string(i + 1), std::to_string(members.size()), yes_no(classes[i].admissible),
                      join(members, " ")});
  }
  r.meta.emplace_back("type_classes", std::to_string(classes.size()));
  r.tables.push_back(std::move(t));
}

void conjugate_report(Report& r, const SatakeIndex& idx, const RestrictedRootSystem& rrs,
                      const std::map<std::string, std::string>& opts, const AdmissibilityContext& ctx) {
  auto d1 = describe_class(idx, rrs, parse_theta(rrs, option(opts, "theta1")), ctx);
  auto d2 = describe_class(idx, rrs, parse_theta(rrs, option(opts, "theta2")), ctx);
  d1.torus_slot = option_or(opts, "slot1", "");
  d2.torus_slot = option_or(opts, "slot2", "");
  const auto v = conjugate_classes(idx, d1, d2);
  r.meta.emplace_back("theta1", theta_string(rrs, d1.theta));
  r.meta.emplace_back("theta2", theta_string(rrs, d2.theta));
  r.meta.emplace_back("verdict", conjugacy_name(v.verdict));
  r.meta.emplace_back("reason", v.reason);
  r.meta.emplace_back("weyl_conjugate", yes_no(v.weyl_conjugate));
}

void verify_report(Report& r, const SatakeIndex& idx, const RestrictedRootSystem& rrs,
                   const std::map<std::string, std::string>& options, const AdmissibilityContext& ctx) {
  const auto path = options.find("realization");
  const auto rep = path == options.end() ? verify_index(idx, ctx)
                                         : verify_realization(load_realization(path->second), idx, ctx);
  r.meta.emplace_back("realization", rep.form_id);
  r.meta.emplace_back("dimension", std::to_string(rep.dim));
  r.meta.emplace_back("jacobi", rep.jacobi ? "holds" : "FAILS");
  r.meta.emplace_back("multiplicities", rep.multiplicities_match ? "match" : "MISMATCH");
  if (rep.lemma1)
    r.meta.emplace_back("lemma1", rep.lemma1->verdict == Lemma1Verdict::holds ? "HOLDS" : "INCONCLUSIVE: " + rep.lemma1->reason);
  else
    r.meta.emplace_back("lemma1", "n/a (no compact Cartan)");
  r.meta.emplace_back("verdict", rep.ok() ? "CERTIFIED" : "FAILED");
  Table w{"weights", {"weight", "coords", "dim"}, {}};
  for (const auto& ws : rep.weights) {
    const bool zero = std::all_of(ws.restricted.begin(), ws.restricted.end(), [](int x) { return x == 0; });
    w.rows.push_back({zero ? "0" : Root(ws.restricted).str(rrs.simple_labels), coords(ws.restricted),
                      std::to_string(ws.space.dim())});
  }
  Table t{"certificates", {"theta", "dim_b", "dim_B", "derived_series", "solvable", "maximality", "adjunctions"}, {}};
  for (const auto& tv : rep.thetas) {
    std::vector<std::string> ds;
    for (auto d : tv.derived_dims) ds.push_back(std::to_string(d));
    t.rows.push_back({theta_string(rrs, tv.theta), std::to_string(tv.dim_b), std::to_string(tv.dim_B_expected),
                      join(ds, ">"), yes_no(tv.solvable), tv.certificate.maximal ? "MAXIMAL" : "NOT_MAXIMAL",
                      std::to_string(tv.certificate.tests.size())});
  }
  r.tables.push_back(std::move(w));
  r.tables.push_back(std::move(t));
  if (!rep.ok()) r.status = ErrorCode::certification_failed;
}

void catalog_report(Report& r) {
  const auto& cat = RealFormCatalog::active();
  Table t{"real_forms", {"name", "family", "params", "type", "coloring", "tau", "rank", "compact_rank", "equal_rank"}, {}};
  for (const auto& e : cat.entries()) {
    std::istringstream rec(e.record());
    std::string fam, params, type, coloring, tau;
    rec >> fam >> params >> type >> coloring >> tau;
    t.rows.push_back({e.label.name(), fam, params, type, coloring, tau, std::to_string(e.label.rank),
                      std::to_string(e.label.compact_rank), yes_no(e.label.equal_rank())});
  }
  Table lr{"realizations", {"form", "dimension", "index_type", "coloring", "compact_cartan"}, {}};
  for (const auto& x : realization_catalog())
    lr.rows.push_back({x.form_id, std::to_string(x.dim()), type_string(x.index.absolute), x.index.coloring_string(),
                       yes_no(!x.compact_cartan.empty())});
  r.meta.emplace_back("real_forms", std::to_string(t.rows.size()));
  r.meta.emplace_back("realizations", std::to_string(lr.rows.size()));
  r.tables.push_back(std::move(t));
  r.tables.push_back(std::move(lr));
}

}  // namespace

Report run_report(const SatakeIndex* idx, const std::string& command,
                  const std::map<std::string, std::string>& options, const AdmissibilityContext& ctx) {
  Report r;
  r.command = command;
  if (command == "catalog") {
    catalog_report(r);
    return r;
  }
  static const std::vector<std::string> known = {"roots", "restrict", "parabolic", "admissible",
                                                 "classify", "types", "conjugate", "verify"};
  if (std::find(known.begin(), known.end(), command) == known.end())
    throw Error(ErrorCode::argument, "unknown command '" + command + "'");
  if (!idx) throw Error(ErrorCode::argument, "command '" + command + "' needs an index");
  require_valid(*idx);
  r.digest = idx->digest();
  if (!idx->name.empty()) r.meta.emplace_back("index", idx->name);
  r.meta.emplace_back("type", type_string(idx->absolute));
  r.meta.emplace_back("coloring", idx->coloring_string());
  r.meta.emplace_back("tau", idx->tau_cycles());
  r.meta.emplace_back("field", field_mode_name(idx->mode));
  const auto rrs = restricted_system(*idx);
  if (command == "roots") roots_report(r, *idx, rrs);
  else if (command == "restrict") restrict_report(r, *idx, rrs);
  else if (command == "parabolic") parabolic_report(r, *idx, rrs, option(options, "theta"));
  else if (command == "admissible") admissible_report(r, *idx, rrs, ctx);
  else if (command == "classify") classify_report(r, *idx, rrs, ctx);
  else if (command == "types") types_report(r, *idx, rrs, ctx);
  else if (command == "conjugate") conjugate_report(r, *idx, rrs, options, ctx);
  else verify_report(r, *idx, rrs, options, ctx);
  return r;
}

std::string Report::tsv() const {
  std::ostringstream os;
  os << "# command: " << command << "\n";
  if (!digest.empty()) os << "# digest: " << digest << "\n";
  for (const auto& [k, v] : meta) os << "# " << k << ": " << v << "\n";
  for (const auto& t : tables) {
    os << "# table: " << t.name << "\n";
    os << join(t.columns, "\t") << "\n";
    for (const auto& row : t.rows) os << join(row, "\t") << "\n";
  }
  return os.str();
}

std::string Report::json() const {
  nlohmann::ordered_json doc;
  doc["command"] = command;
  if (!digest.empty()) doc["digest"] = digest;
  nlohmann::ordered_json m = nlohmann::ordered_json::object();
  for (const auto& [k, v] : meta) m[k] = v;
  doc["meta"] = m;
  nlohmann::ordered_json ts = nlohmann::ordered_json::object();
  for (const auto& t : tables) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& row : t.rows) {
      nlohmann::ordered_json obj;
      for (std::size_t c = 0; c < t.columns.size(); ++c) obj[t.columns[c]] = row[c];
      rows.push_back(obj);
    }
    ts[t.name] = rows;
  }
  doc["tables"] = ts;
  doc["status"] = error_code_name(status);
  return doc.dump(2) + "\n";
}

}  // namespace maxsolv
