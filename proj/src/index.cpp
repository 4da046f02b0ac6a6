#include "index.hpp"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <set>
#include <sstream>

namespace maxsolv {

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_refs(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',' || c == ' ' || c == '\t') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

std::vector<std::size_t> parse_tau(const CartanMatrix& m, const std::string& text) {
  const std::size_t n = m.size();
  std::vector<std::size_t> tau(n);
  for (std::size_t i = 0; i < n; ++i) tau[i] = i;
  std::string t = trim(text);
  if (t.empty() || t == "id" || t == "()") return tau;
  std::vector<bool> moved(n, false);
  std::size_t pos = 0;
  while (pos < t.size()) {
    if (std::isspace(static_cast<unsigned char>(t[pos]))) {
      ++pos;
      continue;
    }
    if (t[pos] != '(') throw Error(ErrorCode::parse, "tau: expected '(' in '" + t + "'");
    auto close = t.find(')', pos);
    if (close == std::string::npos) throw Error(ErrorCode::parse, "tau: unbalanced '('");
    auto refs = split_refs(t.substr(pos + 1, close - pos - 1));
    std::vector<std::size_t> cyc;
    for (const auto& r : refs) cyc.push_back(resolve_node(m, r));
    for (std::size_t k = 0; k < cyc.size(); ++k) {
      if (moved[cyc[k]])
        throw Error(ErrorCode::parse, "tau: node " + m.labels()[cyc[k]] + " appears twice");
      moved[cyc[k]] = true;
      tau[cyc[k]] = cyc[(k + 1) % cyc.size()];
    }
    pos = close + 1;
  }
  return tau;
}

FieldMode parse_field(const std::string& s) {
  if (s == "closed" || s == "algebraically_closed") return FieldMode::algebraically_closed;
  if (s == "real") return FieldMode::real;
  if (s == "oracle") return FieldMode::oracle;
  throw Error(ErrorCode::parse, "field must be closed, real or oracle (got '" + s + "')");
}

}  // namespace

const char* field_mode_name(FieldMode m) {
  switch (m) {
    case FieldMode::algebraically_closed: return "closed";
    case FieldMode::real: return "real";
    case FieldMode::oracle: return "oracle";
  }
  return "?";
}

std::size_t resolve_node(const CartanMatrix& m, const std::string& ref) {
  if (auto k = m.find_label(ref)) return *k;
  if (!ref.empty() && std::all_of(ref.begin(), ref.end(), ::isdigit)) {
    std::size_t k = std::stoul(ref);
    if (k >= 1 && k <= m.size()) return k - 1;
  }
  throw Error(ErrorCode::bad_label, "unknown node '" + ref + "'");
}

NodeList SatakeIndex::white_nodes() const {
  NodeList out;
  for (std::size_t i = 0; i < rank(); ++i)
    if (!black(i)) out.push_back(i);
  return out;
}

NodeList SatakeIndex::black_nodes() const {
  NodeList out;
  for (std::size_t i = 0; i < rank(); ++i)
    if (black(i)) out.push_back(i);
  return out;
}

bool SatakeIndex::split() const {
  for (std::size_t i = 0; i < rank(); ++i)
    if (black(i) || tau[i] != i) return false;
  return true;
}

SatakeIndex SatakeIndex::sub(const NodeList& nodes) const {
  SatakeIndex out;
  out.absolute = absolute.sub(nodes);
  out.mode = mode;
  for (std::size_t k = 0; k < nodes.size(); ++k) {
    out.color.push_back(color[nodes[k]]);
    auto it = std::find(nodes.begin(), nodes.end(), tau[nodes[k]]);
    if (it == nodes.end()) throw Error(ErrorCode::internal, "sub-index nodes not tau-stable");
    out.tau.push_back(static_cast<std::size_t>(it - nodes.begin()));
  }
  return out;
}

SatakeIndex SatakeIndex::split_of(const CartanMatrix& cartan, FieldMode mode) {
  SatakeIndex out;
  out.absolute = cartan;
  out.color.assign(cartan.size(), Color::white);
  out.tau.resize(cartan.size());
  for (std::size_t i = 0; i < cartan.size(); ++i) out.tau[i] = i;
  out.mode = mode;
  return out;
}

std::string SatakeIndex::coloring_string() const {
  std::string s;
  for (auto c : color) s += c == Color::black ? 'b' : 'w';
  return s;
}

std::string SatakeIndex::tau_cycles() const {
  std::string out;
  std::vector<bool> done(rank(), false);
  for (std::size_t i = 0; i < rank(); ++i) {
    if (done[i] || tau[i] == i) continue;
    out += "(";
    std::size_t j = i;
    bool first = true;
    while (!done[j]) {
      done[j] = true;
      out += (first ? "" : " ") + absolute.labels()[j];
      first = false;
      j = tau[j];
    }
    out += ")";
  }
  return out.empty() ? "id" : out;
}

std::string SatakeIndex::canonical() const {
  std::ostringstream os;
  os << "type: " << (rank() ? type_string(absolute) : std::string("-")) << "\n";
  os << "labels:";
  for (const auto& l : absolute.labels()) os << " " << l;
  os << "\nblack:";
  for (auto b : black_nodes()) os << " " << absolute.labels()[b];
  os << "\ntau: " << tau_cycles() << "\nfield: " << field_mode_name(mode) << "\n";
  return os.str();
}

std::string SatakeIndex::digest() const {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : canonical()) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << h;
  return os.str();
}

ValidationReport validate_index(const SatakeIndex& idx) {
  const std::size_t n = idx.rank();
  auto fail = [](ErrorCode c, std::string msg, std::string w = {}) {
    return ValidationReport{false, c, std::move(msg), std::move(w)};
  };
  if (idx.color.size() != n || idx.tau.size() != n)
    return fail(ErrorCode::parse, "coloring or tau has the wrong length");
  try {
    idx.absolute.check_finite_type();
  } catch (const Error& e) {
    return fail(e.code(), e.what(), e.witness());
  }
  std::vector<bool> hit(n, false);
  for (auto t : idx.tau) {
    if (t >= n || hit[t]) return fail(ErrorCode::tau_not_involution, "tau is not a permutation");
    hit[t] = true;
  }
  const auto& lab = idx.absolute.labels();
  for (std::size_t i = 0; i < n; ++i)
    if (idx.tau[idx.tau[i]] != i)
      return fail(ErrorCode::tau_not_involution, "tau is not an involution", lab[i]);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (idx.absolute(i, j) != idx.absolute(idx.tau[i], idx.tau[j]))
        return fail(ErrorCode::tau_not_automorphism, "tau does not preserve the Cartan matrix",
                    lab[i] + "," + lab[j]);
  for (std::size_t i = 0; i < n; ++i)
    if (idx.color[i] != idx.color[idx.tau[i]])
      return fail(ErrorCode::tau_breaks_coloring, "tau breaks coloring",
                  lab[i] + " -> " + lab[idx.tau[i]]);
  if (idx.mode == FieldMode::algebraically_closed && !idx.split())
    return fail(ErrorCode::closed_mode_not_split,
                "closed field mode requires all nodes white and tau = id");
  try {
    idx.absolute.sub(idx.black_nodes()).check_finite_type();
  } catch (const Error& e) {
    return fail(ErrorCode::not_finite_type, "anisotropic kernel is not of finite type",
                e.witness());
  }
  return {};
}

void require_valid(const SatakeIndex& idx) {
  auto r = validate_index(idx);
  if (!r.valid) throw Error(r.code, r.message, r.witness);
}

SatakeIndex parse_index(const std::string& text) {
  std::map<std::string, std::string> dir;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    auto colon = line.find(':');
    if (colon == std::string::npos)
      throw Error(ErrorCode::parse, "line " + std::to_string(lineno) + ": expected 'key: value'");
    std::string key = trim(line.substr(0, colon));
    std::transform(key.begin(), key.end(), key.begin(), ::tolower);
    if (key != "type" && key != "black" && key != "tau" && key != "field" && key != "name")
      throw Error(ErrorCode::parse, "line " + std::to_string(lineno) + ": unknown directive '" +
                                        key + "'");
    if (!dir.emplace(key, trim(line.substr(colon + 1))).second)
      throw Error(ErrorCode::parse, "duplicate directive '" + key + "'");
  }
  if (!dir.count("type")) throw Error(ErrorCode::parse, "missing 'type:' directive");
  SatakeIndex idx;
  idx.absolute = CartanMatrix::parse_type(dir["type"]);
  const std::size_t n = idx.absolute.size();
  idx.color.assign(n, Color::white);
  std::string black = dir.count("black") ? dir["black"] : "";
  if (black != "none" && black != "-")
    for (const auto& ref : split_refs(black)) idx.color[resolve_node(idx.absolute, ref)] = Color::black;
  idx.tau = parse_tau(idx.absolute, dir.count("tau") ? dir["tau"] : "id");
  idx.mode = dir.count("field") ? parse_field(dir["field"]) : FieldMode::real;
  if (dir.count("name")) idx.name = dir["name"];
  return idx;
}

SatakeIndex load_index(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw Error(ErrorCode::io, "cannot read index file '" + path + "'");
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_index(ss.str());
}

std::string format_index(const SatakeIndex& idx) {
  std::ostringstream os;
  if (!idx.name.empty()) os << "name: " << idx.name << "\n";
  os << "type: " << type_string(idx.absolute) << "\n";
  os << "black:";
  bool first = true;
  for (auto b : idx.black_nodes()) {
    os << (first ? " " : ", ") << idx.absolute.labels()[b];
    first = false;
  }
  os << "\ntau: " << idx.tau_cycles() << "\nfield: " << field_mode_name(idx.mode) << "\n";
  return os.str();
}

// ---------------------------------------------------------------- restriction

IntVec RestrictedRootSystem::restrict(const IntVec& abs) const {
  IntVec out(classes.size(), 0);
  for (std::size_t i = 0; i < abs.size(); ++i)
    if (node_class[i] >= 0) out[static_cast<std::size_t>(node_class[i])] += abs[i];
  return out;
}

std::optional<std::size_t> RestrictedRootSystem::find_simple(const std::string& label) const {
  auto it = std::find(simple_labels.begin(), simple_labels.end(), label);
  if (it == simple_labels.end()) return std::nullopt;
  return static_cast<std::size_t>(it - simple_labels.begin());
}

RestrictedRootSystem restricted_system(const SatakeIndex& idx) {
  require_valid(idx);
  RestrictedRootSystem out;
  out.absolute = RootSystem::generate(idx.absolute);
  const std::size_t n = idx.rank();
  out.node_class.assign(n, -1);
  for (std::size_t i = 0; i < n; ++i) {
    if (idx.black(i) || out.node_class[i] >= 0) continue;
    const int k = static_cast<int>(out.classes.size());
    NodeList cls{i};
    out.node_class[i] = k;
    if (idx.tau[i] != i) {
      cls.push_back(idx.tau[i]);
      out.node_class[idx.tau[i]] = k;
    }
    std::sort(cls.begin(), cls.end());
    out.classes.push_back(std::move(cls));
  }
  for (std::size_t k = 0; k < out.classes.size(); ++k)
    out.simple_labels.push_back("a" + std::to_string(k + 1));

  std::set<IntVec> restricted;
  for (const auto& r : out.absolute.roots()) {
    IntVec v = out.restrict(r.coords());
    if (std::all_of(v.begin(), v.end(), [](int x) { return x == 0; })) continue;
    ++out.multiplicity[v];
    restricted.insert(v);
  }
  out.base = RootSystem::from_roots({restricted.begin(), restricted.end()}, out.simple_labels);
  return out;
}

std::vector<IndexFactor> components(const SatakeIndex& idx) {
  std::vector<IndexFactor> out;
  auto comps = idx.absolute.components();
  std::vector<bool> done(comps.size(), false);
  auto comp_of = [&](std::size_t node) {
    for (std::size_t c = 0; c < comps.size(); ++c)
      if (std::binary_search(comps[c].begin(), comps[c].end(), node)) return c;
    return comps.size();
  };
  for (std::size_t c = 0; c < comps.size(); ++c) {
    if (done[c]) continue;
    done[c] = true;
    std::size_t partner = comp_of(idx.tau[comps[c].front()]);
    NodeList nodes = comps[c];
    bool complex_type = false;
    if (partner != c) {
      done[partner] = true;
      nodes.insert(nodes.end(), comps[partner].begin(), comps[partner].end());
      std::sort(nodes.begin(), nodes.end());
      complex_type = true;
    }
    out.push_back({idx.sub(nodes), nodes, complex_type});
  }
  return out;
}

}  // namespace maxsolv
