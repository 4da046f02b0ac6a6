#include "rootsys.hpp"

#include "error.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
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

std::string vec_str(const IntVec& v) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ")";
  return os.str();
}

std::vector<SimpleType> candidate_types(int n) {
  std::vector<SimpleType> out{{'A', n}};
  if (n >= 2) out.push_back({'B', n});
  if (n >= 3) out.push_back({'C', n});
  if (n >= 4) out.push_back({'D', n});
  if (n >= 6 && n <= 8) out.push_back({'E', n});
  if (n == 4) out.push_back({'F', 4});
  if (n == 2) out.push_back({'G', 2});
  return out;
}

}  // namespace

CartanMatrix::CartanMatrix(std::vector<IntVec> entries, std::vector<std::string> labels)
    : a_(std::move(entries)), labels_(std::move(labels)) {
  const std::size_t n = labels_.size();
  if (a_.size() != n) throw Error(ErrorCode::parse, "cartan matrix / label count mismatch");
  for (std::size_t i = 0; i < n; ++i) {
    if (a_[i].size() != n) throw Error(ErrorCode::parse, "cartan matrix is not square");
    if (a_[i][i] != 2)
      throw Error(ErrorCode::not_finite_type, "diagonal entry " + labels_[i] + " is not 2");
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      if (a_[i][j] > 0)
        throw Error(ErrorCode::not_finite_type,
                    "positive off-diagonal entry at " + labels_[i] + "," + labels_[j]);
      if ((a_[i][j] == 0) != (a_[j][i] == 0))
        throw Error(ErrorCode::not_finite_type,
                    "asymmetric zero pattern at " + labels_[i] + "," + labels_[j]);
    }
  }
  std::set<std::string> seen(labels_.begin(), labels_.end());
  if (seen.size() != n) throw Error(ErrorCode::parse, "duplicate node labels");
}

CartanMatrix CartanMatrix::of_type(SimpleType t, const std::string& prefix) {
  const int n = t.rank;
  auto bad = [&] { return Error(ErrorCode::parse, "unsupported Dynkin type " + t.str()); };
  if (n < 1) throw bad();
  std::vector<IntVec> a(n, IntVec(n, 0));
  for (int i = 0; i < n; ++i) a[i][i] = 2;
  auto link = [&](int i, int j, int aij = -1, int aji = -1) {
    a[i - 1][j - 1] = aij;
    a[j - 1][i - 1] = aji;
  };
  switch (t.family) {
    case 'A':
      for (int i = 1; i < n; ++i) link(i, i + 1);
      break;
    case 'B':
      if (n < 2) throw bad();
      for (int i = 1; i < n - 1; ++i) link(i, i + 1);
      link(n - 1, n, -1, -2);
      break;
    case 'C':
      if (n < 2) throw bad();
      for (int i = 1; i < n - 1; ++i) link(i, i + 1);
      link(n - 1, n, -2, -1);
      break;
    case 'D':
      if (n < 3) throw bad();
      for (int i = 1; i < n - 1; ++i) link(i, i + 1);
      link(n - 2, n);
      break;
    case 'E':
      if (n < 6 || n > 8) throw bad();
      link(1, 3);
      link(2, 4);
      for (int i = 3; i < n; ++i) link(i, i + 1);
      break;
    case 'F':
      if (n != 4) throw bad();
      link(1, 2);
      link(2, 3, -1, -2);
      link(3, 4);
      break;
    case 'G':
      if (n != 2) throw bad();
      link(1, 2, -3, -1);
      break;
    default:
      throw bad();
  }
  std::vector<std::string> labels;
  for (int i = 1; i <= n; ++i) labels.push_back(prefix + "." + std::to_string(i));
  return CartanMatrix(std::move(a), std::move(labels));
}

CartanMatrix CartanMatrix::parse_type(const std::string& text) {
  std::vector<CartanMatrix> parts;
  std::map<std::string, int> seen;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, '+')) {
    tok = trim(tok);
    if (tok.size() < 2 || !std::isalpha(static_cast<unsigned char>(tok[0])))
      throw Error(ErrorCode::parse, "bad Dynkin type '" + tok + "'");
    SimpleType t{static_cast<char>(std::toupper(static_cast<unsigned char>(tok[0]))), 0};
    try {
      std::size_t used = 0;
      t.rank = std::stoi(tok.substr(1), &used);
      if (used != tok.size() - 1) throw std::invalid_argument("junk");
    } catch (const std::exception&) {
      throw Error(ErrorCode::parse, "bad Dynkin type '" + tok + "'");
    }
    const std::string name = t.str();
    int occurrence = ++seen[name];
    parts.push_back(of_type(t, occurrence == 1 ? name : name + "_" + std::to_string(occurrence)));
  }
  if (parts.empty()) throw Error(ErrorCode::parse, "empty Dynkin type");
  return direct_sum(parts);
}

CartanMatrix CartanMatrix::direct_sum(const std::vector<CartanMatrix>& parts) {
  std::size_t n = 0;
  for (const auto& p : parts) n += p.size();
  std::vector<IntVec> a(n, IntVec(n, 0));
  std::vector<std::string> labels;
  std::size_t off = 0;
  for (const auto& p : parts) {
    for (std::size_t i = 0; i < p.size(); ++i)
      for (std::size_t j = 0; j < p.size(); ++j) a[off + i][off + j] = p(i, j);
    labels.insert(labels.end(), p.labels().begin(), p.labels().end());
    off += p.size();
  }
  return CartanMatrix(std::move(a), std::move(labels));
}

std::optional<std::size_t> CartanMatrix::find_label(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - labels_.begin());
}

CartanMatrix CartanMatrix::sub(const NodeList& nodes) const {
  std::vector<IntVec> a(nodes.size(), IntVec(nodes.size(), 0));
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    labels.push_back(labels_[nodes[i]]);
    for (std::size_t j = 0; j < nodes.size(); ++j) a[i][j] = a_[nodes[i]][nodes[j]];
  }
  return CartanMatrix(std::move(a), std::move(labels));
}

std::vector<NodeList> CartanMatrix::components() const {
  const std::size_t n = size();
  std::vector<int> comp(n, -1);
  std::vector<NodeList> out;
  for (std::size_t s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    NodeList nodes{s};
    comp[s] = static_cast<int>(out.size());
    for (std::size_t k = 0; k < nodes.size(); ++k)
      for (std::size_t j = 0; j < n; ++j)
        if (comp[j] < 0 && a_[nodes[k]][j] != 0) {
          comp[j] = comp[s];
          nodes.push_back(j);
        }
    std::sort(nodes.begin(), nodes.end());
    out.push_back(std::move(nodes));
  }
  return out;
}

std::vector<Rational> CartanMatrix::symmetrizer() const {
  const std::size_t n = size();
  std::vector<Rational> d(n);
  std::vector<bool> set(n, false);
  for (const auto& comp : components()) {
    d[comp.front()] = Rational(1);
    set[comp.front()] = true;
    std::deque<std::size_t> queue{comp.front()};
    while (!queue.empty()) {
      auto i = queue.front();
      queue.pop_front();
      for (std::size_t j = 0; j < n; ++j) {
        if (j == i || a_[i][j] == 0) continue;
        Rational dj = d[i] * Rational(a_[i][j]) / Rational(a_[j][i]);
        if (!set[j]) {
          d[j] = dj;
          set[j] = true;
          queue.push_back(j);
        } else if (!(d[j] == dj)) {
          throw Error(ErrorCode::not_symmetrizable, "cartan matrix is not symmetrizable",
                      "cycle through " + labels_[i] + "," + labels_[j]);
        }
      }
    }
    // Normalize so the shortest root in each component has (a,a) = 2.
    Rational mn = d[comp.front()];
    for (auto i : comp) mn = std::min(mn, d[i]);
    for (auto i : comp) d[i] /= mn;
  }
  return d;
}

Rational CartanMatrix::inner(const IntVec& u, const IntVec& v) const {
  const auto d = symmetrizer();
  Rational acc;
  for (std::size_t i = 0; i < size(); ++i) {
    if (u[i] == 0) continue;
    for (std::size_t j = 0; j < size(); ++j)
      if (v[j] != 0 && a_[i][j] != 0) acc += d[i] * Rational(a_[i][j] * u[i] * v[j]);
  }
  return acc;
}

void CartanMatrix::check_finite_type() const {
  const std::size_t n = size();
  const auto d = symmetrizer();
  std::vector<std::vector<Rational>> b(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) b[i][j] = d[i] * Rational(a_[i][j]);
  auto form = [&](const std::vector<Rational>& u, const std::vector<Rational>& v) {
    Rational acc;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (!u[i].is_zero() && !v[j].is_zero()) acc += u[i] * b[i][j] * v[j];
    return acc;
  };
  // Gram-Schmidt in the symmetrized form; a nonpositive pivot is a witness.
  std::vector<std::vector<Rational>> u(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) u[i][i] = Rational(1);
  for (std::size_t k = 0; k < n; ++k) {
    Rational dk = form(u[k], u[k]);
    if (dk.sign() <= 0) {
      mpz_class den = 1;
      for (const auto& x : u[k]) den = lcm_den(den, x);
      std::ostringstream os;
      os << "(";
      for (std::size_t i = 0; i < n; ++i)
        os << (i ? "," : "") << (u[k][i] * Rational(mpq_class(den))).str();
      os << ") has norm " << (dk * Rational(mpq_class(den * den))).str();
      throw Error(ErrorCode::not_finite_type, "cartan matrix is not of finite type", os.str());
    }
    for (std::size_t j = k + 1; j < n; ++j) {
      Rational c = form(u[k], u[j]) / dk;
      if (c.is_zero()) continue;
      for (std::size_t i = 0; i < n; ++i) u[j][i] -= c * u[k][i];
    }
  }
}

std::vector<NodeList> cartan_isomorphisms(const CartanMatrix& a, const CartanMatrix& b,
                                          std::size_t limit) {
  std::vector<NodeList> out;
  const std::size_t n = a.size();
  if (b.size() != n) return out;
  NodeList p(n);
  std::vector<bool> used(n, false);
  auto rec = [&](auto&& self, std::size_t k) -> void {
    if (limit && out.size() >= limit) return;
    if (k == n) {
      out.push_back(p);
      return;
    }
    for (std::size_t c = 0; c < n; ++c) {
      if (used[c]) continue;
      bool ok = true;
      for (std::size_t j = 0; j < k && ok; ++j)
        ok = a(k, j) == b(c, p[j]) && a(j, k) == b(p[j], c);
      if (!ok) continue;
      used[c] = true;
      p[k] = c;
      self(self, k + 1);
      used[c] = false;
    }
  };
  rec(rec, 0);
  return out;
}

std::vector<TypeMatch> identify_type_all(const CartanMatrix& m) {
  if (m.size() == 0 || !m.connected())
    throw Error(ErrorCode::internal, "identify_type needs a connected matrix");
  for (const auto& t : candidate_types(static_cast<int>(m.size()))) {
    auto isos = cartan_isomorphisms(CartanMatrix::of_type(t), m);
    if (isos.empty()) continue;
    std::vector<TypeMatch> out;
    for (auto& p : isos) out.push_back({t, std::move(p)});
    return out;
  }
  m.check_finite_type();
  throw Error(ErrorCode::not_finite_type, "unidentified connected Dynkin diagram");
}

TypeMatch identify_type(const CartanMatrix& m) { return identify_type_all(m).front(); }

std::string type_string(const CartanMatrix& m) {
  std::vector<SimpleType> types;
  for (const auto& comp : m.components()) types.push_back(identify_type(m.sub(comp)).type);
  std::string out;
  for (const auto& t : types) out += (out.empty() ? "" : "+") + t.str();
  return out;
}

// ---------------------------------------------------------------- Root

Root::Root(IntVec coords) : c_(std::move(coords)) {
  bool pos = false, neg = false;
  for (int x : c_) {
    pos |= x > 0;
    neg |= x < 0;
  }
  if (!pos && !neg) throw Error(ErrorCode::not_root_system, "zero vector is not a root");
  if (pos && neg)
    throw Error(ErrorCode::not_root_system, "mixed-sign coordinates " + vec_str(c_));
}

bool Root::positive() const {
  return std::all_of(c_.begin(), c_.end(), [](int x) { return x >= 0; });
}

int Root::height() const { return std::accumulate(c_.begin(), c_.end(), 0); }

Root Root::operator-() const {
  IntVec n(c_);
  for (auto& x : n) x = -x;
  return Root(std::move(n));
}

std::string Root::str(const std::vector<std::string>& names) const {
  std::string out;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    int c = c_[i];
    if (c == 0) continue;
    if (c < 0)
      out += "-";
    else if (!out.empty())
      out += "+";
    if (std::abs(c) != 1) out += std::to_string(std::abs(c));
    out += names[i];
  }
  return out;
}

// ---------------------------------------------------------------- RootSystem

int RootSystem::pairing(std::size_t i, const IntVec& v) const {
  int acc = 0;
  for (std::size_t j = 0; j < v.size(); ++j) acc += cartan_(i, j) * v[j];
  return acc;
}

IntVec RootSystem::reflect(std::size_t i, const IntVec& v) const {
  IntVec out(v);
  out[i] -= pairing(i, v);
  return out;
}

void RootSystem::index_roots() {
  std::vector<Root> pos;
  for (const auto& r : roots_)
    if (r.positive()) pos.push_back(r);
  std::sort(pos.begin(), pos.end(), [](const Root& a, const Root& b) {
    if (a.height() != b.height()) return a.height() < b.height();
    return a.coords() > b.coords();
  });
  roots_ = pos;
  for (const auto& r : pos) roots_.push_back(-r);
  lookup_.clear();
  for (std::size_t k = 0; k < roots_.size(); ++k) lookup_[roots_[k].coords()] = k;
  reduced_ = true;
  for (const auto& r : pos) {
    IntVec twice(r.coords());
    for (auto& x : twice) x *= 2;
    if (lookup_.count(twice)) reduced_ = false;
  }
}

RootSystem RootSystem::generate(const CartanMatrix& cartan) {
  cartan.check_finite_type();
  RootSystem rs;
  rs.cartan_ = cartan;
  const std::size_t n = cartan.size();
  std::set<IntVec> seen;
  std::deque<IntVec> queue;
  for (std::size_t i = 0; i < n; ++i) {
    IntVec e(n, 0);
    e[i] = 1;
    seen.insert(e);
    queue.push_back(e);
  }
  while (!queue.empty()) {
    IntVec v = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < n; ++i) {
      IntVec w = rs.reflect(i, v);
      if (seen.insert(w).second) queue.push_back(w);
    }
  }
  for (const auto& v : seen) rs.roots_.emplace_back(v);
  rs.index_roots();
  return rs;
}

RootSystem RootSystem::from_roots(const std::vector<IntVec>& roots,
                                  std::vector<std::string> simple_labels) {
  const std::size_t n = simple_labels.size();
  std::set<IntVec> set;
  for (const auto& v : roots) {
    if (v.size() != n) throw Error(ErrorCode::internal, "root dimension mismatch");
    Root r(v);  // validates sign pattern
    set.insert(v);
  }
  for (const auto& v : set) {
    IntVec neg(v);
    for (auto& x : neg) x = -x;
    if (!set.count(neg))
      throw Error(ErrorCode::not_root_system, "root set not closed under negation",
                  vec_str(v));
  }
  auto has = [&](const IntVec& v) { return set.count(v) > 0; };
  std::vector<IntVec> a(n, IntVec(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    IntVec ei(n, 0);
    ei[i] = 1;
    if (!has(ei))
      throw Error(ErrorCode::not_root_system, "simple root " + simple_labels[i] + " missing");
    a[i][i] = 2;
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      IntVec v(n, 0);
      v[j] = 1;
      int q = 0;
      for (;;) {
        v[i] += 1;
        if (!has(v)) break;
        ++q;
      }
      a[i][j] = -q;
    }
  }
  RootSystem rs;
  try {
    rs.cartan_ = CartanMatrix(std::move(a), std::move(simple_labels));
    rs.cartan_.check_finite_type();
  } catch (const Error& e) {
    throw Error(ErrorCode::not_root_system,
                std::string("root strings do not define a finite Cartan matrix: ") + e.what());
  }
  for (const auto& v : set)
    for (std::size_t i = 0; i < n; ++i)
      if (!has(rs.reflect(i, v)))
        throw Error(ErrorCode::not_root_system, "root set not closed under reflection",
                    "s_" + rs.cartan_.labels()[i] + vec_str(v) + " = " +
                        vec_str(rs.reflect(i, v)));
  for (const auto& v : set) rs.roots_.emplace_back(v);
  rs.index_roots();
  return rs;
}

std::vector<Root> RootSystem::positives() const {
  return {roots_.begin(), roots_.begin() + static_cast<long>(num_positive())};
}

std::vector<Root> RootSystem::simples() const {
  std::vector<Root> out;
  for (std::size_t i = 0; i < rank(); ++i) {
    IntVec e(rank(), 0);
    e[i] = 1;
    out.emplace_back(e);
  }
  return out;
}

std::optional<std::size_t> RootSystem::index_of(const IntVec& coords) const {
  auto it = lookup_.find(coords);
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

WeylElement RootSystem::longest_element(const NodeList& nodes) const {
  std::vector<std::size_t> word;
  for (;;) {
    WeylElement w(*this, word);
    bool grew = false;
    for (auto c : nodes) {
      IntVec e(rank(), 0);
      e[c] = 1;
      if (Root(w.apply(e)).positive()) {
        word.push_back(c);
        grew = true;
        break;
      }
    }
    if (!grew) return w;
  }
}

WeylElement::WeylElement(const RootSystem& rs, std::vector<std::size_t> word)
    : rs_(&rs), word_(std::move(word)) {
  perm_.reserve(rs.roots().size());
  for (const auto& r : rs.roots()) {
    auto idx = rs.index_of(apply(r.coords()));
    if (!idx) throw Error(ErrorCode::internal, "Weyl word does not preserve the root set");
    perm_.push_back(*idx);
  }
}

IntVec WeylElement::apply(const IntVec& v) const {
  IntVec out(v);
  for (auto it = word_.rbegin(); it != word_.rend(); ++it) out = rs_->reflect(*it, out);
  return out;
}

// ---------------------------------------------------------------- subsets

bool subset_less(const SimpleSubset& a, const SimpleSubset& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

std::vector<SimpleSubset> all_subsets(std::size_t n) {
  std::vector<SimpleSubset> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    SimpleSubset s;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1) s.push_back(i);
    out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end(), subset_less);
  return out;
}

std::vector<SimpleSubset> weyl_orbit_subsets(const RootSystem& rs, const SimpleSubset& theta) {
  const std::size_t n = rs.rank();
  for (auto t : theta)
    if (t >= n) throw Error(ErrorCode::theta_not_subset, "subset index out of range");
  SimpleSubset start(theta);
  std::sort(start.begin(), start.end());
  start.erase(std::unique(start.begin(), start.end()), start.end());

  // Elementary moves: for a simple root a outside T, the longest element of
  // the component C of T+{a} containing a maps T into simple position,
  // sending T∩C to -w0^C(T∩C). These moves connect each orbit.
  std::set<SimpleSubset> seen{start};
  std::deque<SimpleSubset> queue{start};
  while (!queue.empty()) {
    SimpleSubset t = queue.front();
    queue.pop_front();
    for (std::size_t a = 0; a < n; ++a) {
      if (std::binary_search(t.begin(), t.end(), a)) continue;
      SimpleSubset k(t);
      k.insert(std::upper_bound(k.begin(), k.end(), a), a);
      NodeList comp{a};
      for (std::size_t i = 0; i < comp.size(); ++i)
        for (auto j : k)
          if (rs.cartan()(comp[i], j) != 0 &&
              std::find(comp.begin(), comp.end(), j) == comp.end())
            comp.push_back(j);
      std::sort(comp.begin(), comp.end());
      WeylElement w0 = rs.longest_element(comp);
      SimpleSubset next;
      for (auto b : t) {
        if (!std::binary_search(comp.begin(), comp.end(), b)) {
          next.push_back(b);
          continue;
        }
        IntVec e(n, 0);
        e[b] = 1;
        IntVec img = w0.apply(e);
        for (auto& x : img) x = -x;
        auto it = std::find(img.begin(), img.end(), 1);
        if (it == img.end() || std::count(img.begin(), img.end(), 0) != static_cast<long>(n - 1))
          throw Error(ErrorCode::internal, "longest element left simple position");
        next.push_back(static_cast<std::size_t>(it - img.begin()));
      }
      std::sort(next.begin(), next.end());
      if (seen.insert(next).second) queue.push_back(next);
    }
  }
  std::vector<SimpleSubset> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(), subset_less);
  return out;
}

bool subsets_conjugate(const RootSystem& rs, const SimpleSubset& a, const SimpleSubset& b) {
  if (a.size() != b.size()) return false;
  SimpleSubset sb(b);
  std::sort(sb.begin(), sb.end());
  auto orbit = weyl_orbit_subsets(rs, a);
  return std::find(orbit.begin(), orbit.end(), sb) != orbit.end();
}

}  // namespace maxsolv
