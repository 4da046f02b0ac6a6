#include "classify.hpp"
#include "eigen.hpp"
#include "liealg.hpp"

#include <fstream>
#include <functional>
#include <set>
#include <sstream>

namespace maxsolv {

namespace {

IntVec add(const IntVec& a, const IntVec& b) {
  IntVec c(a);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += b[i];
  return c;
}

IntVec neg(const IntVec& a) {
  IntVec c(a);
  for (auto& x : c) x = -x;
  return c;
}

bool positive(const IntVec& v) {
  return std::any_of(v.begin(), v.end(), [](int x) { return x > 0; });
}

std::string digits(const IntVec& v) {
  std::string s;
  for (int x : v) s += std::to_string(x);
  return s;
}

// Root vectors of the split Cartan: its weight spaces must be lines.
void pair_split_weights(LieRealization& lr) {
  std::vector<Mat<Rational>> ops;
  for (const auto& h : lr.split_cartan) ops.push_back(lr.ad(h));
  auto pieces = joint_eigenspaces<Rational>(ops, lr.dim(), [](const Rational& q) { return q; });
  if (!pieces) throw Error(ErrorCode::realization_invalid, lr.form_id + ": split part not diagonalizable");
  std::set<Vec<Rational>> weights;
  for (const auto& [eig, space] : *pieces) {
    if (is_zero_vec(eig)) continue;
    if (space.dim() != 1) throw Error(ErrorCode::realization_invalid, lr.form_id + ": root space is not a line");
    weights.insert(eig);
  }
  const std::size_t s = lr.split_cartan.size();
  // Regular functional sum_j w_j M^j.
  auto value = [&](const Vec<Rational>& w, long m) {
    Rational acc, p(1);
    for (std::size_t j = 0; j < s; ++j, p *= Rational(m)) acc += w[j] * p;
    return acc;
  };
  long m = 2;
  while (std::any_of(weights.begin(), weights.end(), [&](const auto& w) { return value(w, m).is_zero(); })) ++m;
  std::vector<Vec<Rational>> pos;
  for (const auto& w : weights)
    if (value(w, m).sign() > 0) pos.push_back(w);
  std::vector<Vec<Rational>> simple;
  for (const auto& w : pos) {
    bool decomposable = false;
    for (const auto& u : pos) {
      Vec<Rational> d = w;
      axpy(d, Rational(-1), u);
      if (weights.count(d) && value(d, m).sign() > 0) decomposable = true;
    }
    if (!decomposable) simple.push_back(w);
  }
  if (simple.size() != lr.index.rank())
    throw Error(ErrorCode::realization_invalid, lr.form_id + ": split rank does not match the index");
  const std::size_t r = simple.size();
  std::vector<IntVec> a(r, IntVec(r, 2));
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < r; ++i) {
    labels.push_back("s" + std::to_string(i + 1));
    for (std::size_t j = 0; j < r; ++j) {
      if (i == j) continue;
      int p = 0, q = 0;
      auto step = [&](int k) {
        Vec<Rational> v = simple[j];
        axpy(v, Rational(k), simple[i]);
        return weights.count(v) > 0;
      };
      while (step(-(p + 1))) ++p;
      while (step(q + 1)) ++q;
      a[i][j] = p - q;
    }
  }
  auto iso = cartan_isomorphisms(CartanMatrix(a, labels), lr.index.absolute, 1);
  if (iso.empty()) throw Error(ErrorCode::realization_invalid, lr.form_id + ": root system does not match the index");
  lr.simple_weights.assign(r, {});
  for (std::size_t k = 0; k < r; ++k) lr.simple_weights[iso[0][k]] = simple[k];
}

// Cayley-transform tori: for each Theta, a strongly orthogonal family of
// |derived Levi rank| roots in span(Theta) gives commuting elliptic
// elements x + theta(x) spanning a compact Cartan of the derived Levi.
void designate_split_tori(LieRealization& lr) {
  const auto rrs = restricted_system(lr.index);
  std::map<IntVec, Vec<Rational>> root_vec;
  for (const auto& ws : weight_decomposition(lr)) {
    if (!positive(ws.restricted)) continue;
    if (ws.space.dim() != 1) throw Error(ErrorCode::realization_invalid, lr.form_id + ": root space is not a line");
    root_vec[ws.restricted] = ws.space.basis()[0];
  }
  std::vector<IntVec> pos;
  for (const auto& r : rrs.base.positives()) pos.push_back(r.coords());
  lr.aniso.clear();
  for (const auto& theta : all_subsets(rrs.rank())) {
    const std::size_t need = parabolic(lr.index, rrs, theta).levi_subindex.rank();
    std::vector<IntVec> cand;
    for (const auto& r : pos)
      if (in_theta_span(r, theta)) cand.push_back(r);
    std::vector<IntVec> chosen;
    std::function<bool(std::size_t)> search = [&](std::size_t from) {
      if (chosen.size() == need) return true;
      for (std::size_t c = from; c < cand.size(); ++c) {
        bool ok = true;
        for (const auto& b : chosen)
          if (rrs.base.contains(add(b, cand[c])) || rrs.base.contains(add(b, neg(cand[c])))) ok = false;
        if (!ok) continue;
        chosen.push_back(cand[c]);
        if (search(c + 1)) return true;
        chosen.pop_back();
      }
      return false;
    };
    if (!search(0)) continue;
    Mat<Rational> t;
    for (const auto& b : chosen) {
      Vec<Rational> x = root_vec.at(b);
      axpy(x, Rational(1), lr.apply_involution(root_vec.at(b)));
      t.push_back(std::move(x));
    }
    lr.aniso[theta] = std::move(t);
  }
  ThetaSubset all;
  for (std::size_t i = 0; i < rrs.rank(); ++i) all.push_back(i);
  if (auto it = lr.aniso.find(all); it != lr.aniso.end()) lr.compact_cartan = it->second;
}

// ------------------------------------------------------------ matrix forms

using CMat = Mat<Gaussian>;

CMat zero_cmat(std::size_t n) { return CMat(n, Vec<Gaussian>(n, Gaussian(0))); }

CMat unit(std::size_t n, std::size_t i, std::size_t j, Gaussian c = Gaussian(1)) {
  auto m = zero_cmat(n);
  m[i][j] = c;
  return m;
}

CMat operator+(CMat a, const CMat& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) a[i][j] += b[i][j];
  return a;
}

CMat operator*(Gaussian c, CMat a) {
  for (auto& row : a)
    for (auto& x : row) x *= c;
  return a;
}

CMat commutator(const CMat& a, const CMat& b) {
  return mat_mul(a, b) + Gaussian(-1) * mat_mul(b, a);
}

CMat minus_adjoint(const CMat& a) {
  auto out = zero_cmat(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) out[j][i] = -a[i][j].conj();
  return out;
}

Vec<Rational> flatten(const CMat& m) {
  Vec<Rational> out;
  for (const auto& row : m)
    for (const auto& x : row) out.push_back(x.re());
  for (const auto& row : m)
    for (const auto& x : row) out.push_back(x.im());
  return out;
}

struct MatrixForm {
  std::string form_id;
  SatakeIndex index;
  std::vector<std::string> labels;
  std::vector<CMat> basis;
  std::vector<CMat> split;
  Mat<Rational> simple_weights;  // empty: derive (split index only)
  std::map<ThetaSubset, std::vector<CMat>> aniso;
  std::vector<CMat> compact;
};

// Real span of the given complex matrices, closed under commutators, with
// Cartan involution X -> -X^*.
LieRealization from_matrices(const MatrixForm& f) {
  Mat<Rational> flats;
  for (const auto& b : f.basis) flats.push_back(flatten(b));
  if (rank_of(flats, flats.front().size()) != flats.size())
    throw Error(ErrorCode::realization_invalid, f.form_id + ": basis matrices are dependent");
  auto coords = [&](const CMat& x) {
    auto c = solve_combination(flats, flatten(x));
    if (!c) throw Error(ErrorCode::realization_invalid, f.form_id + ": matrix outside the real span");
    return *c;
  };
  LieRealization lr(f.form_id, f.labels);
  for (std::size_t a = 0; a < f.basis.size(); ++a)
    for (std::size_t b = a + 1; b < f.basis.size(); ++b) lr.set_bracket(a, b, coords(commutator(f.basis[a], f.basis[b])));
  for (const auto& h : f.split) lr.split_cartan.push_back(coords(h));
  for (const auto& b : f.basis) lr.involution.push_back(coords(minus_adjoint(b)));
  lr.index = f.index;
  if (f.simple_weights.empty())
    pair_split_weights(lr);
  else
    lr.simple_weights = f.simple_weights;
  if (f.index.split() && f.aniso.empty()) {
    designate_split_tori(lr);
  } else {
    for (const auto& [theta, ms] : f.aniso) {
      Mat<Rational> t;
      for (const auto& m : ms) t.push_back(coords(m));
      lr.aniso[theta] = t;
    }
    for (const auto& m : f.compact) lr.compact_cartan.push_back(coords(m));
  }
  validate_realization(lr);
  return lr;
}

MatrixForm sl_real(std::size_t n) {
  MatrixForm f;
  f.form_id = "sl(" + std::to_string(n) + ",R)";
  f.index = RealFormCatalog::bundled().find(f.form_id)->index();
  for (std::size_t i = 0; i + 1 < n; ++i) {
    f.labels.push_back("H" + std::to_string(i + 1));
    f.basis.push_back(unit(n, i, i) + unit(n, i + 1, i + 1, Gaussian(-1)));
    f.split.push_back(f.basis.back());
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) {
        f.labels.push_back("E" + std::to_string(i + 1) + std::to_string(j + 1));
        f.basis.push_back(unit(n, i, j));
      }
  return f;
}

// Real matrices X with X^T J + J X = 0.
MatrixForm preserving(std::string id, SatakeIndex idx, const std::vector<IntVec>& j,
                      std::vector<std::pair<std::size_t, std::size_t>> split_pairs) {
  const std::size_t n = j.size();
  Mat<Rational> rows;
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t d = 0; d < n; ++d) {
      Vec<Rational> row(n * n, Rational(0));
      for (std::size_t a = 0; a < n; ++a) row[a * n + c] += Rational(j[a][d]);
      for (std::size_t b = 0; b < n; ++b) row[b * n + d] += Rational(j[c][b]);
      rows.push_back(std::move(row));
    }
  MatrixForm f;
  f.form_id = std::move(id);
  f.index = std::move(idx);
  f.index.name = f.form_id;
  int k = 0;
  for (const auto& v : kernel(rows, n * n)) {
    auto m = zero_cmat(n);
    for (std::size_t a = 0; a < n * n; ++a) m[a / n][a % n] = Gaussian(v[a]);
    f.basis.push_back(std::move(m));
    f.labels.push_back("X" + std::to_string(++k));
  }
  for (auto [p, q] : split_pairs) f.split.push_back(unit(n, p, p) + unit(n, q, q, Gaussian(-1)));
  return f;
}

std::vector<IntVec> antidiagonal(std::size_t n) {
  std::vector<IntVec> j(n, IntVec(n, 0));
  for (std::size_t i = 0; i < n; ++i) j[i][n - 1 - i] = 1;
  return j;
}

MatrixForm su11() {
  const Gaussian i = Gaussian::i();
  MatrixForm f;
  f.form_id = "su(1,1)";
  f.index = SatakeIndex::split_of(CartanMatrix::of_type({'A', 1}), FieldMode::real);
  f.index.name = f.form_id;
  f.labels = {"T1", "P1", "P2"};
  f.basis = {unit(2, 0, 0, i) + unit(2, 1, 1, -i), unit(2, 0, 1) + unit(2, 1, 0),
             unit(2, 0, 1, i) + unit(2, 1, 0, -i)};
  f.split = {f.basis[1]};
  return f;
}

// su(2,1) for the form diag(1,1,-1): compact part u(2), split part spanned by
// E13+E31 with restricted weights 0, +-1, +-2.
MatrixForm su21() {
  const Gaussian i = Gaussian::i();
  MatrixForm f;
  f.form_id = "su(2,1)";
  f.index.absolute = CartanMatrix::of_type({'A', 2});
  f.index.color = {Color::white, Color::white};
  f.index.tau = {1, 0};
  f.index.mode = FieldMode::real;
  f.index.name = f.form_id;
  f.labels = {"T1", "T2", "K1", "K2", "P1", "P2", "P3", "P4"};
  f.basis = {unit(3, 0, 0, i) + unit(3, 1, 1, -i),
             unit(3, 1, 1, i) + unit(3, 2, 2, -i),
             unit(3, 0, 1) + unit(3, 1, 0, Gaussian(-1)),
             unit(3, 0, 1, i) + unit(3, 1, 0, i),
             unit(3, 0, 2) + unit(3, 2, 0),
             unit(3, 0, 2, i) + unit(3, 2, 0, -i),
             unit(3, 1, 2) + unit(3, 2, 1),
             unit(3, 1, 2, i) + unit(3, 2, 1, -i)};
  f.split = {f.basis[4]};
  f.simple_weights = {{Rational(1)}};
  f.compact = {f.basis[0], f.basis[1]};
  f.aniso[{}] = {};
  f.aniso[{0}] = f.compact;
  return f;
}

}  // namespace

LieRealization chevalley_realization(const CartanMatrix& cm) {
  if (cm.size() == 0) throw Error(ErrorCode::argument, "empty Cartan matrix");
  if (cm.size() > 4) throw Error(ErrorCode::rank_bound, "Chevalley realizations are limited to rank <= 4");
  cm.check_finite_type();
  const auto rs = RootSystem::generate(cm);
  const auto pos = rs.positives();
  const std::size_t r = cm.size(), np = pos.size(), n = r + 2 * np;

  std::vector<std::string> labels;
  for (std::size_t i = 0; i < r; ++i) labels.push_back("h" + std::to_string(i + 1));
  std::map<IntVec, std::size_t> where;
  for (std::size_t p = 0; p < np; ++p) {
    labels.push_back("e_" + digits(pos[p].coords()));
    where[pos[p].coords()] = r + p;
  }
  for (std::size_t p = 0; p < np; ++p) {
    labels.push_back("f_" + digits(pos[p].coords()));
    where[neg(pos[p].coords())] = r + np + p;
  }
  const auto d = cm.symmetrizer();
  auto norm = [&](const IntVec& v) {
    Rational acc;
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j)
        if (v[i] && v[j] && cm(i, j)) acc += d[i] * Rational(cm(i, j) * v[i] * v[j]);
    return acc;
  };
  auto is_root = [&](const IntVec& v) { return rs.contains(v); };
  auto string_p = [&](const IntVec& a, const IntVec& b) {
    int p = 0;
    IntVec v = b;
    while (true) {
      for (std::size_t i = 0; i < r; ++i) v[i] -= a[i];
      if (!is_root(v)) return p;
      ++p;
    }
  };

  // Structure constants on positive pairs, fixed by +(p+1) on extraspecial
  // pairs and propagated by the standard identities.
  std::map<std::pair<IntVec, IntVec>, Rational> npos;
  std::function<Rational(const IntVec&, const IntVec&)> N = [&](const IntVec& x, const IntVec& y) -> Rational {
    const IntVec s = add(x, y);
    if (!is_root(s)) return Rational(0);
    const bool px = positive(x), py = positive(y);
    if (px && py) return npos.at({x, y});
    if (!px && !py) return -N(neg(x), neg(y));
    const IntVec z = neg(s);
    if (positive(z) == py) return norm(z) / norm(x) * N(y, z);
    return norm(z) / norm(y) * N(z, x);
  };
  for (std::size_t xi_i = 0; xi_i < np; ++xi_i) {
    const IntVec& xi = pos[xi_i].coords();
    std::vector<std::pair<std::size_t, std::size_t>> special;
    for (std::size_t a = 0; a < np; ++a) {
      IntVec b = add(xi, neg(pos[a].coords()));
      if (!is_root(b) || !positive(b)) continue;
      const std::size_t bi = where.at(b) - r;
      if (a < bi) special.emplace_back(a, bi);
    }
    if (special.empty()) continue;
    const IntVec& g = pos[special[0].first].coords();
    const IntVec& dl = pos[special[0].second].coords();
    const Rational ngd(string_p(g, dl) + 1);
    npos[{g, dl}] = ngd;
    npos[{dl, g}] = -ngd;
    for (std::size_t k = 1; k < special.size(); ++k) {
      const IntVec& al = pos[special[k].first].coords();
      const IntVec& be = pos[special[k].second].coords();
      Rational acc;
      const IntVec bg = add(be, neg(g)), ag = add(al, neg(g));
      if (is_root(bg)) acc += N(be, neg(g)) * N(al, neg(dl)) / norm(bg);
      if (is_root(ag)) acc += N(neg(g), al) * N(be, neg(dl)) / norm(ag);
      const Rational v = norm(xi) / ngd * acc;
      npos[{al, be}] = v;
      npos[{be, al}] = -v;
    }
  }
  for (const auto& [pair, v] : npos) {
    const Rational expect(string_p(pair.first, pair.second) + 1);
    if (!(v == expect || v == -expect))
      throw Error(ErrorCode::internal, "Chevalley structure constant has wrong magnitude");
  }

  LieRealization lr("split " + type_string(cm), labels);
  std::vector<IntVec> all;
  for (const auto& rt : rs.roots()) all.push_back(rt.coords());
  for (std::size_t i = 0; i < r; ++i)
    for (const auto& b : all) {
      int ev = 0;
      for (std::size_t j = 0; j < r; ++j) ev += cm(i, j) * b[j];
      Vec<Rational> v(n, Rational(0));
      v[where.at(b)] = Rational(ev);
      lr.set_bracket(i, where.at(b), v);
    }
  for (const auto& rt : pos) {
    const IntVec& a = rt.coords();
    Vec<Rational> h(n, Rational(0));
    for (std::size_t i = 0; i < r; ++i)
      if (a[i]) h[i] = Rational(a[i]) * Rational(2) * d[i] / norm(a);
    lr.set_bracket(where.at(a), where.at(neg(a)), h);
  }
  for (const auto& x : all)
    for (const auto& y : all) {
      if (where.at(x) >= where.at(y)) continue;
      const IntVec s = add(x, y);
      if (!is_root(s)) continue;
      Vec<Rational> v(n, Rational(0));
      v[where.at(s)] = N(x, y);
      lr.set_bracket(where.at(x), where.at(y), v);
    }

  for (std::size_t i = 0; i < r; ++i) lr.split_cartan.push_back(unit_vec<Rational>(n, i));
  lr.involution.assign(n, Vec<Rational>(n, Rational(0)));
  for (std::size_t i = 0; i < r; ++i) lr.involution[i][i] = Rational(-1);
  for (const auto& x : all) lr.involution[where.at(x)][where.at(neg(x))] = Rational(-1);
  lr.index = SatakeIndex::split_of(cm, FieldMode::real);
  lr.index.name = lr.form_id;
  lr.simple_weights.assign(r, Vec<Rational>(r));
  for (std::size_t k = 0; k < r; ++k)
    for (std::size_t j = 0; j < r; ++j) lr.simple_weights[k][j] = Rational(cm(j, k));
  designate_split_tori(lr);
  validate_realization(lr);
  return lr;
}

const std::vector<LieRealization>& realization_catalog() {
  static const std::vector<LieRealization> catalog = [] {
    std::vector<LieRealization> out;
    for (const char* t : {"A1", "A2", "A3", "A4", "B2", "B3", "C3", "G2", "A1+A1"})
      out.push_back(chevalley_realization(CartanMatrix::parse_type(t)));
    for (std::size_t n = 2; n <= 4; ++n) out.push_back(from_matrices(sl_real(n)));
    out.push_back(from_matrices(su11()));
    out.push_back(from_matrices(su21()));
    const auto b2 = SatakeIndex::split_of(CartanMatrix::of_type({'B', 2}), FieldMode::real);
    std::vector<IntVec> omega = {{0, 0, 1, 0}, {0, 0, 0, 1}, {-1, 0, 0, 0}, {0, -1, 0, 0}};
    out.push_back(from_matrices(preserving("sp(4,R)", b2, omega, {{0, 2}, {1, 3}})));
    out.push_back(from_matrices(preserving("so(3,2)", b2, antidiagonal(5), {{0, 4}, {1, 3}})));
    out.push_back(from_matrices(preserving(
        "so(2,2)", SatakeIndex::split_of(CartanMatrix::parse_type("A1+A1"), FieldMode::real), antidiagonal(4),
        {{0, 3}, {1, 2}})));
    return out;
  }();
  return catalog;
}

LieRealization find_realization(const SatakeIndex& idx) {
  require_valid(idx);
  if (idx.split()) {
    if (idx.rank() > 4) throw Error(ErrorCode::rank_bound, "split realizations are limited to rank <= 4");
    const auto rs = RootSystem::generate(idx.absolute);
    const std::size_t dim = idx.rank() + rs.roots().size();
    if (dim > 24)
      throw Error(ErrorCode::rank_bound, "realization catalog is limited to dimension <= 24 (" +
                                             type_string(idx.absolute) + " has dimension " + std::to_string(dim) + ")");
    auto lr = chevalley_realization(idx.absolute);
    lr.index = idx;
    return lr;
  }
  const auto factors = components(idx);
  if (factors.size() == 1 && idx.mode == FieldMode::real) {
    const auto label = recognize_real_form(factors.front());
    const auto want = restricted_system(idx);
    for (const auto& lr : realization_catalog()) {
      if (lr.form_id != label.name()) continue;
      if (!(restricted_system(lr.index).base.cartan() == want.base.cartan())) continue;
      auto copy = lr;
      copy.index = idx;
      return copy;
    }
    throw Error(ErrorCode::catalog, "no realization in the catalog for " + label.name());
  }
  throw Error(ErrorCode::catalog, "no realization in the catalog for this index");
}

// ------------------------------------------------------------ text format

std::string serialize_realization(const LieRealization& lr) {
  const auto rrs = restricted_system(lr.index);
  std::ostringstream os;
  auto vec_list = [&](const Mat<Rational>& vs) {
    std::string out;
    for (std::size_t k = 0; k < vs.size(); ++k) out += (k ? "; " : "") + format_vector(lr, vs[k]);
    return out;
  };
  os << "form " << lr.form_id << "\n";
  std::istringstream idx(format_index(lr.index));
  for (std::string line; std::getline(idx, line);) os << "index " << line << "\n";
  os << "basis";
  for (const auto& l : lr.basis_labels) os << " " << l;
  os << "\nsplit " << vec_list(lr.split_cartan) << "\n";
  for (const auto& w : lr.simple_weights) {
    os << "simple";
    for (const auto& x : w) os << " " << x.str();
    os << "\n";
  }
  for (std::size_t i = 0; i < lr.involution.size(); ++i)
    os << "theta " << lr.basis_labels[i] << " = " << format_vector(lr, lr.involution[i]) << "\n";
  if (!lr.compact_cartan.empty()) os << "compact " << vec_list(lr.compact_cartan) << "\n";
  for (const auto& [theta, t] : lr.aniso) os << "aniso " << theta_string(rrs, theta) << " : " << vec_list(t) << "\n";
  for (std::size_t i = 0; i < lr.dim(); ++i)
    for (std::size_t j = i + 1; j < lr.dim(); ++j)
      for (const auto& [k, c] : lr.bracket_basis(i, j))
        os << "bracket " << i + 1 << " " << j + 1 << " " << k + 1 << " " << c.str() << "\n";
  return os.str();
}

LieRealization parse_realization(const std::string& text) {
  std::string form;
  std::string index_text;
  std::vector<std::string> labels;
  std::vector<std::string> split, simple, theta_lines, compact, aniso, brackets;
  std::istringstream in(text);
  int lineno = 0;
  for (std::string line; std::getline(in, line);) {
    ++lineno;
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    std::istringstream ls(line);
    std::string key;
    if (!(ls >> key)) continue;
    std::string rest;
    std::getline(ls, rest);
    if (auto b = rest.find_first_not_of(" \t"); b != std::string::npos)
      rest = rest.substr(b);
    else
      rest.clear();
    if (key == "form") form = rest;
    else if (key == "index") index_text += rest + "\n";
    else if (key == "basis") {
      std::istringstream bs(rest);
      for (std::string l; bs >> l;) labels.push_back(l);
    } else if (key == "split") split.push_back(rest);
    else if (key == "simple") simple.push_back(rest);
    else if (key == "theta") theta_lines.push_back(rest);
    else if (key == "compact") compact.push_back(rest);
    else if (key == "aniso") aniso.push_back(rest);
    else if (key == "bracket") brackets.push_back(rest);
    else throw Error(ErrorCode::parse, "realization line " + std::to_string(lineno) + ": unknown key '" + key + "'");
  }
  if (labels.empty()) throw Error(ErrorCode::parse, "realization has no basis");
  LieRealization lr(form, labels);
  lr.index = parse_index(index_text);
  const auto rrs = restricted_system(lr.index);
  auto vec_list = [&](const std::string& s) {
    Mat<Rational> out;
    std::stringstream ss(s);
    for (std::string item; std::getline(ss, item, ';');)
      if (item.find_first_not_of(" \t") != std::string::npos) out.push_back(parse_vector(lr, item));
    return out;
  };
  for (const auto& s : split) {
    auto vs = vec_list(s);
    lr.split_cartan.insert(lr.split_cartan.end(), vs.begin(), vs.end());
  }
  for (const auto& s : simple) {
    std::istringstream ss(s);
    Vec<Rational> w;
    for (std::string x; ss >> x;) w.push_back(Rational::parse(x));
    lr.simple_weights.push_back(std::move(w));
  }
  if (!theta_lines.empty()) {
    lr.involution.assign(lr.dim(), Vec<Rational>(lr.dim(), Rational(0)));
    for (const auto& s : theta_lines) {
      auto eq = s.find('=');
      if (eq == std::string::npos) throw Error(ErrorCode::parse, "theta line needs '='");
      std::string l = s.substr(0, eq);
      l.erase(l.find_last_not_of(" \t") + 1);
      auto i = lr.find_label(l);
      if (!i) throw Error(ErrorCode::bad_label, "unknown basis label '" + l + "'");
      lr.involution[*i] = parse_vector(lr, s.substr(eq + 1));
    }
  }
  for (const auto& s : compact) {
    auto vs = vec_list(s);
    lr.compact_cartan.insert(lr.compact_cartan.end(), vs.begin(), vs.end());
  }
  for (const auto& s : aniso) {
    auto colon = s.find(':');
    if (colon == std::string::npos) throw Error(ErrorCode::parse, "aniso line needs ':'");
    lr.aniso[parse_theta(rrs, s.substr(0, colon))] = vec_list(s.substr(colon + 1));
  }
  for (const auto& s : brackets) {
    std::istringstream ss(s);
    std::size_t i = 0, j = 0, k = 0;
    if (!(ss >> i >> j >> k) || i == 0 || j == 0 || k == 0 || i > lr.dim() || j > lr.dim() || k > lr.dim())
      throw Error(ErrorCode::parse, "bad bracket triple '" + s + "'");
    std::vector<std::string> toks;
    for (std::string t; ss >> t;) toks.push_back(t);
    if (toks.empty()) throw Error(ErrorCode::parse, "bracket without coefficient");
    const Rational c = Rational::parse(toks[0]);
    if (toks.size() > 1) {
      if (toks[1] != "+" || toks.size() < 3) throw Error(ErrorCode::parse, "bad coefficient in '" + s + "'");
      std::string im = toks[2];
      if (!im.empty() && im.back() == 'i') im.pop_back();
      else if (toks.size() != 4 || toks[3] != "i") throw Error(ErrorCode::parse, "bad coefficient in '" + s + "'");
      if (!Rational::parse(im).is_zero())
        throw Error(ErrorCode::realization_invalid, "structure constants must be real in the chosen basis");
    }
    Vec<Rational> v(lr.dim(), Rational(0));
    for (const auto& [kk, cc] : lr.bracket_basis(i - 1, j - 1)) v[kk] = cc;
    v[k - 1] += c;
    lr.set_bracket(i - 1, j - 1, v);
  }
  validate_realization(lr);
  return lr;
}

LieRealization load_realization(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw Error(ErrorCode::io, "cannot read realization '" + path + "'");
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_realization(ss.str());
}

// ------------------------------------------------------------ verification

bool VerificationReport::ok() const {
  if (!jacobi || !multiplicities_match) return false;
  for (const auto& t : thetas)
    if (!t.ok()) return false;
  return !lemma1 || lemma1->verdict == Lemma1Verdict::holds;
}

VerificationReport verify_index(const SatakeIndex& idx, const AdmissibilityContext& ctx) {
  return verify_realization(find_realization(idx), idx, ctx);
}

VerificationReport verify_realization(const LieRealization& lr, const SatakeIndex& idx,
                                      const AdmissibilityContext& ctx) {
  if (lr.index.digest() != idx.digest())
    throw Error(ErrorCode::different_index, lr.form_id + ": realization is paired with index " +
                                                lr.index.digest() + ", not " + idx.digest());
  VerificationReport rep;
  rep.form_id = lr.form_id;
  rep.dim = lr.dim();
  rep.jacobi = jacobi_holds(lr);
  rep.weights = weight_decomposition(lr);
  const auto rrs = restricted_system(idx);
  rep.multiplicities_match = true;
  std::size_t nonzero = 0;
  for (const auto& ws : rep.weights) {
    if (std::all_of(ws.restricted.begin(), ws.restricted.end(), [](int x) { return x == 0; })) continue;
    ++nonzero;
    auto it = rrs.multiplicity.find(ws.restricted);
    if (it == rrs.multiplicity.end() || it->second != static_cast<int>(ws.space.dim())) rep.multiplicities_match = false;
  }
  if (nonzero != rrs.multiplicity.size()) rep.multiplicities_match = false;
  for (const auto& d : enumerate_classes(idx, ctx)) {
    ThetaVerification tv;
    tv.theta = d.theta;
    tv.dim_B_expected = d.dim_B;
    const auto b = build_b_theta(lr, idx, d.theta, rep.weights, ctx);
    tv.dim_b = b.b.dim();
    for (const auto& s : derived_series(lr, b.b)) tv.derived_dims.push_back(s.dim());
    tv.solvable = tv.derived_dims.back() == 0;
    if (tv.solvable) tv.certificate = certify_maximal_solvable(lr, b.b, rep.weights);
    else tv.certificate.maximal = false;
    rep.thetas.push_back(std::move(tv));
  }
  if (!lr.compact_cartan.empty()) rep.lemma1 = lemma1_check(lr);
  return rep;
}

}  // namespace maxsolv
