#include "liealg.hpp"

#include "eigen.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace maxsolv {

// ------------------------------------------------------------ realization

LieRealization::LieRealization(std::string id, std::vector<std::string> labels)
    : form_id(std::move(id)), basis_labels(std::move(labels)), table_(basis_labels.size() * basis_labels.size()) {}

std::optional<std::size_t> LieRealization::find_label(const std::string& label) const {
  for (std::size_t i = 0; i < basis_labels.size(); ++i)
    if (basis_labels[i] == label) return i;
  return std::nullopt;
}

void LieRealization::set_bracket(std::size_t i, std::size_t j, const Vec<Rational>& v) {
  const std::size_t n = dim();
  if (table_.size() != n * n) table_.assign(n * n, {});
  if (i >= n || j >= n || v.size() != n) throw Error(ErrorCode::internal, "bracket index out of range");
  SparseVec pos, neg;
  for (std::size_t k = 0; k < n; ++k)
    if (!v[k].is_zero()) {
      pos.emplace_back(k, v[k]);
      neg.emplace_back(k, -v[k]);
    }
  table_[i * n + j] = std::move(pos);
  table_[j * n + i] = std::move(neg);
}

Vec<Rational> LieRealization::bracket(const Vec<Rational>& u, const Vec<Rational>& v) const {
  const std::size_t n = dim();
  Vec<Rational> out(n, Rational(0));
  if (table_.size() != n * n) return out;
  std::vector<std::size_t> nv;
  for (std::size_t j = 0; j < n; ++j)
    if (!v[j].is_zero()) nv.push_back(j);
  for (std::size_t i = 0; i < n; ++i) {
    if (u[i].is_zero()) continue;
    for (auto j : nv) {
      const auto& entry = table_[i * n + j];
      if (entry.empty()) continue;
      const Rational c = u[i] * v[j];
      for (const auto& [k, val] : entry) out[k] += c * val;
    }
  }
  return out;
}

Mat<Rational> LieRealization::ad(const Vec<Rational>& x) const {
  const std::size_t n = dim();
  Mat<Rational> m(n, Vec<Rational>(n, Rational(0)));
  if (table_.size() != n * n) return m;
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j)
      for (const auto& [k, val] : table_[i * n + j]) m[k][j] += x[i] * val;
  }
  return m;
}

Vec<Rational> LieRealization::apply_involution(const Vec<Rational>& v) const {
  if (involution.empty()) throw Error(ErrorCode::realization_invalid, form_id + ": no involution designated");
  Vec<Rational> out(dim(), Rational(0));
  for (std::size_t i = 0; i < dim(); ++i) axpy(out, v[i], involution[i]);
  return out;
}

std::string format_vector(const LieRealization& lr, const Vec<Rational>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += v[i].str() + "*" + lr.basis_labels.at(i);
  }
  return out.empty() ? "0" : out;
}

Vec<Rational> parse_vector(const LieRealization& lr, const std::string& text) {
  Vec<Rational> v(lr.dim(), Rational(0));
  std::stringstream ss(text);
  std::string term;
  while (std::getline(ss, term, '+')) {
    auto b = term.find_first_not_of(" \t");
    if (b == std::string::npos) continue;
    term = term.substr(b, term.find_last_not_of(" \t") - b + 1);
    if (term == "0") continue;
    Rational c(1);
    std::string label = term;
    if (auto star = term.find('*'); star != std::string::npos) {
      c = Rational::parse(term.substr(0, star));
      label = term.substr(star + 1);
    } else if (term[0] == '-') {
      c = Rational(-1);
      label = term.substr(1);
    }
    auto idx = lr.find_label(label);
    if (!idx) throw Error(ErrorCode::bad_label, "unknown basis label '" + label + "'");
    v[*idx] += c;
  }
  return v;
}

// ------------------------------------------------------------ validation

bool jacobi_holds(const LieRealization& lr, std::string* witness) {
  const std::size_t n = lr.dim();
  auto bracket_with = [&](std::size_t i, const SparseVec& s, Vec<Rational>& acc) {
    for (const auto& [j, c] : s)
      for (const auto& [k, val] : lr.bracket_basis(i, j)) acc[k] += c * val;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        Vec<Rational> acc(n, Rational(0));
        bracket_with(i, lr.bracket_basis(j, k), acc);
        bracket_with(j, lr.bracket_basis(k, i), acc);
        bracket_with(k, lr.bracket_basis(i, j), acc);
        if (!is_zero_vec(acc)) {
          if (witness)
            *witness = "(" + lr.basis_labels[i] + ", " + lr.basis_labels[j] + ", " + lr.basis_labels[k] + ")";
          return false;
        }
      }
  return true;
}

void validate_realization(const LieRealization& lr) {
  const std::size_t n = lr.dim();
  auto fail = [&](const std::string& why) {
    return Error(ErrorCode::realization_invalid, lr.form_id + ": " + why);
  };
  if (n == 0) throw fail("empty basis");
  for (std::size_t i = 0; i < n; ++i) {
    if (!lr.bracket_basis(i, i).empty()) throw fail("[b,b] != 0 for " + lr.basis_labels[i]);
    for (std::size_t j = 0; j < n; ++j) {
      auto a = lr.bracket(unit_vec<Rational>(n, i), unit_vec<Rational>(n, j));
      auto b = lr.bracket(unit_vec<Rational>(n, j), unit_vec<Rational>(n, i));
      axpy(a, Rational(1), b);
      if (!is_zero_vec(a)) throw fail("bracket table is not antisymmetric");
    }
  }
  std::string w;
  if (!jacobi_holds(lr, &w)) throw fail("Jacobi identity fails on " + w);
  for (const auto& h : lr.split_cartan)
    if (h.size() != n) throw fail("split Cartan vector has wrong length");
  for (std::size_t a = 0; a < lr.split_cartan.size(); ++a)
    for (std::size_t b = a + 1; b < lr.split_cartan.size(); ++b)
      if (!is_zero_vec(lr.bracket(lr.split_cartan[a], lr.split_cartan[b])))
        throw fail("split Cartan elements do not commute");
  require_valid(lr.index);
  const auto rrs = restricted_system(lr.index);
  if (lr.simple_weights.size() != rrs.rank()) throw fail("one simple weight per restricted simple root required");
  for (const auto& w8 : lr.simple_weights)
    if (w8.size() != lr.split_cartan.size()) throw fail("simple weight has wrong length");
  if (rank_of(lr.simple_weights, lr.split_cartan.size()) != rrs.rank())
    throw fail("simple weights are linearly dependent");
  if (!lr.involution.empty()) {
    if (lr.involution.size() != n) throw fail("involution must have one row per basis vector");
    for (std::size_t i = 0; i < n; ++i)
      if (lr.apply_involution(lr.involution[i]) != unit_vec<Rational>(n, i))
        throw fail("involution does not square to the identity");
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        auto lhs = lr.apply_involution(lr.bracket(unit_vec<Rational>(n, i), unit_vec<Rational>(n, j)));
        auto rhs = lr.bracket(lr.involution[i], lr.involution[j]);
        if (lhs != rhs) throw fail("involution is not an automorphism");
      }
  }
  auto check_abelian = [&](const Mat<Rational>& t, const std::string& what) {
    for (const auto& x : t)
      if (x.size() != n) throw fail(what + " vector has wrong length");
    for (std::size_t a = 0; a < t.size(); ++a)
      for (std::size_t b = a + 1; b < t.size(); ++b)
        if (!is_zero_vec(lr.bracket(t[a], t[b]))) throw fail(what + " is not abelian");
  };
  for (const auto& [theta, t] : lr.aniso) check_abelian(t, "anisotropic Cartan");
  check_abelian(lr.compact_cartan, "compact Cartan");
}

// ------------------------------------------------------------ weights

std::vector<WeightSpace> weight_decomposition(const LieRealization& lr) {
  if (lr.split_cartan.empty())
    throw Error(ErrorCode::realization_invalid, lr.form_id + ": empty split Cartan");
  std::vector<Mat<Rational>> ops;
  for (const auto& h : lr.split_cartan) ops.push_back(lr.ad(h));
  auto pieces = joint_eigenspaces<Rational>(ops, lr.dim(), [](const Rational& q) { return q; });
  if (!pieces)
    throw Error(ErrorCode::realization_invalid,
                lr.form_id + ": split Cartan does not act diagonalizably with rational eigenvalues");
  const auto rrs = restricted_system(lr.index);
  std::vector<WeightSpace> out;
  for (auto& [eig, space] : *pieces) {
    WeightSpace ws;
    ws.eigen = eig;
    ws.space = std::move(space);
    ws.restricted.assign(rrs.rank(), 0);
    if (!is_zero_vec(eig)) {
      auto c = solve_combination(lr.simple_weights, eig);
      if (!c) throw Error(ErrorCode::realization_invalid, lr.form_id + ": weight outside the restricted lattice");
      for (std::size_t k = 0; k < c->size(); ++k) {
        if (!(*c)[k].is_integer())
          throw Error(ErrorCode::realization_invalid, lr.form_id + ": non-integral restricted weight");
        ws.restricted[k] = static_cast<int>((*c)[k].to_long());
      }
      if (!rrs.base.contains(ws.restricted))
        throw Error(ErrorCode::realization_invalid, lr.form_id + ": weight is not a restricted root");
    }
    out.push_back(std::move(ws));
  }
  std::sort(out.begin(), out.end(), [](const WeightSpace& a, const WeightSpace& b) {
    int ha = 0, hb = 0;
    for (int x : a.restricted) ha += x;
    for (int x : b.restricted) hb += x;
    if (ha != hb) return ha > hb;
    return a.restricted > b.restricted;
  });
  return out;
}

// ------------------------------------------------------------ subalgebras

Subalgebra generated_subalgebra(const LieRealization& lr, const Mat<Rational>& vectors) {
  const std::size_t n = lr.dim();
  Subalgebra s(n);
  Mat<Rational> gens;
  for (const auto& v : vectors)
    if (s.insert(v)) gens.push_back(v);
  for (std::size_t a = 0; a < gens.size() && s.dim() < n; ++a)
    for (std::size_t b = 0; b < a && s.dim() < n; ++b) {
      auto w = lr.bracket(gens[a], gens[b]);
      if (s.insert(w)) gens.push_back(std::move(w));
    }
  return s;
}

Subalgebra bracket_span(const LieRealization& lr, const Subalgebra& a, const Subalgebra& b) {
  Subalgebra out(lr.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < b.dim(); ++j) {
      if (&a == &b && j <= i) continue;
      out.insert(lr.bracket(a.basis()[i], b.basis()[j]));
    }
  return out;
}

bool is_subalgebra(const LieRealization& lr, const Subalgebra& s) {
  for (std::size_t i = 0; i < s.dim(); ++i)
    for (std::size_t j = i + 1; j < s.dim(); ++j)
      if (!s.contains(lr.bracket(s.basis()[i], s.basis()[j]))) return false;
  return true;
}

std::vector<Subalgebra> derived_series(const LieRealization& lr, const Subalgebra& s) {
  std::vector<Subalgebra> chain{s};
  while (chain.back().dim() > 0) {
    auto next = bracket_span(lr, chain.back(), chain.back());
    if (next.dim() == chain.back().dim()) break;
    chain.push_back(std::move(next));
  }
  return chain;
}

bool is_solvable(const LieRealization& lr, const Subalgebra& s) {
  return derived_series(lr, s).back().dim() == 0;
}

Subalgebra normalizer(const LieRealization& lr, const Subalgebra& v) {
  const std::size_t n = lr.dim();
  Mat<Rational> rows;
  for (const auto& vb : v.basis()) {
    auto m = lr.ad(vb);  // column j = [v_b, b_j]
    Mat<Rational> cols(n);
    for (std::size_t j = 0; j < n; ++j) {
      Vec<Rational> c(n);
      for (std::size_t k = 0; k < n; ++k) c[k] = m[k][j];
      cols[j] = v.reduce(std::move(c));
    }
    for (std::size_t k = 0; k < n; ++k) {
      Vec<Rational> row(n);
      bool any = false;
      for (std::size_t j = 0; j < n; ++j) {
        row[j] = cols[j][k];
        any |= !row[j].is_zero();
      }
      if (any) rows.push_back(std::move(row));
    }
  }
  return Subalgebra(n, rows.empty() ? identity<Rational>(n) : kernel(rows, n));
}

Subalgebra center(const LieRealization& lr, const Subalgebra& s) {
  const std::size_t n = lr.dim(), d = s.dim();
  Mat<Rational> rows;
  for (std::size_t b = 0; b < d; ++b) {
    Mat<Rational> cols(d);
    for (std::size_t a = 0; a < d; ++a) cols[a] = lr.bracket(s.basis()[a], s.basis()[b]);
    for (std::size_t k = 0; k < n; ++k) {
      Vec<Rational> row(d);
      bool any = false;
      for (std::size_t a = 0; a < d; ++a) {
        row[a] = cols[a][k];
        any |= !row[a].is_zero();
      }
      if (any) rows.push_back(std::move(row));
    }
  }
  Subalgebra out(n);
  const Mat<Rational> sol = rows.empty() ? identity<Rational>(d) : kernel(rows, d);
  for (const auto& c : sol) {
    Vec<Rational> z(n, Rational(0));
    for (std::size_t a = 0; a < d; ++a) axpy(z, c[a], s.basis()[a]);
    out.insert(z);
  }
  return out;
}

// ------------------------------------------------------------ B_{Theta,T}

BTheta build_b_theta(const LieRealization& lr, const SatakeIndex& idx, const ThetaSubset& theta,
                     const AdmissibilityContext& ctx) {
  return build_b_theta(lr, idx, theta, weight_decomposition(lr), ctx);
}

BTheta build_b_theta(const LieRealization& lr, const SatakeIndex& idx, const ThetaSubset& theta,
                     const std::vector<WeightSpace>& weights, const AdmissibilityContext& ctx) {
  require_valid(idx);
  if (lr.index.digest() != idx.digest())
    throw Error(ErrorCode::realization_invalid, lr.form_id + " is paired with a different index");
  const auto rrs = restricted_system(idx);
  const auto cert = is_admissible(idx, rrs, theta, ctx);
  if (!cert.admissible)
    throw Error(ErrorCode::not_admissible,
                "theta {" + theta_string(rrs, cert.theta) + "} is not admissible: " + cert.reason);
  const std::size_t n = lr.dim();
  BTheta out{cert.theta, Subalgebra(n), Subalgebra(n), Subalgebra(n), Subalgebra(n), Subalgebra(n)};
  for (const auto& ws : weights) {
    if (in_theta_span(ws.restricted, out.theta)) {
      out.levi.insert_all(ws.space.basis());
    } else if (std::all_of(ws.restricted.begin(), ws.restricted.end(), [](int x) { return x >= 0; })) {
      out.nilrad.insert_all(ws.space.basis());
    }
  }
  out.center = center(lr, out.levi);
  const auto pd = parabolic(idx, rrs, out.theta);
  if (pd.levi_subindex.rank() > 0) {
    auto it = lr.aniso.find(out.theta);
    if (it == lr.aniso.end())
      throw Error(ErrorCode::realization_invalid,
                  lr.form_id + ": no anisotropic Cartan designated for {" + theta_string(rrs, out.theta) + "}");
    out.torus.insert_all(it->second);
  }
  if (!out.levi.contains(out.torus))
    throw Error(ErrorCode::realization_invalid, lr.form_id + ": designated torus is not in the Levi");
  out.b = out.torus;
  out.b.insert_all(out.center.basis());
  out.b.insert_all(out.nilrad.basis());
  if (!is_subalgebra(lr, out.b))
    throw Error(ErrorCode::internal, lr.form_id + ": b_theta is not closed under the bracket");
  return out;
}

// ------------------------------------------------------------ certificates

MaximalityCertificate certify_maximal_solvable(const LieRealization& lr, const Subalgebra& s) {
  return certify_maximal_solvable(lr, s, weight_decomposition(lr));
}

MaximalityCertificate certify_maximal_solvable(const LieRealization& lr, const Subalgebra& s,
                                               const std::vector<WeightSpace>& weights) {
  if (!is_solvable(lr, s)) throw Error(ErrorCode::argument, "subalgebra is not solvable");
  std::vector<std::pair<Vec<Rational>, std::string>> candidates;
  std::set<Vec<Rational>> seen;
  auto add = [&](const Vec<Rational>& x, const std::string& source) {
    if (s.contains(x) || !seen.insert(x).second) return;
    candidates.emplace_back(x, source);
  };
  auto weight_name = [](const IntVec& w) {
    std::string out = "weight (";
    for (std::size_t i = 0; i < w.size(); ++i) out += (i ? "," : "") + std::to_string(w[i]);
    return out + ")";
  };
  for (const auto& ws : weights)
    for (const auto& x : ws.space.basis()) add(x, weight_name(ws.restricted));
  const auto norm = normalizer(lr, s);
  for (const auto& x : norm.basis()) add(x, "normalizer");
  const auto derived_norm = normalizer(lr, bracket_span(lr, s, s));
  for (const auto& ws : weights) {
    const auto piece = intersect(derived_norm, ws.space);
    for (const auto& x : piece.basis())
      add(x, "normalizer of [s,s] in " + weight_name(ws.restricted));
  }

  MaximalityCertificate cert;
  for (auto& [x, source] : candidates) {
    Mat<Rational> gens = s.basis();
    gens.push_back(x);
    auto g = generated_subalgebra(lr, gens);
    AdjunctionTest t{x, source, g.dim(), is_solvable(lr, g)};
    if (t.solvable && cert.maximal) {
      cert.maximal = false;
      cert.witness = x;
    }
    cert.tests.push_back(std::move(t));
  }
  return cert;
}

Lemma1Result lemma1_check(const LieRealization& lr) {
  if (lr.compact_cartan.empty())
    throw Error(ErrorCode::not_anisotropic, lr.form_id + ": no compact Cartan designated");
  return lemma1_check(lr, lr.compact_cartan);
}

Lemma1Result lemma1_check(const LieRealization& lr, const Mat<Rational>& t) {
  const std::size_t n = lr.dim();
  if (t.empty()) throw Error(ErrorCode::not_anisotropic, "empty torus");
  std::vector<Mat<Gaussian>> ops;
  std::vector<Mat<Rational>> ads;
  for (const auto& x : t) {
    ads.push_back(lr.ad(x));
    Mat<Gaussian> g;
    for (const auto& row : ads.back()) g.push_back(to_gaussian(row));
    ops.push_back(std::move(g));
  }
  auto pieces = joint_eigenspaces<Gaussian>(ops, n, [](const Rational& q) { return Gaussian(Rational(0), q); });
  if (!pieces)
    throw Error(ErrorCode::not_anisotropic,
                lr.form_id + ": ad(t) has eigenvalues off the imaginary axis; t is not anisotropic");

  Lemma1Result res;
  const Span<Rational> tspan(n, t);
  Span<Gaussian> tg(n);
  for (const auto& x : tspan.basis()) tg.insert(to_gaussian(x));
  Mat<Rational> flat;
  for (const auto& m : ads) {
    Vec<Rational> f;
    for (const auto& row : m) f.insert(f.end(), row.begin(), row.end());
    flat.push_back(std::move(f));
  }
  if (rank_of(flat, n * n) != tspan.dim()) {
    res.verdict = Lemma1Verdict::inconclusive;
    res.reason = "ad is not injective on t";
    return res;
  }

  auto nilpotent = [&](const Vec<Rational>& x) {
    const auto a = lr.ad(x);
    auto p = a;
    for (std::size_t k = 1; k < n; ++k) {
      if (is_zero_mat(p)) return true;
      p = mat_mul(p, a);
    }
    return is_zero_mat(p);
  };

  // Zero piece first, then one piece per conjugate pair {mu, -mu}.
  std::sort(pieces->begin(), pieces->end(), [](const auto& a, const auto& b) {
    return is_zero_vec(a.first) && !is_zero_vec(b.first);
  });
  for (const auto& [mu, space] : *pieces) {
    Lemma1Piece piece;
    piece.eigen = mu;
    if (is_zero_vec(mu)) {
      if (!(space == tg)) {
        res.verdict = Lemma1Verdict::inconclusive;
        res.reason = "centralizer of t is larger than t";
        return res;
      }
      piece.real_dim = tspan.dim();
      piece.non_nilpotent = tspan.basis().front();
      res.pieces.push_back(std::move(piece));
      continue;
    }
    const auto lead = std::find_if(mu.begin(), mu.end(), [](const Gaussian& g) { return !g.is_zero(); });
    if (lead->im().sign() < 0) continue;  // handled with its conjugate
    if (space.dim() != 1) {
      res.verdict = Lemma1Verdict::inconclusive;
      res.reason = "eigenvalue of multiplicity " + std::to_string(space.dim());
      return res;
    }
    Vec<Rational> re(n), im(n);
    for (std::size_t k = 0; k < n; ++k) {
      re[k] = space.basis()[0][k].re();
      im[k] = space.basis()[0][k].im();
    }
    piece.real_dim = 2;
    Vec<Rational> both = re;
    axpy(both, Rational(1), im);
    for (const auto& cand : {re, im, both})
      if (!is_zero_vec(cand) && !nilpotent(cand)) {
        piece.non_nilpotent = cand;
        break;
      }
    if (!piece.non_nilpotent) {
      res.verdict = Lemma1Verdict::inconclusive;
      res.reason = "no non-nilpotent element found in an invariant plane";
      res.pieces.push_back(std::move(piece));
      return res;
    }
    res.pieces.push_back(std::move(piece));
  }
  res.reason = "every minimal ad(t)-stable subspace contains a non-nilpotent element";
  return res;
}

}  // namespace maxsolv
