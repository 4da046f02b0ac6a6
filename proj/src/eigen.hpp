#pragma once

// Exact simultaneous eigenspaces for commuting operators whose eigenvalues
// lie on a known line (rationals, or i times rationals).

#include "linalg.hpp"

#include <functional>
#include <optional>
#include <utility>
#include <vector>

namespace maxsolv {

namespace detail {

inline void den_lcm(mpz_class& acc, const Rational& r) { acc = lcm_den(acc, r); }
inline void den_lcm(mpz_class& acc, const Gaussian& g) {
  acc = lcm_den(acc, g.re());
  acc = lcm_den(acc, g.im());
}
inline mpq_class abs_bound(const Rational& r) { return abs(r.raw()); }
inline mpq_class abs_bound(const Gaussian& g) { return abs(g.re().raw()) + abs(g.im().raw()); }

}  // namespace detail

// Splits F^n into joint eigenspaces of `ops`. Each eigenvalue is
// make(k/D) for an integer k, where D clears all denominators; the search
// is bounded by Gershgorin. Returns nullopt when some operator is not
// diagonalizable with eigenvalues of that shape.
template <class F>
std::optional<std::vector<std::pair<std::vector<F>, Span<F>>>> joint_eigenspaces(
    const std::vector<Mat<F>>& ops, std::size_t n, const std::function<F(const Rational&)>& make) {
  std::vector<std::pair<std::vector<F>, Span<F>>> cur;
  {
    Span<F> all(n);
    for (std::size_t i = 0; i < n; ++i) all.insert(unit_vec<F>(n, i));
    cur.emplace_back(std::vector<F>{}, std::move(all));
  }
  for (const auto& op : ops) {
    std::vector<std::pair<std::vector<F>, Span<F>>> next;
    for (auto& [eig, space] : cur) {
      const std::size_t d = space.dim();
      // Matrix of op restricted to the invariant subspace, in its echelon basis.
      Mat<F> r(d, Vec<F>(d, F(0)));
      for (std::size_t b = 0; b < d; ++b) {
        auto c = space.coordinates(mat_vec(op, space.basis()[b]));
        if (!c) throw Error(ErrorCode::internal, "operators do not commute");
        for (std::size_t a = 0; a < d; ++a) r[a][b] = (*c)[a];
      }
      mpz_class den = 1;
      for (const auto& row : r)
        for (const auto& x : row) detail::den_lcm(den, x);
      mpq_class bound = 0;
      for (const auto& row : r) {
        mpq_class s = 0;
        for (const auto& x : row) s += detail::abs_bound(x);
        if (s > bound) bound = s;
      }
      const mpq_class scaled_bound = bound * den;
      mpz_class kmax(scaled_bound);
      kmax += 1;
      std::size_t found = 0;
      auto try_value = [&](const mpz_class& k) {
        const F lambda = make(Rational(mpq_class(k, den)));
        Mat<F> shifted = r;
        for (std::size_t a = 0; a < d; ++a) shifted[a][a] -= lambda;
        auto ker = kernel(shifted, d);
        if (ker.empty()) return;
        Span<F> sub(n);
        for (const auto& c : ker) {
          Vec<F> v(n, F(0));
          for (std::size_t a = 0; a < d; ++a) axpy(v, c[a], space.basis()[a]);
          sub.insert(v);
        }
        found += sub.dim();
        auto e = eig;
        e.push_back(lambda);
        next.emplace_back(std::move(e), std::move(sub));
      };
      for (mpz_class k = 0; k <= kmax && found < d; ++k) {
        try_value(k);
        if (k != 0 && found < d) try_value(-k);
      }
      if (found != d) return std::nullopt;
    }
    cur = std::move(next);
  }
  return cur;
}

}  // namespace maxsolv
