#pragma once

// Exact dense linear algebra over a field F (Rational or Gaussian).
// Everything here is small (dimension <= a few dozen), so dense rows are fine.

#include "error.hpp"
#include "scalar.hpp"

#include <algorithm>
#include <cstddef>
#include <optional>
#include <vector>

namespace maxsolv {

template <class F>
using Vec = std::vector<F>;

template <class F>
using Mat = std::vector<Vec<F>>;  // row-major

template <class F>
bool is_zero_vec(const Vec<F>& v) {
  return std::all_of(v.begin(), v.end(), [](const F& x) { return x.is_zero(); });
}

template <class F>
Vec<F> zero_vec(std::size_t n) {
  return Vec<F>(n, F(0));
}

template <class F>
Vec<F> unit_vec(std::size_t n, std::size_t i) {
  Vec<F> v(n, F(0));
  v[i] = F(1);
  return v;
}

template <class F>
void axpy(Vec<F>& y, const F& a, const Vec<F>& x) {
  if (a.is_zero()) return;
  for (std::size_t i = 0; i < y.size(); ++i)
    if (!x[i].is_zero()) y[i] += a * x[i];
}

template <class F>
Vec<F> scaled(const Vec<F>& v, const F& a) {
  Vec<F> out(v);
  for (auto& x : out) x *= a;
  return out;
}

template <class F>
Vec<F> mat_vec(const Mat<F>& m, const Vec<F>& v) {
  Vec<F> out(m.size(), F(0));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j)
      if (!m[i][j].is_zero() && !v[j].is_zero()) out[i] += m[i][j] * v[j];
  return out;
}

template <class F>
Mat<F> mat_mul(const Mat<F>& a, const Mat<F>& b) {
  std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
  Mat<F> out(n, Vec<F>(m, F(0)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < k; ++l) {
      if (a[i][l].is_zero()) continue;
      for (std::size_t j = 0; j < m; ++j)
        if (!b[l][j].is_zero()) out[i][j] += a[i][l] * b[l][j];
    }
  return out;
}

template <class F>
Mat<F> identity(std::size_t n) {
  Mat<F> out(n, Vec<F>(n, F(0)));
  for (std::size_t i = 0; i < n; ++i) out[i][i] = F(1);
  return out;
}

template <class F>
bool is_zero_mat(const Mat<F>& m) {
  return std::all_of(m.begin(), m.end(), [](const Vec<F>& r) { return is_zero_vec(r); });
}

// Subspace of F^n stored as a reduced row echelon basis. Two equal subspaces
// always have identical row lists.
template <class F>
class Span {
public:
  Span() = default;
  explicit Span(std::size_t ambient) : n_(ambient) {}
  Span(std::size_t ambient, const Mat<F>& vectors) : n_(ambient) {
    for (const auto& v : vectors) insert(v);
  }

  std::size_t ambient() const { return n_; }
  std::size_t dim() const { return rows_.size(); }
  const Mat<F>& basis() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  // Remainder of v after eliminating all pivot columns.
  Vec<F> reduce(Vec<F> v) const {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const F c = v[pivots_[r]];
      if (!c.is_zero()) axpy(v, -c, rows_[r]);
    }
    return v;
  }

  bool contains(const Vec<F>& v) const { return is_zero_vec(reduce(v)); }

  bool contains(const Span& other) const {
    return std::all_of(other.rows_.begin(), other.rows_.end(),
                       [&](const Vec<F>& v) { return contains(v); });
  }

  // Returns true when v enlarged the span.
  bool insert(const Vec<F>& v) {
    if (v.size() != n_) throw Error(ErrorCode::internal, "span dimension mismatch");
    Vec<F> w = reduce(v);
    std::size_t p = 0;
    while (p < n_ && w[p].is_zero()) ++p;
    if (p == n_) return false;
    const F inv = F(1) / w[p];
    for (auto& x : w) x *= inv;
    for (auto& row : rows_) {
      const F c = row[p];
      if (!c.is_zero()) axpy(row, -c, w);
    }
    auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), p) - pivots_.begin();
    pivots_.insert(pivots_.begin() + pos, p);
    rows_.insert(rows_.begin() + pos, std::move(w));
    return true;
  }

  void insert_all(const Mat<F>& vs) {
    for (const auto& v : vs) insert(v);
  }

  // Coordinates of v in the echelon basis (v must lie in the span).
  std::optional<Vec<F>> coordinates(const Vec<F>& v) const {
    if (!contains(v)) return std::nullopt;
    Vec<F> c(rows_.size(), F(0));
    for (std::size_t r = 0; r < rows_.size(); ++r) c[r] = v[pivots_[r]];
    return c;
  }

  friend bool operator==(const Span& a, const Span& b) {
    return a.n_ == b.n_ && a.rows_ == b.rows_;
  }

private:
  std::size_t n_ = 0;
  Mat<F> rows_;
  std::vector<std::size_t> pivots_;
};

// Null space {x : m x = 0} of an r x n matrix, as a basis list.
template <class F>
Mat<F> kernel(Mat<F> m, std::size_t n) {
  std::vector<std::size_t> pivot_cols;
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < m.size(); ++col) {
    std::size_t sel = row;
    while (sel < m.size() && m[sel][col].is_zero()) ++sel;
    if (sel == m.size()) continue;
    std::swap(m[row], m[sel]);
    const F inv = F(1) / m[row][col];
    for (auto& x : m[row]) x *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row) continue;
      const F c = m[r][col];
      if (!c.is_zero()) axpy(m[r], -c, m[row]);
    }
    pivot_cols.push_back(col);
    ++row;
  }
  Mat<F> out;
  std::vector<bool> is_pivot(n, false);
  for (auto c : pivot_cols) is_pivot[c] = true;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    Vec<F> x(n, F(0));
    x[free] = F(1);
    for (std::size_t r = 0; r < pivot_cols.size(); ++r) x[pivot_cols[r]] = -m[r][free];
    out.push_back(std::move(x));
  }
  return out;
}

template <class F>
std::size_t rank_of(const Mat<F>& vectors, std::size_t n) {
  return Span<F>(n, vectors).dim();
}

// Intersection of two subspaces of F^n.
template <class F>
Span<F> intersect(const Span<F>& a, const Span<F>& b) {
  const std::size_t n = a.ambient();
  // Solve sum x_i a_i - sum y_j b_j = 0.
  const std::size_t da = a.dim(), db = b.dim();
  Mat<F> sys(n, Vec<F>(da + db, F(0)));
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t k = 0; k < n; ++k) sys[k][i] = a.basis()[i][k];
  for (std::size_t j = 0; j < db; ++j)
    for (std::size_t k = 0; k < n; ++k) sys[k][da + j] = -b.basis()[j][k];
  Span<F> out(n);
  for (const auto& sol : kernel(sys, da + db)) {
    Vec<F> v(n, F(0));
    for (std::size_t i = 0; i < da; ++i) axpy(v, sol[i], a.basis()[i]);
    out.insert(v);
  }
  return out;
}

template <class F>
Span<F> sum(const Span<F>& a, const Span<F>& b) {
  Span<F> out = a;
  out.insert_all(b.basis());
  return out;
}

// Coefficients c with sum_i c_i gens[i] = target, or nullopt when target is
// outside the span. gens must be linearly independent.
template <class F>
std::optional<Vec<F>> solve_combination(const Mat<F>& gens, const Vec<F>& target) {
  const std::size_t n = target.size(), g = gens.size();
  Mat<F> sys(n, Vec<F>(g + 1, F(0)));
  for (std::size_t i = 0; i < g; ++i)
    for (std::size_t k = 0; k < n; ++k) sys[k][i] = gens[i][k];
  for (std::size_t k = 0; k < n; ++k) sys[k][g] = -target[k];
  for (const auto& sol : kernel(sys, g + 1)) {
    if (sol[g].is_zero()) continue;
    const F inv = F(1) / sol[g];
    Vec<F> c(g);
    for (std::size_t i = 0; i < g; ++i) c[i] = sol[i] * inv;
    return c;
  }
  return std::nullopt;
}

// Lift a rational vector into the Gaussian field.
inline Vec<Gaussian> to_gaussian(const Vec<Rational>& v) {
  Vec<Gaussian> out;
  out.reserve(v.size());
  for (const auto& x : v) out.emplace_back(x);
  return out;
}

}  // namespace maxsolv
