#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "fockdual/amplitude.hpp"
#include "fockdual/sparse_operator.hpp"
#include "fockdual/surd.hpp"

namespace fockdual {

/// Gaussian rational a + b i with GMP rationals.
struct GaussRat {
  mpq_class re{0};
  mpq_class im{0};

  GaussRat() = default;
  GaussRat(long n) : re(n) {}  // NOLINT
  GaussRat(mpq_class r, mpq_class i) : re(std::move(r)), im(std::move(i)) {}

  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
  GaussRat conj() const { return {re, -im}; }

  GaussRat& operator+=(const GaussRat& o);
  GaussRat& operator-=(const GaussRat& o);
  GaussRat& operator*=(const GaussRat& o);
  GaussRat& operator/=(const GaussRat& o);
  friend GaussRat operator+(GaussRat a, const GaussRat& b) { return a += b; }
  friend GaussRat operator-(GaussRat a, const GaussRat& b) { return a -= b; }
  friend GaussRat operator*(GaussRat a, const GaussRat& b) { return a *= b; }
  friend GaussRat operator/(GaussRat a, const GaussRat& b) { return a /= b; }
  GaussRat operator-() const { return {-re, -im}; }
  bool operator==(const GaussRat& o) const { return re == o.re && im == o.im; }

  std::string str() const;
};

/// Element a + b*sqrt2 of Q(i, sqrt2), with a, b Gaussian rationals.
struct QSqrt2 {
  GaussRat a;
  GaussRat b;

  QSqrt2() = default;
  QSqrt2(long n) : a(n) {}  // NOLINT
  QSqrt2(GaussRat x, GaussRat y = {}) : a(std::move(x)), b(std::move(y)) {}

  bool is_zero() const { return a.is_zero() && b.is_zero(); }
  QSqrt2 conj() const { return {a.conj(), b.conj()}; }

  QSqrt2& operator+=(const QSqrt2& o);
  QSqrt2& operator-=(const QSqrt2& o);
  QSqrt2& operator*=(const QSqrt2& o);
  QSqrt2& operator/=(const QSqrt2& o);
  friend QSqrt2 operator+(QSqrt2 x, const QSqrt2& y) { return x += y; }
  friend QSqrt2 operator-(QSqrt2 x, const QSqrt2& y) { return x -= y; }
  friend QSqrt2 operator*(QSqrt2 x, const QSqrt2& y) { return x *= y; }
  friend QSqrt2 operator/(QSqrt2 x, const QSqrt2& y) { return x /= y; }
  QSqrt2 operator-() const { return {-a, -b}; }
  bool operator==(const QSqrt2& o) const { return a == o.a && b == o.b; }

  std::string str() const;
};

template <>
struct ScalarTraits<GaussRat> {
  static constexpr bool exact = true;
  static bool is_zero(const GaussRat& a) { return a.is_zero(); }
  static GaussRat conj(const GaussRat& a) { return a.conj(); }
  static Complex to_complex(const GaussRat& a) { return {a.re.get_d(), a.im.get_d()}; }
};

template <>
struct ScalarTraits<QSqrt2> {
  static constexpr bool exact = true;
  static bool is_zero(const QSqrt2& a) { return a.is_zero(); }
  static QSqrt2 conj(const QSqrt2& a) { return a.conj(); }
  static Complex to_complex(const QSqrt2& a) {
    const double r2 = 1.4142135623730951;
    return {a.a.re.get_d() + r2 * a.b.re.get_d(), a.a.im.get_d() + r2 * a.b.im.get_d()};
  }
};

template <>
inline QSqrt2 Surd<QSqrt2>::sqrt2_value() {
  return QSqrt2(GaussRat(0), GaussRat(1));
}

QSqrt2 to_qsqrt2(const Amplitude& x);
/// Throws std::domain_error when x has a sqrt2 component.
GaussRat to_gaussrat(const Amplitude& x);

/// Basis of the right nullspace of a dense matrix, in reduced-echelon normal form:
/// each vector has a 1 in its own free column and 0 in the other free columns.
template <class F>
std::vector<std::vector<F>> nullspace(std::vector<std::vector<F>> a, std::size_t ncols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < a.size(); ++c) {
    std::size_t piv = r;
    while (piv < a.size() && a[piv][c].is_zero()) ++piv;
    if (piv == a.size()) continue;
    std::swap(a[r], a[piv]);
    const F inv = F(1) / a[r][c];
    for (std::size_t j = c; j < ncols; ++j)
      if (!a[r][j].is_zero()) a[r][j] *= inv;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == r || a[i][c].is_zero()) continue;
      const F f = a[i][c];
      for (std::size_t j = c; j < ncols; ++j)
        if (!a[r][j].is_zero()) a[i][j] -= f * a[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  std::vector<char> is_pivot(ncols, 0);
  for (auto c : pivots) is_pivot[c] = 1;
  std::vector<std::vector<F>> basis;
  for (std::size_t f = 0; f < ncols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<F> v(ncols);
    v[f] = F(1);
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -a[i][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Rank of a dense matrix.
template <class F>
std::size_t matrix_rank(std::vector<std::vector<F>> a, std::size_t ncols) {
  return ncols - nullspace(std::move(a), ncols).size();
}

/// Applies an exact operator to a field-valued sparse vector.
template <class F, class Conv>
SparseVector<F> apply_converted(const SparseOperator<Amplitude>& op, const SparseVector<F>& v, Conv conv) {
  std::vector<std::pair<std::uint32_t, F>> acc;
  for (const auto& [j, x] : v)
    for (std::size_t idx = op.col_begin(j); idx < op.col_end(j); ++idx) acc.emplace_back(op.row_at(idx), conv(op.val_at(idx)) * x);
  std::stable_sort(acc.begin(), acc.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  SparseVector<F> out;
  for (auto& [i, x] : acc) {
    if (!out.empty() && out.back().first == i) {
      out.back().second += x;
    } else {
      out.emplace_back(i, std::move(x));
    }
  }
  std::erase_if(out, [](const auto& e) { return e.second.is_zero(); });
  return out;
}

inline SparseVector<GaussRat> apply_exact(const SparseOperator<Amplitude>& op, const SparseVector<GaussRat>& v) {
  return apply_converted(op, v, [](const Amplitude& a) { return to_gaussrat(a); });
}

inline SparseVector<QSqrt2> apply_exact(const SparseOperator<Amplitude>& op, const SparseVector<QSqrt2>& v) {
  return apply_converted(op, v, [](const Amplitude& a) { return to_qsqrt2(a); });
}

/// The scalar c with u = c v, if one exists. Both vectors must be nonzero.
template <class F>
std::optional<F> proportionality(const SparseVector<F>& u, const SparseVector<F>& v) {
  if (u.size() != v.size() || v.empty()) return std::nullopt;
  const F c = u.front().second / v.front().second;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i].first != v[i].first) return std::nullopt;
    if (!(u[i].second == c * v[i].second)) return std::nullopt;
  }
  return c;
}

template <class F>
SparseVector<F> to_field_vector(const SparseVector<Amplitude>& v) {
  SparseVector<F> out;
  for (const auto& [i, x] : v) {
    if constexpr (std::is_same_v<F, QSqrt2>) {
      out.emplace_back(i, to_qsqrt2(x));
    } else {
      out.emplace_back(i, to_gaussrat(x));
    }
  }
  return out;
}

}  // namespace fockdual
