#pragma once

#include <algorithm>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "fockdual/amplitude.hpp"

namespace fockdual {

/// Tolerance used whenever operators carry floating-point amplitudes.
inline constexpr double kFloatTolerance = 1e-9;

using Complex = std::complex<double>;

template <class S>
struct ScalarTraits;

template <>
struct ScalarTraits<Amplitude> {
  static constexpr bool exact = true;
  static bool is_zero(const Amplitude& a) { return a.is_zero(); }
  static Amplitude conj(const Amplitude& a) { return a.conj(); }
  static Complex to_complex(const Amplitude& a) { return a.to_complex(); }
};

template <>
struct ScalarTraits<Complex> {
  static constexpr bool exact = false;
  static bool is_zero(const Complex& a) { return a == Complex{}; }
  static Complex conj(const Complex& a) { return std::conj(a); }
  static Complex to_complex(const Complex& a) { return a; }
};

/// Sparse vector over the Fock basis: (index, value) pairs, ascending index, no zeros.
template <class S>
using SparseVector = std::vector<std::pair<std::uint32_t, S>>;

/// Linear map on a 2^n dimensional Fock space in compressed-column form.
/// Rows within a column are ascending and no stored value is zero.
template <class S>
class SparseOperator {
 public:
  using Entry = std::pair<std::uint32_t, S>;

  SparseOperator() = default;
  explicit SparseOperator(std::size_t dim) : dim_(dim), colptr_(dim + 1, 0) {}

  static SparseOperator identity(std::size_t dim) {
    SparseOperator op(dim);
    op.rows_.resize(dim);
    op.vals_.assign(dim, S(1));
    for (std::size_t j = 0; j < dim; ++j) {
      op.colptr_[j + 1] = j + 1;
      op.rows_[j] = static_cast<std::uint32_t>(j);
    }
    return op;
  }

  static SparseOperator zero(std::size_t dim) { return SparseOperator(dim); }

  /// Builds from unsorted column lists; duplicate rows are summed and zeros dropped.
  static SparseOperator from_columns(std::vector<std::vector<Entry>> cols) {
    SparseOperator op(cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
      auto& c = cols[j];
      std::stable_sort(c.begin(), c.end(),
                       [](const Entry& a, const Entry& b) { return a.first < b.first; });
      std::size_t i = 0;
      while (i < c.size()) {
        S acc = c[i].second;
        std::size_t k = i + 1;
        while (k < c.size() && c[k].first == c[i].first) acc += c[k++].second;
        if (!ScalarTraits<S>::is_zero(acc)) {
          op.rows_.push_back(c[i].first);
          op.vals_.push_back(acc);
        }
        i = k;
      }
      op.colptr_[j + 1] = op.rows_.size();
    }
    return op;
  }

  std::size_t dim() const { return dim_; }
  std::size_t nnz() const { return rows_.size(); }
  bool is_zero() const { return rows_.empty(); }

  std::size_t col_begin(std::size_t j) const { return colptr_[j]; }
  std::size_t col_end(std::size_t j) const { return colptr_[j + 1]; }
  std::uint32_t row_at(std::size_t idx) const { return rows_[idx]; }
  const S& val_at(std::size_t idx) const { return vals_[idx]; }

  S entry(std::size_t row, std::size_t col) const {
    auto b = rows_.begin() + colptr_[col];
    auto e = rows_.begin() + colptr_[col + 1];
    auto it = std::lower_bound(b, e, static_cast<std::uint32_t>(row));
    if (it == e || *it != row) return S{};
    return vals_[it - rows_.begin()];
  }

  SparseVector<S> column(std::size_t j) const {
    SparseVector<S> out;
    for (std::size_t idx = colptr_[j]; idx < colptr_[j + 1]; ++idx) out.emplace_back(rows_[idx], vals_[idx]);
    return out;
  }

  SparseOperator scaled(const S& s) const {
    if (ScalarTraits<S>::is_zero(s)) return zero(dim_);
    SparseOperator r = *this;
    for (auto& v : r.vals_) v *= s;
    return r;
  }

  SparseOperator adjoint() const {
    std::vector<std::vector<Entry>> cols(dim_);
    for (std::size_t j = 0; j < dim_; ++j)
      for (std::size_t idx = colptr_[j]; idx < colptr_[j + 1]; ++idx)
        cols[rows_[idx]].emplace_back(static_cast<std::uint32_t>(j), ScalarTraits<S>::conj(vals_[idx]));
    return from_columns(std::move(cols));
  }

  template <class T, class Conv>
  SparseOperator<T> convert(Conv conv) const {
    std::vector<std::vector<typename SparseOperator<T>::Entry>> cols(dim_);
    for (std::size_t j = 0; j < dim_; ++j)
      for (std::size_t idx = colptr_[j]; idx < colptr_[j + 1]; ++idx)
        cols[j].emplace_back(rows_[idx], conv(vals_[idx]));
    return SparseOperator<T>::from_columns(std::move(cols));
  }

  SparseOperator<Complex> to_complex() const {
    return convert<Complex>([](const S& s) { return ScalarTraits<S>::to_complex(s); });
  }

  bool operator==(const SparseOperator& o) const {
    return dim_ == o.dim_ && colptr_ == o.colptr_ && rows_ == o.rows_ && vals_ == o.vals_;
  }

  friend SparseOperator operator+(const SparseOperator& a, const SparseOperator& b) {
    return combine(a, b, false);
  }
  friend SparseOperator operator-(const SparseOperator& a, const SparseOperator& b) {
    return combine(a, b, true);
  }
  friend SparseOperator operator*(const SparseOperator& a, const SparseOperator& b) {
    return compose(a, b);
  }

  static SparseOperator compose(const SparseOperator& a, const SparseOperator& b) {
    check_dims(a, b);
    const std::size_t n = a.dim_;
    SparseOperator out(n);
    std::vector<S> acc(n);
    std::vector<char> mark(n, 0);
    std::vector<std::uint32_t> touched;
    for (std::size_t j = 0; j < n; ++j) {
      touched.clear();
      for (std::size_t kb = b.colptr_[j]; kb < b.colptr_[j + 1]; ++kb) {
        const std::uint32_t k = b.rows_[kb];
        const S& bv = b.vals_[kb];
        for (std::size_t ka = a.colptr_[k]; ka < a.colptr_[k + 1]; ++ka) {
          const std::uint32_t i = a.rows_[ka];
          if (!mark[i]) {
            mark[i] = 1;
            acc[i] = a.vals_[ka] * bv;
            touched.push_back(i);
          } else {
            acc[i] += a.vals_[ka] * bv;
          }
        }
      }
      std::sort(touched.begin(), touched.end());
      for (std::uint32_t i : touched) {
        if (!ScalarTraits<S>::is_zero(acc[i])) {
          out.rows_.push_back(i);
          out.vals_.push_back(acc[i]);
        }
        mark[i] = 0;
      }
      out.colptr_[j + 1] = out.rows_.size();
    }
    return out;
  }

 private:
  std::size_t dim_ = 0;
  std::vector<std::size_t> colptr_{0};
  std::vector<std::uint32_t> rows_;
  std::vector<S> vals_;

  static void check_dims(const SparseOperator& a, const SparseOperator& b) {
    if (a.dim_ != b.dim_) throw std::domain_error("operator dimension mismatch");
  }

  static SparseOperator combine(const SparseOperator& a, const SparseOperator& b, bool subtract) {
    check_dims(a, b);
    SparseOperator out(a.dim_);
    for (std::size_t j = 0; j < a.dim_; ++j) {
      std::size_t ia = a.colptr_[j], ea = a.colptr_[j + 1];
      std::size_t ib = b.colptr_[j], eb = b.colptr_[j + 1];
      while (ia < ea || ib < eb) {
        if (ib == eb || (ia < ea && a.rows_[ia] < b.rows_[ib])) {
          out.rows_.push_back(a.rows_[ia]);
          out.vals_.push_back(a.vals_[ia]);
          ++ia;
        } else if (ia == ea || b.rows_[ib] < a.rows_[ia]) {
          out.rows_.push_back(b.rows_[ib]);
          out.vals_.push_back(subtract ? S{} - b.vals_[ib] : b.vals_[ib]);
          ++ib;
        } else {
          S v = subtract ? a.vals_[ia] - b.vals_[ib] : a.vals_[ia] + b.vals_[ib];
          if (!ScalarTraits<S>::is_zero(v)) {
            out.rows_.push_back(a.rows_[ia]);
            out.vals_.push_back(v);
          }
          ++ia;
          ++ib;
        }
      }
      out.colptr_[j + 1] = out.rows_.size();
    }
    return out;
  }
};

template <class S>
SparseOperator<S> commutator(const SparseOperator<S>& a, const SparseOperator<S>& b) {
  return a * b - b * a;
}

template <class S>
SparseOperator<S> anticommutator(const SparseOperator<S>& a, const SparseOperator<S>& b) {
  return a * b + b * a;
}

/// Largest entry modulus of a - b.
template <class S>
double max_abs_diff(const SparseOperator<S>& a, const SparseOperator<S>& b) {
  const auto d = a - b;
  double m = 0.0;
  for (std::size_t idx = 0; idx < d.nnz(); ++idx)
    m = std::max(m, std::abs(ScalarTraits<S>::to_complex(d.val_at(idx))));
  return m;
}

/// Exact equality for exact scalars, kFloatTolerance otherwise.
template <class S>
bool same_operator(const SparseOperator<S>& a, const SparseOperator<S>& b) {
  if constexpr (ScalarTraits<S>::exact) {
    return a == b;
  } else {
    return a.dim() == b.dim() && max_abs_diff(a, b) <= kFloatTolerance;
  }
}

template <class S>
bool is_null(const SparseOperator<S>& a) {
  if constexpr (ScalarTraits<S>::exact) {
    return a.is_zero();
  } else {
    return max_abs_diff(a, SparseOperator<S>::zero(a.dim())) <= kFloatTolerance;
  }
}

template <class S>
SparseVector<S> apply(const SparseOperator<S>& op, const SparseVector<S>& v) {
  std::vector<typename SparseOperator<S>::Entry> acc;
  for (const auto& [j, x] : v)
    for (std::size_t idx = op.col_begin(j); idx < op.col_end(j); ++idx) acc.emplace_back(op.row_at(idx), op.val_at(idx) * x);
  std::stable_sort(acc.begin(), acc.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  SparseVector<S> out;
  for (const auto& [i, x] : acc) {
    if (!out.empty() && out.back().first == i) {
      out.back().second += x;
    } else {
      out.emplace_back(i, x);
    }
  }
  std::erase_if(out, [](const auto& e) { return ScalarTraits<S>::is_zero(e.second); });
  return out;
}

}  // namespace fockdual
