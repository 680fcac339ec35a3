#pragma once

#include <cmath>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "fockdual/sparse_operator.hpp"

namespace fockdual {

/// Sum of c_r * sqrt(r) over odd squarefree r, with coefficients in S. The square
/// roots of distinct odd squarefree integers are linearly independent over Q(i, sqrt2),
/// so the sparse form is canonical and zero testing is exact.
template <class S>
class Surd {
 public:
  Surd() = default;
  Surd(long n) {  // NOLINT
    if (n != 0) terms_.emplace_back(1, S(n));
  }
  Surd(S c) {  // NOLINT
    if (!ScalarTraits<S>::is_zero(c)) terms_.emplace_back(1, std::move(c));
  }

  /// c * sqrt(n) for a positive integer n; the square part of n moves into c.
  static Surd root(long n, S c = S(1)) {
    if (n < 0) throw std::domain_error("negative radicand");
    if (n == 0) return Surd();
    long sq = 1, r = 1;
    long m = n;
    for (long p = 2; p * p <= m; ++p) {
      while (m % (p * p) == 0) {
        m /= p * p;
        sq *= p;
      }
    }
    r = m;
    S coef = c * S(sq);
    if (r % 2 == 0) {
      r /= 2;
      coef = coef * sqrt2_value();
    }
    Surd s;
    if (!ScalarTraits<S>::is_zero(coef)) s.terms_.emplace_back(r, coef);
    return s;
  }

  const std::vector<std::pair<long, S>>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Surd& operator+=(const Surd& o) {
    std::vector<std::pair<long, S>> out;
    std::size_t i = 0, j = 0;
    while (i < terms_.size() || j < o.terms_.size()) {
      if (j == o.terms_.size() || (i < terms_.size() && terms_[i].first < o.terms_[j].first)) {
        out.push_back(terms_[i++]);
      } else if (i == terms_.size() || o.terms_[j].first < terms_[i].first) {
        out.push_back(o.terms_[j++]);
      } else {
        S v = terms_[i].second + o.terms_[j].second;
        if (!ScalarTraits<S>::is_zero(v)) out.emplace_back(terms_[i].first, std::move(v));
        ++i;
        ++j;
      }
    }
    terms_ = std::move(out);
    return *this;
  }
  Surd& operator-=(const Surd& o) { return *this += -o; }
  Surd& operator*=(const Surd& o) {
    Surd out;
    for (const auto& [r, a] : terms_)
      for (const auto& [s, b] : o.terms_) {
        const long g = std::gcd(r, s);
        Surd t;
        t.terms_.emplace_back(r / g * (s / g), a * b * S(g));
        out += t;
      }
    *this = std::move(out);
    return *this;
  }
  Surd operator-() const {
    Surd s = *this;
    for (auto& t : s.terms_) t.second = S(0) - t.second;
    return s;
  }
  friend Surd operator+(Surd a, const Surd& b) { return a += b; }
  friend Surd operator-(Surd a, const Surd& b) { return a -= b; }
  friend Surd operator*(Surd a, const Surd& b) { return a *= b; }
  bool operator==(const Surd& o) const { return terms_ == o.terms_; }

  Surd conj() const {
    Surd s = *this;
    for (auto& t : s.terms_) t.second = ScalarTraits<S>::conj(t.second);
    return s;
  }

  Complex to_complex() const {
    Complex z{};
    for (const auto& [r, c] : terms_) z += std::sqrt(static_cast<double>(r)) * ScalarTraits<S>::to_complex(c);
    return z;
  }

 private:
  std::vector<std::pair<long, S>> terms_;

  static S sqrt2_value();
};

template <class S>
struct ScalarTraits<Surd<S>> {
  static constexpr bool exact = ScalarTraits<S>::exact;
  static bool is_zero(const Surd<S>& a) { return a.is_zero(); }
  static Surd<S> conj(const Surd<S>& a) { return a.conj(); }
  static Complex to_complex(const Surd<S>& a) { return a.to_complex(); }
};

template <>
inline Amplitude Surd<Amplitude>::sqrt2_value() {
  return Amplitude::sqrt2();
}

/// Embeds an operator with base scalars into the surd extension.
template <class S>
SparseOperator<Surd<S>> to_surd(const SparseOperator<S>& op) {
  return op.template convert<Surd<S>>([](const S& s) { return Surd<S>(s); });
}

}  // namespace fockdual
