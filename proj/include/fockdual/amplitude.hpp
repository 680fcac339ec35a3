#pragma once

#include <complex>
#include <cstdint>
#include <string>

namespace fockdual {

struct GaussInt {
  std::int64_t re = 0;
  std::int64_t im = 0;

  bool is_zero() const { return re == 0 && im == 0; }
  bool operator==(const GaussInt&) const = default;
};

/// Exact element of Z[i, sqrt(1/2)], stored as (x + y*sqrt2) / 2^e with
/// Gaussian integers x, y and the smallest e >= 0. The representation is
/// canonical, so operator== decides equality. Integer overflow throws
/// std::overflow_error instead of wrapping.
class Amplitude {
 public:
  Amplitude() = default;
  Amplitude(std::int64_t n);  // NOLINT: integers convert implicitly

  static Amplitude gauss(std::int64_t re, std::int64_t im);
  static Amplitude i();
  static Amplitude sqrt2();
  static Amplitude sqrt_half();
  /// (x + y*sqrt2) / 2^e, normalised.
  static Amplitude raw(GaussInt x, GaussInt y, int e);

  const GaussInt& x() const { return x_; }
  const GaussInt& y() const { return y_; }
  int exponent() const { return e_; }

  bool is_zero() const { return x_.is_zero() && y_.is_zero(); }
  bool is_gaussian_integer() const { return y_.is_zero() && e_ == 0; }
  bool has_sqrt2_part() const { return !y_.is_zero(); }

  Amplitude conj() const;
  Amplitude half() const;
  Amplitude times_i() const;
  Amplitude operator-() const;

  Amplitude& operator+=(const Amplitude& o);
  Amplitude& operator-=(const Amplitude& o);
  Amplitude& operator*=(const Amplitude& o);

  friend Amplitude operator+(Amplitude a, const Amplitude& b) { return a += b; }
  friend Amplitude operator-(Amplitude a, const Amplitude& b) { return a -= b; }
  friend Amplitude operator*(Amplitude a, const Amplitude& b) { return a *= b; }

  bool operator==(const Amplitude&) const = default;

  std::complex<double> to_complex() const;
  std::string str() const;

 private:
  GaussInt x_{};
  GaussInt y_{};
  int e_ = 0;

  void normalize();
};

/// (-1)^n as an integer.
inline int parity_sign(long long n) { return (n % 2 == 0) ? 1 : -1; }

/// i^n for any integer n.
Amplitude i_pow(long long n);

}  // namespace fockdual
