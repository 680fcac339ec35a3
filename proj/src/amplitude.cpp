#include "fockdual/amplitude.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace fockdual {

namespace {

std::int64_t add_ck(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("amplitude overflow");
  return r;
}

std::int64_t sub_ck(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("amplitude overflow");
  return r;
}

std::int64_t mul_ck(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("amplitude overflow");
  return r;
}

GaussInt g_add(GaussInt a, GaussInt b) { return {add_ck(a.re, b.re), add_ck(a.im, b.im)}; }

GaussInt g_mul(GaussInt a, GaussInt b) {
  return {sub_ck(mul_ck(a.re, b.re), mul_ck(a.im, b.im)),
          add_ck(mul_ck(a.re, b.im), mul_ck(a.im, b.re))};
}

GaussInt g_shl(GaussInt a, int k) {
  if (k == 0) return a;
  if (k >= 62) {
    if (a.is_zero()) return a;
    throw std::overflow_error("amplitude overflow");
  }
  return {mul_ck(a.re, std::int64_t{1} << k), mul_ck(a.im, std::int64_t{1} << k)};
}

int ctz_or_64(std::uint64_t v) { return v == 0 ? 64 : __builtin_ctzll(v); }

}  // namespace

Amplitude::Amplitude(std::int64_t n) : x_{n, 0} {}

Amplitude Amplitude::gauss(std::int64_t re, std::int64_t im) {
  Amplitude a;
  a.x_ = {re, im};
  return a;
}

Amplitude Amplitude::i() { return gauss(0, 1); }

Amplitude Amplitude::sqrt2() { return raw({0, 0}, {1, 0}, 0); }

Amplitude Amplitude::sqrt_half() { return raw({0, 0}, {1, 0}, 1); }

Amplitude Amplitude::raw(GaussInt x, GaussInt y, int e) {
  if (e < 0) throw std::domain_error("negative amplitude exponent");
  Amplitude a;
  a.x_ = x;
  a.y_ = y;
  a.e_ = e;
  a.normalize();
  return a;
}

void Amplitude::normalize() {
  if (is_zero()) {
    e_ = 0;
    return;
  }
  if (e_ == 0) return;
  std::uint64_t bits = static_cast<std::uint64_t>(x_.re) | static_cast<std::uint64_t>(x_.im) |
                       static_cast<std::uint64_t>(y_.re) | static_cast<std::uint64_t>(y_.im);
  int t = std::min(ctz_or_64(bits), e_);
  if (t == 0) return;
  x_.re >>= t;
  x_.im >>= t;
  y_.re >>= t;
  y_.im >>= t;
  e_ -= t;
}

Amplitude Amplitude::conj() const {
  Amplitude a = *this;
  a.x_.im = -a.x_.im;
  a.y_.im = -a.y_.im;
  return a;
}

Amplitude Amplitude::half() const {
  if (is_zero()) return *this;
  Amplitude a = *this;
  ++a.e_;
  a.normalize();
  return a;
}

Amplitude Amplitude::times_i() const {
  Amplitude a = *this;
  a.x_ = {sub_ck(0, x_.im), x_.re};
  a.y_ = {sub_ck(0, y_.im), y_.re};
  return a;
}

Amplitude Amplitude::operator-() const {
  Amplitude a = *this;
  a.x_ = {sub_ck(0, x_.re), sub_ck(0, x_.im)};
  a.y_ = {sub_ck(0, y_.re), sub_ck(0, y_.im)};
  return a;
}

Amplitude& Amplitude::operator+=(const Amplitude& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  int e = std::max(e_, o.e_);
  GaussInt x = g_add(g_shl(x_, e - e_), g_shl(o.x_, e - o.e_));
  GaussInt y = g_add(g_shl(y_, e - e_), g_shl(o.y_, e - o.e_));
  x_ = x;
  y_ = y;
  e_ = e;
  normalize();
  return *this;
}

Amplitude& Amplitude::operator-=(const Amplitude& o) { return *this += -o; }

Amplitude& Amplitude::operator*=(const Amplitude& o) {
  if (is_zero() || o.is_zero()) return *this = Amplitude{};
  // (x1 + y1 r)(x2 + y2 r) with r^2 = 2
  GaussInt x = g_add(g_mul(x_, o.x_), g_shl(g_mul(y_, o.y_), 1));
  GaussInt y = g_add(g_mul(x_, o.y_), g_mul(y_, o.x_));
  x_ = x;
  y_ = y;
  e_ = add_ck(e_, o.e_);
  normalize();
  return *this;
}

std::complex<double> Amplitude::to_complex() const {
  const double s = std::ldexp(1.0, -e_);
  const double r2 = std::sqrt(2.0);
  return {(static_cast<double>(x_.re) + r2 * static_cast<double>(y_.re)) * s,
          (static_cast<double>(x_.im) + r2 * static_cast<double>(y_.im)) * s};
}

std::string Amplitude::str() const {
  auto gs = [](const GaussInt& g) {
    std::ostringstream os;
    if (g.im == 0) {
      os << g.re;
    } else if (g.re == 0) {
      os << g.im << "i";
    } else {
      os << "(" << g.re << (g.im < 0 ? "-" : "+") << std::abs(g.im) << "i)";
    }
    return os.str();
  };
  std::ostringstream os;
  if (y_.is_zero()) {
    os << gs(x_);
  } else if (x_.is_zero()) {
    os << gs(y_) << "*sqrt2";
  } else {
    os << "(" << gs(x_) << "+" << gs(y_) << "*sqrt2)";
  }
  if (e_ > 0) os << "/" << (std::int64_t{1} << e_);
  return os.str();
}

Amplitude i_pow(long long n) {
  switch (((n % 4) + 4) % 4) {
    case 0: return Amplitude(1);
    case 1: return Amplitude::i();
    case 2: return Amplitude(-1);
    default: return Amplitude::gauss(0, -1);
  }
}

}  // namespace fockdual
