#include "fockdual/field.hpp"

#include <sstream>
#include <stdexcept>

namespace fockdual {

GaussRat& GaussRat::operator+=(const GaussRat& o) {
  re += o.re;
  im += o.im;
  return *this;
}

GaussRat& GaussRat::operator-=(const GaussRat& o) {
  re -= o.re;
  im -= o.im;
  return *this;
}

GaussRat& GaussRat::operator*=(const GaussRat& o) {
  if (sgn(im) == 0 && sgn(o.im) == 0) {
    re *= o.re;
    return *this;
  }
  mpq_class r = re * o.re - im * o.im;
  mpq_class i = re * o.im + im * o.re;
  re = std::move(r);
  im = std::move(i);
  return *this;
}

GaussRat& GaussRat::operator/=(const GaussRat& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  if (sgn(o.im) == 0) {
    re /= o.re;
    im /= o.re;
    return *this;
  }
  const mpq_class n = o.re * o.re + o.im * o.im;
  *this *= o.conj();
  re /= n;
  im /= n;
  return *this;
}

std::string GaussRat::str() const {
  std::ostringstream os;
  if (sgn(im) == 0) {
    os << re.get_str();
  } else if (sgn(re) == 0) {
    os << im.get_str() << "i";
  } else {
    os << "(" << re.get_str() << (sgn(im) < 0 ? "-" : "+") << mpq_class(abs(im)).get_str() << "i)";
  }
  return os.str();
}

QSqrt2& QSqrt2::operator+=(const QSqrt2& o) {
  a += o.a;
  b += o.b;
  return *this;
}

QSqrt2& QSqrt2::operator-=(const QSqrt2& o) {
  a -= o.a;
  b -= o.b;
  return *this;
}

QSqrt2& QSqrt2::operator*=(const QSqrt2& o) {
  if (b.is_zero() && o.b.is_zero()) {
    a *= o.a;
    return *this;
  }
  GaussRat na = a * o.a + GaussRat(2) * b * o.b;
  GaussRat nb = a * o.b + b * o.a;
  a = std::move(na);
  b = std::move(nb);
  return *this;
}

QSqrt2& QSqrt2::operator/=(const QSqrt2& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  if (o.b.is_zero()) {
    a /= o.a;
    b /= o.a;
    return *this;
  }
  // 1/(x + y r) = (x - y r)/(x^2 - 2 y^2); the norm is nonzero since sqrt2 is not in Q(i)
  const GaussRat norm = o.a * o.a - GaussRat(2) * o.b * o.b;
  *this *= QSqrt2(o.a, -o.b);
  a /= norm;
  b /= norm;
  return *this;
}

std::string QSqrt2::str() const {
  if (b.is_zero()) return a.str();
  if (a.is_zero()) return b.str() + "*sqrt2";
  return "(" + a.str() + "+" + b.str() + "*sqrt2)";
}

QSqrt2 to_qsqrt2(const Amplitude& x) {
  mpz_class den = 1;
  mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), static_cast<mp_bitcnt_t>(x.exponent()));
  auto q = [&](std::int64_t n) {
    mpq_class r(mpz_class(static_cast<long>(n)), den);
    r.canonicalize();
    return r;
  };
  return QSqrt2(GaussRat(q(x.x().re), q(x.x().im)), GaussRat(q(x.y().re), q(x.y().im)));
}

GaussRat to_gaussrat(const Amplitude& x) {
  if (x.has_sqrt2_part()) throw std::domain_error("amplitude has a sqrt2 component: " + x.str());
  return to_qsqrt2(x).a;
}

}  // namespace fockdual
