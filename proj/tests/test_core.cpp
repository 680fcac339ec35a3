#include <random>

#include "doctest.h"
#include "fockdual/field.hpp"
#include "fockdual/fock.hpp"
#include "fockdual/surd.hpp"

using namespace fockdual;

namespace {

Amplitude random_amplitude(std::mt19937& rng) {
  std::uniform_int_distribution<int> small(-4, 4);
  Amplitude a = Amplitude::gauss(small(rng), small(rng)) + Amplitude::gauss(small(rng), small(rng)) * Amplitude::sqrt2();
  for (int e = std::uniform_int_distribution<int>(0, 2)(rng); e > 0; --e) a = a.half();
  return a;
}

}  // namespace

TEST_CASE("amplitude constants") {
  CHECK(Amplitude::i() * Amplitude::i() == Amplitude(-1));
  CHECK(Amplitude::sqrt2() * Amplitude::sqrt2() == Amplitude(2));
  CHECK(Amplitude::sqrt_half() * Amplitude::sqrt2() == Amplitude(1));
  CHECK(Amplitude(3).half() * Amplitude(2) == Amplitude(3));
  CHECK(i_pow(3) == -Amplitude::i());
  CHECK(Amplitude(2).half() == Amplitude(1));
}

TEST_CASE("amplitude ring axioms on random samples") {
  std::mt19937 rng(7);
  for (int n = 0; n < 500; ++n) {
    const auto a = random_amplitude(rng), b = random_amplitude(rng), c = random_amplitude(rng);
    CHECK((a + b) * c == a * c + b * c);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * b == b * a);
    CHECK(a - a == Amplitude(0));
    CHECK((a * b).conj() == a.conj() * b.conj());
    const auto z = a.to_complex() * b.to_complex();
    CHECK(std::abs((a * b).to_complex() - z) < 1e-9);
  }
}

TEST_CASE("surds multiply exactly") {
  using SA = Surd<Amplitude>;
  CHECK(SA::root(12) == SA::root(3, Amplitude(2)));
  CHECK(SA::root(2) * SA::root(3) == SA::root(6));
  CHECK(SA::root(3) * SA::root(3) == SA(3));
  CHECK(SA::root(6) * SA::root(10) == SA::root(15, Amplitude(2)));
  CHECK((SA::root(3) + SA(1)) * (SA::root(3) - SA(1)) == SA(2));
  CHECK(SA::root(8) == SA(Amplitude::sqrt2() * Amplitude(2)));
  using SQ = Surd<QSqrt2>;
  CHECK(SQ::root(5, QSqrt2(GaussRat(mpq_class(1, 5), 0), GaussRat(0))) * SQ::root(5) == SQ(1));
  CHECK(std::abs(SQ::root(7).to_complex() - std::sqrt(7.0)) < 1e-12);
}

TEST_CASE("mode layout") {
  const ModelParams even{4, 2, Family::orthogonal};
  CHECK(even.labels() == std::vector<int>{-2, -1, 1, 2});
  CHECK(mode_index(-2, 1, even).bit == 0);
  CHECK(mode_index(2, 2, even).bit == 7);
  const ModelParams odd{3, 2, Family::orthogonal};
  CHECK(odd.labels() == std::vector<int>{-1, 0, 1});
  for (int b = 0; b < odd.modes(); ++b) {
    const auto m = mode_from_bit(b, odd);
    CHECK(mode_index(m.p, m.tau, odd).bit == b);
  }
  CHECK_THROWS_AS(ModelParams({3, 1, Family::symplectic}).validate(), std::domain_error);
  CHECK_THROWS_AS(ModelParams({7, 3, Family::orthogonal}).validate(20), ResourceLimit);
}

TEST_CASE("field operator signs count occupied lower modes") {
  std::mt19937 rng(3);
  for (int n = 0; n < 200; ++n) {
    const FockState s = rng() & 0xFFu;
    const int bit = static_cast<int>(rng() % 8);
    const auto r = apply_field(FieldOp::create, bit, s);
    if (occupied(s, bit)) {
      CHECK(!r.has_value());
      continue;
    }
    REQUIRE(r.has_value());
    int below = 0;
    for (int b = 0; b < bit; ++b) below += (s >> b) & 1;
    CHECK(r->state == (s | (1u << bit)));
    CHECK(r->sign == (below % 2 ? -1 : 1));
  }
}

TEST_CASE("canonical anticommutation relations") {
  const int n = 5;
  const auto I = SparseOperator<Amplitude>::identity(std::size_t{1} << n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const auto ai = field_operator(FieldOp::annihilate, i, n), cj = field_operator(FieldOp::create, j, n);
      const auto aj = field_operator(FieldOp::annihilate, j, n), ci = field_operator(FieldOp::create, i, n);
      CHECK(anticommutator(ai, cj) == (i == j ? I : SparseOperator<Amplitude>::zero(I.dim())));
      CHECK(anticommutator(ai, aj).is_zero());
      CHECK(anticommutator(ci, cj).is_zero());
    }
}

TEST_CASE("expressions build the same operators as products") {
  const int n = 4;
  const auto e = Expr<Amplitude>::create(2) * Expr<Amplitude>::annihilate(0) + Expr<Amplitude>::one().scaled(Amplitude::i());
  const auto direct = field_operator(FieldOp::create, 2, n) * field_operator(FieldOp::annihilate, 0, n) +
                      SparseOperator<Amplitude>::identity(16).scaled(Amplitude::i());
  CHECK(build_operator(e, n) == direct);
  CHECK(direct.adjoint().adjoint() == direct);
}
