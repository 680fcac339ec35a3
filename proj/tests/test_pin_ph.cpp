#include <cmath>

#include "doctest.h"
#include "fockdual/pin.hpp"
#include "fockdual/verify.hpp"

using namespace fockdual;

namespace {

const NamedCheck& find(const CheckReport& r, const std::string& name) {
  for (const auto& c : r.checks)
    if (c.name == name) return c;
  FAIL("missing check " << name);
  throw std::logic_error("unreachable");
}

double cg_closed_form(int l, int twice_j, int ml, int twice_ms) {
  const double den = 2 * l + 1;
  if (twice_j == 2 * l + 1) return twice_ms > 0 ? std::sqrt((l + ml + 1) / den) : std::sqrt((l - ml + 1) / den);
  return twice_ms > 0 ? -std::sqrt((l - ml) / den) : std::sqrt((l + ml) / den);
}

}  // namespace

TEST_CASE("sigma squares to the sign of d") {
  for (int d = 1; d <= 5; ++d)
    for (int k = 1; k <= 2; ++k) {
      const ModelParams p{d, k, Family::orthogonal};
      const auto I = SparseOperator<Amplitude>::identity(p.dim()).scaled(Amplitude(d % 2 ? -1 : 1));
      for (auto basis : {SigmaBasis::b, SigmaBasis::delta}) CHECK(sigma_op(1, p, basis) * sigma_op(1, p, basis) == I);
    }
}

TEST_CASE("sigma vacuum image fills one kind") {
  for (int d = 1; d <= 5; ++d) {
    const ModelParams p{d, 2, Family::orthogonal};
    const auto img = fockdual::apply(sigma_op(2, p, SigmaBasis::b), basis_vector<Amplitude>(0));
    REQUIRE(img.size() == 1);
    CHECK(img.front().first == ((1u << d) - 1) << d);
    CHECK(img == sigma_vacuum_image(2, p));
  }
}

TEST_CASE("single cell at d=2 is self-associated with sign +1") {
  const ModelParams p{2, 1, Family::orthogonal};
  const auto sc = sigma_sign_check({1}, p);
  CHECK(sc.computed == 1);
  CHECK(sc.predicted == 1);
  const auto phi = phi_lambda({1}, p);
  CHECK(fockdual::apply(sigma_op(1, p, SigmaBasis::b), phi) == phi);
}

TEST_CASE("pin identities on small frames") {
  for (int d = 1; d <= 4; ++d)
    for (int k = 1; k <= 2; ++k) {
      const auto rep = pin_check({d, k, Family::orthogonal});
      for (const auto& c : rep.checks) CHECK_MESSAGE(c.pass, c.name << " d=" << d << " k=" << k);
    }
  CHECK_THROWS_AS(pin_check({4, 1, Family::symplectic}), std::domain_error);
}

TEST_CASE("sign formula holds for every frame diagram") {
  for (int d = 1; d <= 5; ++d)
    for (int k = 1; k <= 2; ++k) {
      const ModelParams p{d, k, Family::orthogonal};
      for (const auto& rows : frame_diagrams(p)) {
        const auto sc = sigma_sign_check(rows, p);
        CHECK(sc.pass);
      }
    }
}

TEST_CASE("coupling coefficients match the closed form") {
  for (int l = 0; l <= 3; ++l)
    for (int tj : {2 * l + 1, 2 * l - 1}) {
      if (tj < 0) continue;
      for (int ml = -l; ml <= l; ++ml)
        for (int ts : {1, -1}) {
          if (std::abs(2 * ml + ts) > tj) continue;
          const auto v = cg_half_coupling(l, HalfInt::from_twice(tj), ml, HalfInt::from_twice(ts)).to_complex();
          CHECK(std::abs(v - cg_closed_form(l, tj, ml, ts)) < 1e-12);
        }
    }
}

TEST_CASE("particle-hole structure of the l=1 shell") {
  const auto rep = ph_check({1, 2});
  for (const char* name : {"L_angular_momentum_algebra", "S_angular_momentum_algebra", "C2_commutes_L", "C2_commutes_S",
                           "C3_commutes_L", "C3_commutes_S", "C3_racah_relation", "C2_equals_C3_times_parity", "Q_sl2",
                           "Q_commutes_S", "F_action", "perj_sum_equals_Qy", "perj_product_equals_C3",
                           "coupled_J_equals_L_plus_S", "cg_orthonormal", "sigma_maps_S_to_Q"})
    CHECK_MESSAGE(find(rep, name).pass, name);
}

TEST_CASE("quasispin vacuum and rotation") {
  const ShellParams sh{2, 2};
  const auto Q = quasispin_Q(sh);
  const auto vac = basis_vector<Amplitude>(0);
  CHECK(fockdual::apply(Q.z, vac) == basis_vector<Amplitude>(0, Amplitude(-5).half()));
  CHECK(fockdual::apply(Q.minus, vac).empty());
  CHECK(commutator(Q.plus, Q.minus) == Q.z.scaled(Amplitude(2)));
}

TEST_CASE("nucleon conjugation on the s shell") {
  const auto rep = nucleon_check({0, 4});
  CHECK(rep.all_pass());
}
