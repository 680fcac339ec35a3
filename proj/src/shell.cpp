#include "fockdual/shell.hpp"

#include <stdexcept>

#include "fockdual/pin.hpp"

namespace fockdual {

void ShellParams::validate(int mode_limit) const {
  if (l < 0) throw std::domain_error("l must be non-negative");
  if (k != 2 && k != 4) throw std::domain_error("shell needs k = 2 (spin) or k = 4 (spin and isospin)");
  model().validate(mode_limit);
}

int shell_kind(HalfInt ms, HalfInt mt, const ShellParams& shell) {
  if (ms.abs() != HalfInt::from_twice(1)) throw std::domain_error("m_s must be +-1/2");
  const int spin = ms.twice > 0 ? 1 : 2;
  if (shell.k == 2) return spin;
  if (mt.abs() != HalfInt::from_twice(1)) throw std::domain_error("m_t must be +-1/2");
  return mt.twice > 0 ? spin : spin + 2;
}

namespace {

using E = Expr<Amplitude>;
using SE = Expr<Surd<Amplitude>>;

int bit_of(int m, int tau, const ShellParams& shell) { return mode_index(m, tau, shell.model()).bit; }

E n_of(int bit) { return E::create(bit) * E::annihilate(bit); }

struct Su2 {
  Op z, plus;
};

/// z = (n_a - n_b)/2 and plus = a+_a a_b summed over m and the given kind pairs.
Su2 su2_from_pairs(const std::vector<std::pair<int, int>>& pairs, const ShellParams& shell) {
  E z, plus;
  for (auto [a, b] : pairs)
    for (int m = -shell.l; m <= shell.l; ++m) {
      const int ba = bit_of(m, a, shell), bb = bit_of(m, b, shell);
      z += (n_of(ba) - n_of(bb)).scaled(Amplitude(1).half());
      plus += E::create(ba) * E::annihilate(bb);
    }
  const int n = shell.model().modes();
  return {build_operator(z, n), build_operator(plus, n)};
}

AngularMomentum from_z_plus(SurdOp z, SurdOp plus) {
  AngularMomentum a;
  a.z = std::move(z);
  a.plus = std::move(plus);
  a.minus = a.plus.adjoint();
  a.x = (a.plus + a.minus).scaled(Surd<Amplitude>(Amplitude(1).half()));
  a.y = (a.plus - a.minus).scaled(Surd<Amplitude>(-Amplitude::i().half()));
  return a;
}

Op block_product(const std::vector<E>& blocks, int n_modes) {
  auto op = Op::identity(std::size_t{1} << n_modes);
  for (const auto& b : blocks) op = op * build_operator(b, n_modes);
  return op;
}

/// n_u + n_v - 2 n_u n_v + eta (a+_u a+_v - a_v a_u).
E pair_flip_block(int u, int v, int eta) {
  return n_of(u) + n_of(v) - (n_of(u) * n_of(v)).scaled(Amplitude(2)) +
         (E::create(u) * E::create(v) - E::annihilate(v) * E::annihilate(u)).scaled(Amplitude(eta));
}

}  // namespace

Op m_basis_phase(const ShellParams& shell) {
  const ModelParams model = shell.model();
  std::vector<std::vector<Op::Entry>> cols(model.dim());
  for (std::size_t s = 0; s < model.dim(); ++s) {
    long long e = 0;
    for (int b = 0; b < model.modes(); ++b)
      if (occupied(static_cast<FockState>(s), b)) e += shell.l + std::abs(mode_from_bit(b, model).p) + 1;
    cols[s].emplace_back(static_cast<std::uint32_t>(s), i_pow(e));
  }
  return Op::from_columns(std::move(cols));
}

Op sigma_m(int tau, const ShellParams& shell) {
  const Op D = m_basis_phase(shell);
  return D.adjoint() * sigma_op(tau, shell.model(), SigmaBasis::b) * D;
}

AngularMomentum orbital_L(const ShellParams& shell) {
  const int n = shell.model().modes();
  SE z, plus;
  for (int t = 1; t <= shell.k; ++t)
    for (int m = -shell.l; m <= shell.l; ++m) {
      const int b = bit_of(m, t, shell);
      if (m != 0) z += (SE::create(b) * SE::annihilate(b)).scaled(Surd<Amplitude>(Amplitude(m)));
      if (m < shell.l)
        plus += (SE::create(bit_of(m + 1, t, shell)) * SE::annihilate(b))
                    .scaled(Surd<Amplitude>::root(static_cast<long>(shell.l - m) * (shell.l + m + 1)));
    }
  return from_z_plus(build_operator(z, n), build_operator(plus, n));
}

AngularMomentum spin_S(const ShellParams& shell) {
  std::vector<std::pair<int, int>> pairs{{1, 2}};
  if (shell.k == 4) pairs.emplace_back(3, 4);
  auto s = su2_from_pairs(pairs, shell);
  return from_z_plus(to_surd_op(s.z), to_surd_op(s.plus));
}

AngularMomentum isospin_T(const ShellParams& shell) {
  if (shell.k != 4) throw std::domain_error("isospin needs k = 4");
  auto s = su2_from_pairs({{1, 3}, {2, 4}}, shell);
  return from_z_plus(to_surd_op(s.z), to_surd_op(s.plus));
}

Op number_op(const ShellParams& shell) {
  const int n = shell.model().modes();
  E e;
  for (int b = 0; b < n; ++b) e += n_of(b);
  return build_operator(e, n);
}

Quasispin quasispin_Q(const ShellParams& shell, int up, int down) {
  const int n = shell.model().modes();
  E z = E::one().scaled(Amplitude(-shell.d()));
  E plus;
  for (int m = -shell.l; m <= shell.l; ++m) {
    z += n_of(bit_of(m, up, shell)) + n_of(bit_of(m, down, shell));
    plus += (E::create(bit_of(m, up, shell)) * E::create(bit_of(-m, down, shell))).scaled(Amplitude(parity_sign(shell.l + m)));
  }
  Quasispin q;
  q.z = build_operator(z.scaled(Amplitude(1).half()), n);
  q.plus = build_operator(plus, n);
  q.minus = q.plus.adjoint();
  q.x = (q.plus + q.minus).scaled(Amplitude(1).half());
  q.y = (q.plus - q.minus).scaled(-Amplitude::i().half());
  return q;
}

Op pair_rotation_block(int a, int b, const ShellParams& shell) {
  std::vector<E> blocks;
  for (int m = -shell.l; m <= shell.l; ++m) {
    const int ba = bit_of(m, a, shell), bb = bit_of(m, b, shell);
    blocks.push_back(E::one() - n_of(ba) - n_of(bb) + (n_of(ba) * n_of(bb)).scaled(Amplitude(2)) +
                     E::create(ba) * E::annihilate(bb) - E::create(bb) * E::annihilate(ba));
  }
  return block_product(blocks, shell.model().modes());
}

Op pair_rotation_lift(int a, int b, const ShellParams& shell) {
  const int n = shell.model().modes();
  ModeMatrix<Amplitude> f(n, std::vector<Amplitude>(n));
  for (int c = 0; c < n; ++c) f[c][c] = Amplitude(1);
  for (int m = -shell.l; m <= shell.l; ++m) {
    const int ba = bit_of(m, a, shell), bb = bit_of(m, b, shell);
    f[ba][ba] = Amplitude(0);
    f[bb][bb] = Amplitude(0);
    f[bb][ba] = Amplitude(-1);
    f[ba][bb] = Amplitude(1);
  }
  return lift_modes(f, n);
}

Op quasispin_rotation(const ShellParams& shell, int up, int down) {
  std::vector<E> blocks;
  for (int m = -shell.l; m <= shell.l; ++m)
    blocks.push_back(pair_flip_block(bit_of(m, up, shell), bit_of(-m, down, shell), parity_sign(shell.l + m)));
  return block_product(blocks, shell.model().modes());
}

Conjugations conjugation_ops(const ShellParams& shell, int up, int down) {
  Conjugations c;
  c.C1 = sigma_m(down, shell) * sigma_m(up, shell);
  c.F = pair_rotation_block(up, down, shell);
  c.C2 = c.F * c.C1;
  c.C3 = quasispin_rotation(shell, up, down);
  return c;
}

RatSurd cg_half_coupling(int l, HalfInt j, int ml, HalfInt ms) {
  const bool upper = j.twice == 2 * l + 1;
  const bool lower = j.twice == 2 * l - 1 && l >= 1;
  if (!upper && !lower) throw std::domain_error("j must be l +- 1/2");
  if (std::abs(ml) > l) throw std::domain_error("|m_l| exceeds l");
  if (ms.abs() != HalfInt::from_twice(1)) throw std::domain_error("m_s must be +-1/2");
  const int m2 = 2 * ml + ms.twice;
  if (std::abs(m2) > j.twice) return RatSurd();
  const long den = 2L * (2 * l + 1);
  long num;
  int sign = 1;
  if (upper) {
    num = ms.twice > 0 ? 2 * l + m2 + 1 : 2 * l - m2 + 1;
  } else if (ms.twice > 0) {
    num = 2 * l - m2 + 1;
    sign = -1;
  } else {
    num = 2 * l + m2 + 1;
  }
  mpq_class c(sign, den);
  c.canonicalize();
  return RatSurd::root(num * den, QSqrt2(GaussRat(c, 0)));
}

std::vector<HalfInt> shell_js(const ShellParams& shell) {
  std::vector<HalfInt> js{HalfInt::from_twice(2 * shell.l + 1)};
  if (shell.l > 0) js.push_back(HalfInt::from_twice(2 * shell.l - 1));
  return js;
}

int coupled_bit(HalfInt j, HalfInt m, const ShellParams& shell) {
  if (shell.k != 2) throw std::domain_error("coupled basis needs k = 2");
  if (m.abs() > j || (m.twice - j.twice) % 2 != 0) throw std::domain_error("m out of range for j");
  const int pos = (m.twice + j.twice) / 2;
  if (j.twice == 2 * shell.l + 1) return pos;
  if (j.twice == 2 * shell.l - 1 && shell.l > 0) return 2 * shell.l + 2 + pos;
  throw std::domain_error("j must be l +- 1/2");
}

RatSurdOp coupling_lift(const ShellParams& shell) {
  if (shell.k != 2) throw std::domain_error("coupled basis needs k = 2");
  const int n = shell.model().modes();
  ModeMatrix<RatSurd> u(n, std::vector<RatSurd>(n));
  for (HalfInt j : shell_js(shell))
    for (int m2 = -j.twice; m2 <= j.twice; m2 += 2)
      for (int s2 : {1, -1}) {
        const int ml2 = m2 - s2;
        if (std::abs(ml2) > 2 * shell.l) continue;
        const HalfInt ms = HalfInt::from_twice(s2);
        u[bit_of(ml2 / 2, shell_kind(ms, {}, shell), shell)][coupled_bit(j, HalfInt::from_twice(m2), shell)] =
            cg_half_coupling(shell.l, j, ml2 / 2, ms);
      }
  return lift_modes(u, n);
}

PerJ perj_conjugation(const ShellParams& shell, HalfInt j) {
  const int n = shell.model().modes();
  E plus;
  std::vector<E> blocks;
  for (int m2 = 1; m2 <= j.twice; m2 += 2) {
    const HalfInt m = HalfInt::from_twice(m2);
    const int eta = parity_sign((j.twice - m2) / 2);
    const int u = coupled_bit(j, m, shell), v = coupled_bit(j, -m, shell);
    plus += (E::create(u) * E::create(v)).scaled(Amplitude(eta));
    blocks.push_back(pair_flip_block(u, v, eta));
  }
  PerJ p;
  p.j = j;
  p.q_plus = build_operator(plus, n);
  p.q_minus = p.q_plus.adjoint();
  p.q_y = (p.q_plus - p.q_minus).scaled(-Amplitude::i().half());
  p.C = block_product(blocks, n);
  return p;
}

Op perj_literal_qy(const ShellParams& shell, HalfInt j) {
  const int n = shell.model().modes();
  E e;
  for (int m2 = -j.twice; m2 <= j.twice; m2 += 2) {
    const HalfInt m = HalfInt::from_twice(m2);
    const int u = coupled_bit(j, m, shell), v = coupled_bit(j, -m, shell);
    e += (E::create(u) * E::create(v) - E::annihilate(v) * E::annihilate(u)).scaled(Amplitude(parity_sign((j.twice - m2) / 2)));
  }
  return build_operator(e, n).scaled(-Amplitude::i().half());
}

AngularMomentum coupled_J(const ShellParams& shell) {
  const int n = shell.model().modes();
  SE z, plus;
  for (HalfInt j : shell_js(shell))
    for (int m2 = -j.twice; m2 <= j.twice; m2 += 2) {
      const int b = coupled_bit(j, HalfInt::from_twice(m2), shell);
      z += (SE::create(b) * SE::annihilate(b)).scaled(Surd<Amplitude>(Amplitude(m2).half()));
      if (m2 < j.twice) {
        const long r = static_cast<long>(j.twice - m2) * (j.twice + m2 + 2) / 4;
        plus += (SE::create(coupled_bit(j, HalfInt::from_twice(m2 + 2), shell)) * SE::annihilate(b))
                    .scaled(Surd<Amplitude>::root(r));
      }
    }
  return from_z_plus(build_operator(z, n), build_operator(plus, n));
}

Op product_conjugation(const std::vector<Op>& ops, const std::optional<Op>& rotation) {
  if (ops.empty()) throw std::domain_error("no factors");
  for (std::size_t i = 0; i < ops.size(); ++i)
    for (std::size_t j = i + 1; j < ops.size(); ++j)
      if (!commutator(ops[i], ops[j]).is_zero()) throw std::domain_error("factors do not commute");
  Op out = ops.front();
  for (std::size_t i = 1; i < ops.size(); ++i) out = out * ops[i];
  return rotation ? *rotation * out : out;
}

SurdOp to_surd_op(const Op& op) { return to_surd(op); }

RatSurdOp to_rat_surd_op(const Op& op) {
  return op.convert<RatSurd>([](const Amplitude& a) { return RatSurd(to_qsqrt2(a)); });
}

RatSurdOp to_rat_surd_op(const SurdOp& op) {
  return op.convert<RatSurd>([](const Surd<Amplitude>& s) {
    RatSurd out;
    for (const auto& [r, c] : s.terms()) out += RatSurd::root(r, to_qsqrt2(c));
    return out;
  });
}

}  // namespace fockdual
