#pragma once

#include <optional>
#include <vector>

#include "fockdual/amplitude.hpp"
#include "fockdual/field.hpp"
#include "fockdual/fock.hpp"
#include "fockdual/halfint.hpp"
#include "fockdual/sparse_operator.hpp"
#include "fockdual/surd.hpp"

namespace fockdual {

/// Single-l shell of spin-1/2 fermions (k = 2) or of nucleons with spin and isospin (k = 4).
/// Fock modes are (m_l, kind) with p = m_l. Kinds for k = 2: 1 = spin up, 2 = spin down.
/// For k = 4: 1 = (up, +1/2), 2 = (down, +1/2), 3 = (up, -1/2), 4 = (down, -1/2) in (spin, isospin).
struct ShellParams {
  int l = 1;
  int k = 2;

  int d() const { return 2 * l + 1; }
  ModelParams model() const { return ModelParams{d(), k, Family::orthogonal}; }
  void validate(int mode_limit) const;
  void validate() const { validate(default_mode_limit()); }
};

using Op = SparseOperator<Amplitude>;
using SurdOp = SparseOperator<Surd<Amplitude>>;
using RatSurd = Surd<QSqrt2>;
using RatSurdOp = SparseOperator<RatSurd>;

/// Kind of (m_s, m_t); m_t is ignored for k = 2.
int shell_kind(HalfInt ms, HalfInt mt, const ShellParams& shell);

/// Diagonal operator D with D|S> = prod over occupied modes of i^(l + |m| + 1) |S>.
Op m_basis_phase(const ShellParams& shell);

/// sigma of one kind written in the m basis: D^-1 sigma_b D.
Op sigma_m(int tau, const ShellParams& shell);

struct AngularMomentum {
  SurdOp z, plus, minus, x, y;
};

/// Orbital L; entries sqrt((l-m)(l+m+1)) kept exact as surds.
AngularMomentum orbital_L(const ShellParams& shell);
/// Total spin, summed over isospin for k = 4.
AngularMomentum spin_S(const ShellParams& shell);
/// Total isospin; k = 4 only.
AngularMomentum isospin_T(const ShellParams& shell);

Op number_op(const ShellParams& shell);

struct Quasispin {
  Op z, plus, minus, x, y;
};

/// Q of the kind pair (up, down): Q_z = (n - d)/2 over those kinds,
/// Q_+ = sum (-)^(l+m) a+_{m up} a+_{-m down}, Q_- = Q_+^dagger.
Quasispin quasispin_Q(const ShellParams& shell, int up = 1, int down = 2);

/// Product over m of 1 - n_a - n_b + 2 n_a n_b + a+_a a_b - a+_b a_a on the modes (m, a), (m, b):
/// the rotation |m a> -> -|m b>, |m b> -> |m a> lifted to Fock space.
Op pair_rotation_block(int a, int b, const ShellParams& shell);
/// The same rotation through the generic module action.
Op pair_rotation_lift(int a, int b, const ShellParams& shell);

/// exp(i pi Q_y) as a product of commuting pair blocks n1 + n2 - 2 n1 n2 + eta (A+ - A),
/// A+ = a+_{m up} a+_{-m down}, eta = (-)^(l+m).
Op quasispin_rotation(const ShellParams& shell, int up = 1, int down = 2);

struct Conjugations {
  Op C1, F, C2, C3;
};

/// C1 = sigma_down sigma_up, F = exp(i pi S_y), C2 = F C1, C3 = exp(i pi Q_y) for one kind pair.
Conjugations conjugation_ops(const ShellParams& shell, int up = 1, int down = 2);

/// <l m_l; 1/2 m_s | j, m_l + m_s> in the Condon-Shortley convention, as an exact surd.
RatSurd cg_half_coupling(int l, HalfInt j, int ml, HalfInt ms);

/// Coupled-basis Fock modes for k = 2: j = l + 1/2 block first (m ascending), then j = l - 1/2.
int coupled_bit(HalfInt j, HalfInt m, const ShellParams& shell);
std::vector<HalfInt> shell_js(const ShellParams& shell);

/// Module action of the coupling map a+_{jm} -> sum CG a+_{m_l m_s}; takes coupled-basis
/// Fock vectors to uncoupled ones.
RatSurdOp coupling_lift(const ShellParams& shell);

struct PerJ {
  HalfInt j;
  Op q_plus, q_minus, q_y;
  Op C;
};

/// Q^(j) over the pairs (m, -m), m > 0, with phase (-)^(j-m), and C^(j) = exp(i pi Q_y^(j)),
/// both in the coupled basis.
PerJ perj_conjugation(const ShellParams& shell, HalfInt j);

/// Q_y^(j) with the sum running over all m (each pair counted twice).
Op perj_literal_qy(const ShellParams& shell, HalfInt j);

/// Total J in the coupled basis.
AngularMomentum coupled_J(const ShellParams& shell);

/// rotation * ops[0] * ops[1] * ...; throws std::domain_error when two factors do not commute.
Op product_conjugation(const std::vector<Op>& ops, const std::optional<Op>& rotation = std::nullopt);

SurdOp to_surd_op(const Op& op);
RatSurdOp to_rat_surd_op(const Op& op);
RatSurdOp to_rat_surd_op(const SurdOp& op);

}  // namespace fockdual
