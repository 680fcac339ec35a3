#pragma once

#include <map>
#include <utility>
#include <vector>

#include "fockdual/amplitude.hpp"
#include "fockdual/fock.hpp"
#include "fockdual/lie_reps.hpp"
#include "fockdual/sparse_operator.hpp"

namespace fockdual {

/// Odd d: -e00 + sum_{p != 0} e_pp. Even d: e_{1,-1} + e_{-1,1} + sum_{|p| != 1} e_pp.
LabelMatrix reflection_r(const ModelParams& params);

/// Columns sqrt(1/2)(|p> + i|-p>) for p > 0, sqrt(1/2)(|-p> - i|p>) for p < 0, |0> for p = 0.
LabelMatrix basis_change_t(const ModelParams& params);
/// t is unitary, so its inverse is its adjoint.
LabelMatrix basis_change_t_inverse(const ModelParams& params);

/// Dense one-body matrix over Fock modes, m[c][b] = <c|g|b>.
template <class S>
using ModeMatrix = std::vector<std::vector<S>>;

/// Module action of a one-body map: vacuum fixed, each a+_b replaced by sum_c m[c][b] a+_c.
template <class S>
SparseOperator<S> lift_modes(const ModeMatrix<S>& m, int n_modes) {
  const std::size_t dim = std::size_t{1} << n_modes;
  std::vector<std::vector<typename SparseOperator<S>::Entry>> cols(dim);
  for (std::size_t j = 0; j < dim; ++j) {
    std::map<FockState, S> v{{0u, S(1)}};
    for (int b = n_modes - 1; b >= 0; --b) {
      if (!occupied(static_cast<FockState>(j), b)) continue;
      std::map<FockState, S> next;
      for (const auto& [state, x] : v)
        for (int c = 0; c < n_modes; ++c) {
          if (ScalarTraits<S>::is_zero(m[c][b])) continue;
          auto r = apply_field(FieldOp::create, c, state);
          if (!r) continue;
          S term = m[c][b] * x;
          if (r->sign < 0) term = S(0) - term;
          auto [it, fresh] = next.try_emplace(r->state, term);
          if (!fresh) it->second += term;
        }
      v.clear();
      for (auto& [state, x] : next)
        if (!ScalarTraits<S>::is_zero(x)) v.emplace(state, std::move(x));
    }
    for (auto& [state, x] : v) cols[j].emplace_back(state, std::move(x));
  }
  return SparseOperator<S>::from_columns(std::move(cols));
}

/// The same label matrix acting on every kind.
ModeMatrix<Amplitude> kind_diagonal(const LabelMatrix& g, const ModelParams& params);

/// Throws std::domain_error for a singular g.
SparseOperator<Amplitude> lift_to_fock(const LabelMatrix& g, const ModelParams& params);

enum class SigmaBasis { delta, b };

/// sigma = rho(a+_{tau0} - a_{tau0}). The delta form is the literal descending product
/// with c = i^Omega; the b form is built from its exchange action and vacuum image.
SparseOperator<Amplitude> sigma_op(int tau0, const ModelParams& params, SigmaBasis basis);

/// (-)^Omega a+_{Omega,tau0} ... a+_{-Omega,tau0} |>.
SparseVector<Amplitude> sigma_vacuum_image(int tau0, const ModelParams& params);

/// s = sum_tau ann[tau] a_tau + cre[tau] a+_tau in the single-mode algebra.
struct OneModeReflection {
  std::vector<Amplitude> ann;
  std::vector<Amplitude> cre;

  /// s^2 = sum_tau ann[tau] cre[tau].
  Amplitude square() const;
};

/// a+_{tau0} - a_{tau0}.
OneModeReflection standard_reflection(int tau0, int k);

/// prod_p (prod_i s_i)_p for an even-length word. Throws on odd length or s_i^2 != -1.
SparseOperator<Amplitude> rho_spin(const std::vector<OneModeReflection>& word, const ModelParams& params);

/// Product state over rows given top-down as (label, length); rows read top first,
/// cells left to right, the last cell applied first.
SparseVector<Amplitude> phi_rows(const std::vector<std::pair<int, int>>& rows_top_down, const ModelParams& params);

/// phi for a diagram given by row lengths bottom-to-top; row i from the top sits at the
/// i-th largest label. Throws when the diagram has more than d rows or k columns.
SparseVector<Amplitude> phi_lambda(const std::vector<int>& rows, const ModelParams& params);

/// phi with the bottom row moved to the next lower label.
SparseVector<Amplitude> phi_lambda_down(const std::vector<int>& rows, const ModelParams& params);

}  // namespace fockdual
