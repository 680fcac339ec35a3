#include "fockdual/pin.hpp"

#include <algorithm>
#include <stdexcept>

#include "fockdual/field.hpp"

namespace fockdual {

LabelMatrix reflection_r(const ModelParams& params) {
  if (params.family != Family::orthogonal) throw std::domain_error("the reflection needs the orthogonal family");
  LabelMatrix r(params.labels());
  for (int p : params.labels()) {
    if (params.d % 2 == 1) {
      r.at(p, p) = Amplitude(p == 0 ? -1 : 1);
    } else if (p == 1 || p == -1) {
      r.at(-p, p) = Amplitude(1);
    } else {
      r.at(p, p) = Amplitude(1);
    }
  }
  return r;
}

LabelMatrix basis_change_t(const ModelParams& params) {
  LabelMatrix t(params.labels());
  const Amplitude h = Amplitude::sqrt_half();
  for (int p : params.labels()) {
    if (p > 0) {
      t.at(p, p) = h;
      t.at(-p, p) = h.times_i();
    } else if (p < 0) {
      t.at(-p, p) = h;
      t.at(p, p) = -h.times_i();
    } else {
      t.at(0, 0) = Amplitude(1);
    }
  }
  return t;
}

LabelMatrix basis_change_t_inverse(const ModelParams& params) { return basis_change_t(params).adjoint(); }

ModeMatrix<Amplitude> kind_diagonal(const LabelMatrix& g, const ModelParams& params) {
  const int n = params.modes();
  ModeMatrix<Amplitude> m(n, std::vector<Amplitude>(n));
  for (int c = 0; c < n; ++c)
    for (int b = 0; b < n; ++b) {
      const ModeIndex mc = mode_from_bit(c, params);
      const ModeIndex mb = mode_from_bit(b, params);
      if (mc.tau == mb.tau) m[c][b] = g.at(mc.p, mb.p);
    }
  return m;
}

SparseOperator<Amplitude> lift_to_fock(const LabelMatrix& g, const ModelParams& params) {
  std::vector<std::vector<QSqrt2>> rows(g.size(), std::vector<QSqrt2>(g.size()));
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = 0; j < g.size(); ++j) rows[i][j] = to_qsqrt2(g.at_pos(i, j));
  if (matrix_rank(rows, g.size()) != g.size()) throw std::domain_error("singular matrix has no module action");
  return lift_modes(kind_diagonal(g, params), params.modes());
}

SparseVector<Amplitude> sigma_vacuum_image(int tau0, const ModelParams& params) {
  FockState s = 0;
  int sign = parity_sign(params.omega());
  for (int p : params.labels()) {
    auto r = apply_field(FieldOp::create, mode_index(p, tau0, params).bit, s);
    sign *= r->sign;
    s = r->state;
  }
  return {{s, Amplitude(sign)}};
}

SparseOperator<Amplitude> sigma_op(int tau0, const ModelParams& params, SigmaBasis basis) {
  if (tau0 < 1 || tau0 > params.k) throw std::domain_error("kind out of range");
  const int n = params.modes();
  if (basis == SigmaBasis::delta) {
    auto op = SparseOperator<Amplitude>::identity(params.dim()).scaled(i_pow(params.omega()));
    auto labels = params.labels();
    for (auto it = labels.rbegin(); it != labels.rend(); ++it) {
      const int bit = mode_index(*it, tau0, params).bit;
      op = op * (field_operator(FieldOp::create, bit, n) - field_operator(FieldOp::annihilate, bit, n));
    }
    return op;
  }
  const auto vac = sigma_vacuum_image(tau0, params).front();
  std::vector<std::vector<SparseOperator<Amplitude>::Entry>> cols(params.dim());
  for (std::size_t j = 0; j < params.dim(); ++j) {
    FockState s = vac.first;
    int sign = vac.second == Amplitude(1) ? 1 : -1;
    bool alive = true;
    int count = 0;
    for (int b = n - 1; b >= 0 && alive; --b) {
      if (!occupied(static_cast<FockState>(j), b)) continue;
      ++count;
      const ModeIndex m = mode_from_bit(b, params);
      std::optional<SignedState> r;
      if (m.tau == tau0) {
        r = apply_field(FieldOp::annihilate, mode_index(-m.p, tau0, params).bit, s);
      } else {
        r = apply_field(FieldOp::create, b, s);
      }
      if (!r) {
        alive = false;
        break;
      }
      sign *= r->sign;
      s = r->state;
    }
    if (!alive) continue;
    sign *= parity_sign(static_cast<long long>(params.d) * count);
    cols[j].emplace_back(s, Amplitude(sign));
  }
  return SparseOperator<Amplitude>::from_columns(std::move(cols));
}

Amplitude OneModeReflection::square() const {
  Amplitude s;
  for (std::size_t t = 0; t < ann.size(); ++t) s += ann[t] * cre[t];
  return s;
}

OneModeReflection standard_reflection(int tau0, int k) {
  if (tau0 < 1 || tau0 > k) throw std::domain_error("kind out of range");
  OneModeReflection s{std::vector<Amplitude>(k), std::vector<Amplitude>(k)};
  s.ann[tau0 - 1] = Amplitude(-1);
  s.cre[tau0 - 1] = Amplitude(1);
  return s;
}

SparseOperator<Amplitude> rho_spin(const std::vector<OneModeReflection>& word, const ModelParams& params) {
  if (word.size() % 2 != 0) throw std::domain_error("odd-length word lies in the reflection coset");
  for (const auto& s : word) {
    if (static_cast<int>(s.ann.size()) != params.k || static_cast<int>(s.cre.size()) != params.k)
      throw std::domain_error("reflection has the wrong number of kinds");
    if (!(s.square() == Amplitude(-1))) throw std::domain_error("letter does not square to -1");
  }
  const int n = params.modes();
  auto op = SparseOperator<Amplitude>::identity(params.dim());
  for (int p : params.labels())
    for (const auto& s : word) {
      auto letter = SparseOperator<Amplitude>::zero(params.dim());
      for (int t = 1; t <= params.k; ++t) {
        const int bit = mode_index(p, t, params).bit;
        if (!s.ann[t - 1].is_zero()) letter = letter + field_operator(FieldOp::annihilate, bit, n).scaled(s.ann[t - 1]);
        if (!s.cre[t - 1].is_zero()) letter = letter + field_operator(FieldOp::create, bit, n).scaled(s.cre[t - 1]);
      }
      op = op * letter;
    }
  return op;
}

SparseVector<Amplitude> phi_rows(const std::vector<std::pair<int, int>>& rows_top_down, const ModelParams& params) {
  std::vector<int> cells;
  for (auto [p, len] : rows_top_down) {
    if (len > params.k) throw std::domain_error("row longer than k");
    for (int t = 1; t <= len; ++t) cells.push_back(mode_index(p, t, params).bit);
  }
  FockState s = 0;
  int sign = 1;
  for (auto it = cells.rbegin(); it != cells.rend(); ++it) {
    auto r = apply_field(FieldOp::create, *it, s);
    if (!r) return {};
    sign *= r->sign;
    s = r->state;
  }
  return {{s, Amplitude(sign)}};
}

namespace {

std::vector<std::pair<int, int>> place_rows(const std::vector<int>& rows, const ModelParams& params, bool down) {
  if (static_cast<int>(rows.size()) > params.d) throw std::domain_error("diagram has more than d rows");
  auto labels = params.labels();
  std::reverse(labels.begin(), labels.end());
  std::vector<std::pair<int, int>> out;
  const int n = static_cast<int>(rows.size());
  for (int i = 0; i < n; ++i) out.emplace_back(labels[i], rows[n - 1 - i]);
  if (down) {
    if (n == 0 || n >= params.d) throw std::domain_error("no row can move down");
    out.back().first = labels[n];
  }
  return out;
}

}  // namespace

SparseVector<Amplitude> phi_lambda(const std::vector<int>& rows, const ModelParams& params) {
  return phi_rows(place_rows(rows, params, false), params);
}

SparseVector<Amplitude> phi_lambda_down(const std::vector<int>& rows, const ModelParams& params) {
  return phi_rows(place_rows(rows, params, true), params);
}

}  // namespace fockdual
