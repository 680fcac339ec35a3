#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "fockdual/amplitude.hpp"
#include "fockdual/sparse_operator.hpp"

namespace fockdual {

enum class Family { orthogonal, symplectic };

std::string to_string(Family f);
Family family_from_string(const std::string& s);

/// Thrown when a request exceeds the configured mode limit.
class ResourceLimit : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr int kMaxModeLimit = 20;

/// Mode limit from FOCK_MODE_LIMIT, else 20. Values above 20 are clamped.
int default_mode_limit();

struct ModelParams {
  int d = 1;
  int k = 1;
  Family family = Family::orthogonal;

  int omega() const { return d / 2; }
  int modes() const { return d * k; }
  std::size_t dim() const { return std::size_t{1} << modes(); }

  /// Orbital labels ascending: -Omega..Omega, 0 skipped for even d.
  std::vector<int> labels() const;
  bool has_label(int p) const;
  /// Position of p within labels().
  int rank(int p) const;

  /// Throws std::domain_error on invalid parameters, ResourceLimit when d*k exceeds the limit.
  void validate(int mode_limit) const;
  void validate() const { validate(default_mode_limit()); }
};

struct ModeIndex {
  int p = 0;
  int tau = 1;
  int bit = 0;
};

ModeIndex mode_index(int p, int tau, const ModelParams& params);
ModeIndex mode_from_bit(int bit, const ModelParams& params);

using FockState = std::uint32_t;

inline bool occupied(FockState s, int bit) { return (s >> bit) & 1u; }

enum class FieldOp { create, annihilate };

struct SignedState {
  int sign = 1;
  FockState state = 0;
};

/// Applies a single creation or annihilation operator. Returns nothing when the
/// result vanishes; the sign counts occupied modes below the acted-on bit.
std::optional<SignedState> apply_field(FieldOp op, int bit, FockState state);

struct Factor {
  FieldOp op;
  int bit;
};

/// Coefficient times an operator word, read left to right (rightmost acts first).
template <class S>
struct Monomial {
  S coef{1};
  std::vector<Factor> factors;
};

/// Formal sum of monomials in field operators.
template <class S>
struct Expr {
  std::vector<Monomial<S>> terms;

  static Expr one() { return Expr{{Monomial<S>{S(1), {}}}}; }
  static Expr create(int bit) { return Expr{{Monomial<S>{S(1), {{FieldOp::create, bit}}}}}; }
  static Expr annihilate(int bit) { return Expr{{Monomial<S>{S(1), {{FieldOp::annihilate, bit}}}}}; }

  Expr& operator+=(const Expr& o) {
    terms.insert(terms.end(), o.terms.begin(), o.terms.end());
    return *this;
  }
  friend Expr operator+(Expr a, const Expr& b) { return a += b; }
  friend Expr operator-(Expr a, const Expr& b) { return a += b.scaled(S(-1)); }
  friend Expr operator*(const Expr& a, const Expr& b) {
    Expr out;
    for (const auto& x : a.terms)
      for (const auto& y : b.terms) {
        Monomial<S> m{x.coef * y.coef, x.factors};
        m.factors.insert(m.factors.end(), y.factors.begin(), y.factors.end());
        out.terms.push_back(std::move(m));
      }
    return out;
  }
  Expr scaled(const S& s) const {
    Expr out = *this;
    for (auto& t : out.terms) t.coef *= s;
    return out;
  }
};

/// Matrix of an expression on the 2^n_modes Fock basis.
template <class S>
SparseOperator<S> build_operator(const Expr<S>& expr, int n_modes) {
  for (const auto& t : expr.terms)
    for (const auto& f : t.factors)
      if (f.bit < 0 || f.bit >= n_modes) throw std::domain_error("mode out of range");
  const std::size_t dim = std::size_t{1} << n_modes;
  std::vector<std::vector<typename SparseOperator<S>::Entry>> cols(dim);
  for (std::size_t j = 0; j < dim; ++j) {
    for (const auto& t : expr.terms) {
      if (ScalarTraits<S>::is_zero(t.coef)) continue;
      FockState s = static_cast<FockState>(j);
      int sign = 1;
      bool alive = true;
      for (auto it = t.factors.rbegin(); it != t.factors.rend(); ++it) {
        auto r = apply_field(it->op, it->bit, s);
        if (!r) {
          alive = false;
          break;
        }
        sign *= r->sign;
        s = r->state;
      }
      if (alive) cols[j].emplace_back(s, sign > 0 ? t.coef : S{} - t.coef);
    }
  }
  return SparseOperator<S>::from_columns(std::move(cols));
}

/// Matrix of a single field operator.
SparseOperator<Amplitude> field_operator(FieldOp op, int bit, int n_modes);

/// Basis vector e_state as a sparse vector.
template <class S>
SparseVector<S> basis_vector(FockState state, S value = S(1)) {
  return SparseVector<S>{{state, value}};
}

}  // namespace fockdual
