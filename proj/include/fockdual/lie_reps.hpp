#pragma once

#include <string>
#include <vector>

#include "fockdual/amplitude.hpp"
#include "fockdual/fock.hpp"
#include "fockdual/halfint.hpp"
#include "fockdual/sparse_operator.hpp"

namespace fockdual {

/// Square matrix indexed by an ordered label set (the p labels of V, or the
/// +-tau labels of the 2k-label algebra).
class LabelMatrix {
 public:
  LabelMatrix() = default;
  explicit LabelMatrix(std::vector<int> labels);
  static LabelMatrix identity(std::vector<int> labels);

  const std::vector<int>& labels() const { return labels_; }
  std::size_t size() const { return labels_.size(); }
  int index(int label) const;

  Amplitude& at(int p, int q) { return m_[index(p) * size() + index(q)]; }
  const Amplitude& at(int p, int q) const { return m_[index(p) * size() + index(q)]; }
  Amplitude& at_pos(std::size_t i, std::size_t j) { return m_[i * size() + j]; }
  const Amplitude& at_pos(std::size_t i, std::size_t j) const { return m_[i * size() + j]; }

  bool is_zero() const;
  LabelMatrix transpose() const;
  LabelMatrix adjoint() const;
  LabelMatrix scaled(const Amplitude& s) const;

  friend LabelMatrix operator+(const LabelMatrix& a, const LabelMatrix& b);
  friend LabelMatrix operator-(const LabelMatrix& a, const LabelMatrix& b);
  friend LabelMatrix operator*(const LabelMatrix& a, const LabelMatrix& b);
  bool operator==(const LabelMatrix& o) const = default;

 private:
  std::vector<int> labels_;
  std::vector<Amplitude> m_;
};

LabelMatrix commutator(const LabelMatrix& a, const LabelMatrix& b);

/// <b|pq> = s_p delta_{p,-q}, with s_p = 1 (orthogonal) or sgn p (symplectic).
struct BilinearForm {
  Family family = Family::orthogonal;
  std::vector<int> labels;

  int s(int p) const;
  int entry(int p, int q) const { return p == -q ? s(p) : 0; }
  LabelMatrix matrix() const;
};

BilinearForm bilinear_form(const ModelParams& params);
/// Form on the 2k labels -k..-1, 1..k of the k-side algebra.
BilinearForm kind_form(const ModelParams& params);

/// x^T B + B x == 0, i.e. x preserves the form infinitesimally.
bool preserves_form(const LabelMatrix& x, const BilinearForm& form);

/// e_pq - s_p s_q e_{-q,-p}.
LabelMatrix ebar_on_V(int p, int q, const BilinearForm& form);

/// Label pairs (p, q) of the standard basis: p + q > 0 (orthogonal) or >= 0 (symplectic).
std::vector<std::pair<int, int>> algebra_basis(const BilinearForm& form);

/// Coefficients of an algebra element in algebra_basis(form); throws if x is not in the algebra.
std::vector<Amplitude> basis_coordinates(const LabelMatrix& x, const BilinearForm& form);

/// sum_{p q tau} a+_{p tau} <p|x|q> a_{q tau}.
SparseOperator<Amplitude> con_generator(const LabelMatrix& x, const ModelParams& params);

enum class NconKind { cartan, pair_annihilate, pair_create };

/// Images of ebar_{tau ups}, ebar_{tau,-ups}, ebar_{-tau,ups}.
SparseOperator<Amplitude> ncon_generator(NconKind kind, int tau, int ups, const ModelParams& params);

/// Image of ebar_{PQ} for any pair of k-side labels P, Q in +-1..+-k.
SparseOperator<Amplitude> ncon_ebar(int P, int Q, const ModelParams& params);

/// Linear extension of ncon_ebar to an element of the 2k-label algebra.
SparseOperator<Amplitude> ncon_of_matrix(const LabelMatrix& x, const ModelParams& params);

struct WeightVector {
  std::vector<HalfInt> d_side;
  std::vector<HalfInt> k_side;
  auto operator<=>(const WeightVector&) const = default;
  std::string str() const;
};

WeightVector cartan_weights(FockState state, const ModelParams& params);

enum class Side { d_side, k_side };

struct NamedOperator {
  std::string name;
  SparseOperator<Amplitude> op;
};

/// Raising operators of one side under the p >= q Borel choice; identically zero images are dropped.
std::vector<NamedOperator> raising_set(Side side, const ModelParams& params);

/// Every basis generator of one side (all images of algebra_basis).
std::vector<NamedOperator> generator_set(Side side, const ModelParams& params);

}  // namespace fockdual
