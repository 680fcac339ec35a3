#include "fockdual/lie_reps.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace fockdual {

LabelMatrix::LabelMatrix(std::vector<int> labels) : labels_(std::move(labels)), m_(labels_.size() * labels_.size()) {}

LabelMatrix LabelMatrix::identity(std::vector<int> labels) {
  LabelMatrix m(std::move(labels));
  for (std::size_t i = 0; i < m.size(); ++i) m.at_pos(i, i) = Amplitude(1);
  return m;
}

int LabelMatrix::index(int label) const {
  auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
  if (it == labels_.end() || *it != label) throw std::domain_error("label out of range: " + std::to_string(label));
  return static_cast<int>(it - labels_.begin());
}

bool LabelMatrix::is_zero() const {
  return std::all_of(m_.begin(), m_.end(), [](const Amplitude& a) { return a.is_zero(); });
}

LabelMatrix LabelMatrix::transpose() const {
  LabelMatrix t(labels_);
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t j = 0; j < size(); ++j) t.at_pos(j, i) = at_pos(i, j);
  return t;
}

LabelMatrix LabelMatrix::adjoint() const {
  LabelMatrix t(labels_);
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t j = 0; j < size(); ++j) t.at_pos(j, i) = at_pos(i, j).conj();
  return t;
}

LabelMatrix LabelMatrix::scaled(const Amplitude& s) const {
  LabelMatrix t = *this;
  for (auto& x : t.m_) x *= s;
  return t;
}

LabelMatrix operator+(const LabelMatrix& a, const LabelMatrix& b) {
  if (a.labels_ != b.labels_) throw std::domain_error("label set mismatch");
  LabelMatrix r = a;
  for (std::size_t i = 0; i < r.m_.size(); ++i) r.m_[i] += b.m_[i];
  return r;
}

LabelMatrix operator-(const LabelMatrix& a, const LabelMatrix& b) {
  if (a.labels_ != b.labels_) throw std::domain_error("label set mismatch");
  LabelMatrix r = a;
  for (std::size_t i = 0; i < r.m_.size(); ++i) r.m_[i] -= b.m_[i];
  return r;
}

LabelMatrix operator*(const LabelMatrix& a, const LabelMatrix& b) {
  if (a.labels_ != b.labels_) throw std::domain_error("label set mismatch");
  const std::size_t n = a.size();
  LabelMatrix r(a.labels_);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const Amplitude& x = a.at_pos(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j)
        if (!b.at_pos(k, j).is_zero()) r.at_pos(i, j) += x * b.at_pos(k, j);
    }
  return r;
}

LabelMatrix commutator(const LabelMatrix& a, const LabelMatrix& b) { return a * b - b * a; }

int BilinearForm::s(int p) const {
  if (family == Family::orthogonal) return 1;
  return p < 0 ? -1 : 1;
}

LabelMatrix BilinearForm::matrix() const {
  LabelMatrix m(labels);
  for (int p : labels)
    if (std::binary_search(labels.begin(), labels.end(), -p)) m.at(p, -p) = Amplitude(s(p));
  return m;
}

BilinearForm bilinear_form(const ModelParams& params) { return BilinearForm{params.family, params.labels()}; }

BilinearForm kind_form(const ModelParams& params) {
  std::vector<int> labels;
  for (int t = -params.k; t <= params.k; ++t)
    if (t != 0) labels.push_back(t);
  return BilinearForm{params.family, labels};
}

bool preserves_form(const LabelMatrix& x, const BilinearForm& form) {
  const LabelMatrix b = form.matrix();
  return (x.transpose() * b + b * x).is_zero();
}

LabelMatrix ebar_on_V(int p, int q, const BilinearForm& form) {
  LabelMatrix m(form.labels);
  m.at(p, q) += Amplitude(1);
  m.at(-q, -p) -= Amplitude(form.s(p) * form.s(q));
  return m;
}

std::vector<std::pair<int, int>> algebra_basis(const BilinearForm& form) {
  std::vector<std::pair<int, int>> out;
  for (int p : form.labels)
    for (int q : form.labels) {
      const bool keep = form.family == Family::orthogonal ? p + q > 0 : p + q >= 0;
      if (keep) out.emplace_back(p, q);
    }
  return out;
}

std::vector<Amplitude> basis_coordinates(const LabelMatrix& x, const BilinearForm& form) {
  const auto basis = algebra_basis(form);
  std::vector<Amplitude> coords;
  LabelMatrix rebuilt(form.labels);
  for (auto [p, q] : basis) {
    Amplitude c = x.at(p, q);
    if (p == -q) c = c.half();
    coords.push_back(c);
    if (!c.is_zero()) rebuilt = rebuilt + ebar_on_V(p, q, form).scaled(c);
  }
  if (!(rebuilt == x)) throw std::domain_error("matrix is not in the Lie algebra of the form");
  return coords;
}

SparseOperator<Amplitude> con_generator(const LabelMatrix& x, const ModelParams& params) {
  Expr<Amplitude> e;
  for (int p : params.labels())
    for (int q : params.labels()) {
      const Amplitude& c = x.at(p, q);
      if (c.is_zero()) continue;
      for (int t = 1; t <= params.k; ++t)
        e += (Expr<Amplitude>::create(mode_index(p, t, params).bit) *
              Expr<Amplitude>::annihilate(mode_index(q, t, params).bit))
                 .scaled(c);
    }
  return build_operator(e, params.modes());
}

SparseOperator<Amplitude> ncon_generator(NconKind kind, int tau, int ups, const ModelParams& params) {
  if (tau < 1 || tau > params.k || ups < 1 || ups > params.k) throw std::domain_error("kind out of range");
  const BilinearForm b = bilinear_form(params);
  const auto labels = params.labels();
  Expr<Amplitude> e;
  using E = Expr<Amplitude>;
  switch (kind) {
    case NconKind::cartan:
      if (tau == ups) e += E::one().scaled(Amplitude(params.d).half());
      for (int p : labels)
        e += (E::create(mode_index(p, ups, params).bit) * E::annihilate(mode_index(p, tau, params).bit))
                 .scaled(Amplitude(-1));
      break;
    case NconKind::pair_annihilate:
      for (int p : labels)
        for (int q : labels)
          if (int s = b.entry(p, q))
            e += (E::annihilate(mode_index(q, tau, params).bit) * E::annihilate(mode_index(p, ups, params).bit))
                     .scaled(Amplitude(s));
      break;
    case NconKind::pair_create:
      for (int p : labels)
        for (int q : labels)
          if (int s = b.entry(p, q))
            e += (E::create(mode_index(p, tau, params).bit) * E::create(mode_index(q, ups, params).bit))
                     .scaled(Amplitude(s));
      break;
  }
  return build_operator(e, params.modes());
}

SparseOperator<Amplitude> ncon_ebar(int P, int Q, const ModelParams& params) {
  if (P > 0 && Q > 0) return ncon_generator(NconKind::cartan, P, Q, params);
  if (P > 0 && Q < 0) return ncon_generator(NconKind::pair_annihilate, P, -Q, params);
  if (P < 0 && Q > 0) return ncon_generator(NconKind::pair_create, -P, Q, params);
  if (P < 0 && Q < 0) {
    const BilinearForm kf = kind_form(params);
    return ncon_generator(NconKind::cartan, -Q, -P, params).scaled(Amplitude(-kf.s(P) * kf.s(Q)));
  }
  throw std::domain_error("kind label 0 is not used");
}

SparseOperator<Amplitude> ncon_of_matrix(const LabelMatrix& x, const ModelParams& params) {
  const BilinearForm kf = kind_form(params);
  const auto basis = algebra_basis(kf);
  const auto coords = basis_coordinates(x, kf);
  auto out = SparseOperator<Amplitude>::zero(params.dim());
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (!coords[i].is_zero()) out = out + ncon_ebar(basis[i].first, basis[i].second, params).scaled(coords[i]);
  return out;
}

std::string WeightVector::str() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < d_side.size(); ++i) os << (i ? "," : "") << d_side[i].str();
  os << ";";
  for (std::size_t i = 0; i < k_side.size(); ++i) os << (i ? "," : "") << k_side[i].str();
  os << ")";
  return os.str();
}

WeightVector cartan_weights(FockState state, const ModelParams& params) {
  WeightVector w;
  for (int p = 1; p <= params.omega(); ++p) {
    int v = 0;
    for (int t = 1; t <= params.k; ++t) {
      v += occupied(state, mode_index(p, t, params).bit);
      v -= occupied(state, mode_index(-p, t, params).bit);
    }
    w.d_side.push_back(HalfInt::from_int(v));
  }
  for (int t = 1; t <= params.k; ++t) {
    int n = 0;
    for (int p : params.labels()) n += occupied(state, mode_index(p, t, params).bit);
    w.k_side.push_back(HalfInt::from_twice(params.d - 2 * n));
  }
  return w;
}

namespace {

std::string pair_name(const char* rep, int p, int q) {
  return std::string(rep) + "(e[" + std::to_string(p) + "," + std::to_string(q) + "])";
}

}  // namespace

std::vector<NamedOperator> raising_set(Side side, const ModelParams& params) {
  std::vector<NamedOperator> out;
  if (side == Side::d_side) {
    const BilinearForm form = bilinear_form(params);
    for (auto [p, q] : algebra_basis(form)) {
      if (p <= q) continue;
      auto op = con_generator(ebar_on_V(p, q, form), params);
      if (!op.is_zero()) out.push_back({pair_name("con", p, q), std::move(op)});
    }
  } else {
    for (auto [P, Q] : algebra_basis(kind_form(params))) {
      if (P <= Q) continue;
      auto op = ncon_ebar(P, Q, params);
      if (!op.is_zero()) out.push_back({pair_name("ncon", P, Q), std::move(op)});
    }
  }
  return out;
}

std::vector<NamedOperator> generator_set(Side side, const ModelParams& params) {
  std::vector<NamedOperator> out;
  if (side == Side::d_side) {
    const BilinearForm form = bilinear_form(params);
    for (auto [p, q] : algebra_basis(form)) out.push_back({pair_name("con", p, q), con_generator(ebar_on_V(p, q, form), params)});
  } else {
    for (auto [P, Q] : algebra_basis(kind_form(params))) out.push_back({pair_name("ncon", P, Q), ncon_ebar(P, Q, params)});
  }
  return out;
}

}  // namespace fockdual
