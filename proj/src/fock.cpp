#include "fockdual/fock.hpp"

#include <algorithm>
#include <cstdlib>

namespace fockdual {

std::string to_string(Family f) { return f == Family::orthogonal ? "orthogonal" : "symplectic"; }

Family family_from_string(const std::string& s) {
  if (s == "orthogonal" || s == "o") return Family::orthogonal;
  if (s == "symplectic" || s == "sp") return Family::symplectic;
  throw std::domain_error("unknown family: " + s);
}

int default_mode_limit() {
  if (const char* env = std::getenv("FOCK_MODE_LIMIT")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<int>(std::min<long>(v, kMaxModeLimit));
  }
  return kMaxModeLimit;
}

std::vector<int> ModelParams::labels() const {
  std::vector<int> out;
  const int om = omega();
  for (int p = -om; p <= om; ++p) {
    if (p == 0 && d % 2 == 0) continue;
    out.push_back(p);
  }
  return out;
}

bool ModelParams::has_label(int p) const {
  const int om = omega();
  if (p < -om || p > om) return false;
  return !(p == 0 && d % 2 == 0);
}

int ModelParams::rank(int p) const {
  if (!has_label(p)) throw std::domain_error("orbital label out of range: " + std::to_string(p));
  const int om = omega();
  int r = p + om;
  if (d % 2 == 0 && p > 0) --r;
  return r;
}

void ModelParams::validate(int mode_limit) const {
  if (d < 1 || k < 1) throw std::domain_error("d and k must be positive");
  if (family == Family::symplectic && d % 2 != 0) throw std::domain_error("symplectic family needs even d");
  if (mode_limit > kMaxModeLimit) mode_limit = kMaxModeLimit;
  if (modes() > mode_limit)
    throw ResourceLimit("d*k = " + std::to_string(modes()) + " exceeds mode limit " + std::to_string(mode_limit));
}

ModeIndex mode_index(int p, int tau, const ModelParams& params) {
  if (tau < 1 || tau > params.k) throw std::domain_error("kind out of range: " + std::to_string(tau));
  return ModeIndex{p, tau, (tau - 1) * params.d + params.rank(p)};
}

ModeIndex mode_from_bit(int bit, const ModelParams& params) {
  if (bit < 0 || bit >= params.modes()) throw std::domain_error("bit out of range");
  const auto labels = params.labels();
  return ModeIndex{labels[bit % params.d], bit / params.d + 1, bit};
}

std::optional<SignedState> apply_field(FieldOp op, int bit, FockState state) {
  const bool occ = occupied(state, bit);
  if ((op == FieldOp::create) == occ) return std::nullopt;
  const FockState lower = state & ((FockState{1} << bit) - 1u);
  const int sign = (__builtin_popcount(lower) % 2 == 0) ? 1 : -1;
  return SignedState{sign, state ^ (FockState{1} << bit)};
}

SparseOperator<Amplitude> field_operator(FieldOp op, int bit, int n_modes) {
  if (bit < 0 || bit >= n_modes) throw std::domain_error("mode out of range");
  const std::size_t dim = std::size_t{1} << n_modes;
  std::vector<std::vector<SparseOperator<Amplitude>::Entry>> cols(dim);
  for (std::size_t j = 0; j < dim; ++j) {
    if (auto r = apply_field(op, bit, static_cast<FockState>(j))) cols[j].emplace_back(r->state, Amplitude(r->sign));
  }
  return SparseOperator<Amplitude>::from_columns(std::move(cols));
}

}  // namespace fockdual
