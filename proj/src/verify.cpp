#include "fockdual/verify.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <set>
#include <stdexcept>

#include "fockdual/pin.hpp"

namespace fockdual {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

using Row = std::vector<std::pair<std::uint32_t, mpq_class>>;

/// Echelon basis of a row space with sparse rows; every stored row has leading entry 1.
class SparseEchelon {
 public:
  explicit SparseEchelon(std::size_t ncols) : ncols_(ncols) {}

  void insert(Row r) {
    while (!r.empty()) {
      auto it = pivots_.find(r.front().first);
      if (it == pivots_.end()) {
        const mpq_class inv = 1 / r.front().second;
        for (auto& e : r) e.second *= inv;
        const auto lead = r.front().first;
        pivots_.emplace(lead, std::move(r));
        return;
      }
      r = axpy(r, it->second, -r.front().second);
    }
  }

  /// Basis of the right nullspace: one vector per free column, 1 there and 0 at other free columns.
  std::vector<Row> nullspace() {
    for (auto it = pivots_.rbegin(); it != pivots_.rend(); ++it) {
      Row& row = it->second;
      for (;;) {
        bool changed = false;
        for (std::size_t i = 1; i < row.size(); ++i) {
          auto p = pivots_.find(row[i].first);
          if (p == pivots_.end()) continue;
          row = axpy(row, p->second, -row[i].second);
          changed = true;
          break;
        }
        if (!changed) break;
      }
    }
    std::vector<Row> basis;
    for (std::uint32_t f = 0; f < ncols_; ++f) {
      if (pivots_.count(f)) continue;
      Row v;
      for (const auto& [lead, row] : pivots_)
        for (const auto& [c, x] : row)
          if (c == f) v.emplace_back(lead, -x);
      v.emplace_back(f, mpq_class(1));
      std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
      basis.push_back(std::move(v));
    }
    return basis;
  }

 private:
  std::size_t ncols_;
  std::map<std::uint32_t, Row> pivots_;

  static Row axpy(const Row& a, const Row& b, const mpq_class& s) {
    Row out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
      if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
        out.push_back(a[i++]);
      } else if (i == a.size() || b[j].first < a[i].first) {
        out.emplace_back(b[j].first, s * b[j].second);
        ++j;
      } else {
        mpq_class v = a[i].second + s * b[j].second;
        if (sgn(v) != 0) out.emplace_back(a[i].first, std::move(v));
        ++i;
        ++j;
      }
    }
    return out;
  }
};

mpq_class real_integer(const Amplitude& a) {
  if (!a.is_gaussian_integer() || a.x().im != 0) throw std::logic_error("raising operator entry is not a real integer");
  return mpq_class(static_cast<long>(a.x().re));
}

HighestWeight as_hw(const std::vector<HalfInt>& entries, HWFamily family) { return HighestWeight{family, entries}; }

WeightVector weight_of(const HighestWeight& lambda, const HighestWeight& w) { return WeightVector{lambda.entries, w.entries}; }

std::vector<int> rows_of(const HighestWeight& hw) {
  std::vector<int> rows;
  for (auto e : hw.entries) {
    const int v = e.abs().as_int();
    if (v > 0) rows.push_back(v);
  }
  return rows;
}

std::vector<std::pair<std::string, std::string>> model_params(const ModelParams& p) {
  return {{"d", std::to_string(p.d)}, {"k", std::to_string(p.k)}, {"family", to_string(p.family)}};
}

}  // namespace

std::vector<JointHWVector> joint_hw_oracle(const ModelParams& params, int mode_limit) {
  params.validate(mode_limit);
  std::vector<SparseOperator<Amplitude>> ops;
  for (auto side : {Side::d_side, Side::k_side})
    for (auto& n : raising_set(side, params)) ops.push_back(std::move(n.op));

  std::map<WeightVector, std::vector<FockState>> blocks;
  for (std::size_t s = 0; s < params.dim(); ++s)
    blocks[cartan_weights(static_cast<FockState>(s), params)].push_back(static_cast<FockState>(s));

  std::vector<JointHWVector> out;
  for (const auto& [weight, states] : blocks) {
    SparseEchelon ech(states.size());
    for (const auto& op : ops) {
      std::map<std::uint32_t, Row> rows;
      for (std::uint32_t c = 0; c < states.size(); ++c)
        for (std::size_t idx = op.col_begin(states[c]); idx < op.col_end(states[c]); ++idx)
          rows[op.row_at(idx)].emplace_back(c, real_integer(op.val_at(idx)));
      for (auto& [t, r] : rows) ech.insert(std::move(r));
    }
    for (auto& v : ech.nullspace()) {
      JointHWVector hw{weight, {}};
      for (auto& [c, x] : v) hw.vector.emplace_back(states[c], GaussRat(std::move(x), 0));
      out.push_back(std::move(hw));
    }
  }
  return out;
}

std::map<WeightVector, int> oracle_multiplicities(const std::vector<JointHWVector>& hw) {
  std::map<WeightVector, int> m;
  for (const auto& v : hw) ++m[v.weight];
  return m;
}

std::map<WeightVector, int> oracle_multiplicities_t_basis(const ModelParams& params,
                                                         const std::vector<WeightVector>& weights, int* total_hw) {
  const auto T = lift_to_fock(basis_change_t(params), params);
  const auto Ti = lift_to_fock(basis_change_t_inverse(params), params);
  const std::size_t dim = params.dim();
  auto dense_rows = [&](const SparseOperator<Amplitude>& op, std::vector<std::vector<QSqrt2>>& rows) {
    const auto conj = Ti * op * T;
    std::vector<std::vector<QSqrt2>> block(dim, std::vector<QSqrt2>(dim));
    for (std::size_t j = 0; j < dim; ++j)
      for (std::size_t idx = conj.col_begin(j); idx < conj.col_end(j); ++idx) block[conj.row_at(idx)][j] = to_qsqrt2(conj.val_at(idx));
    for (auto& r : block)
      if (std::any_of(r.begin(), r.end(), [](const QSqrt2& x) { return !x.is_zero(); })) rows.push_back(std::move(r));
  };
  std::vector<std::vector<QSqrt2>> raising;
  for (auto side : {Side::d_side, Side::k_side})
    for (const auto& n : raising_set(side, params)) dense_rows(n.op, raising);
  if (total_hw) *total_hw = static_cast<int>(nullspace(raising, dim).size());

  const BilinearForm form = bilinear_form(params);
  std::vector<SparseOperator<Amplitude>> cartan;
  for (int p = 1; p <= params.omega(); ++p) cartan.push_back(con_generator(ebar_on_V(p, p, form), params));
  for (int t = 1; t <= params.k; ++t) cartan.push_back(ncon_generator(NconKind::cartan, t, t, params));

  std::map<WeightVector, int> out;
  for (const auto& w : weights) {
    auto rows = raising;
    std::vector<HalfInt> values = w.d_side;
    values.insert(values.end(), w.k_side.begin(), w.k_side.end());
    for (std::size_t i = 0; i < cartan.size(); ++i) {
      Amplitude shift = Amplitude(values[i].twice).half();
      dense_rows(cartan[i] - SparseOperator<Amplitude>::identity(dim).scaled(shift), rows);
    }
    out[w] = static_cast<int>(nullspace(rows, dim).size());
  }
  return out;
}

int irreducible_summands(const Label& label, bool reducible) {
  if (label.kind == Label::Kind::weight) return reducible ? 2 : 1;
  const GroupDiagram& g = label.diagram;
  if (!g.integral()) return 2;
  const auto depths = g.column_depths();
  const int c1 = depths.empty() ? 0 : depths[0];
  return 2 * c1 == g.N ? 2 : 1;
}

std::vector<std::vector<int>> frame_diagrams(const ModelParams& params) {
  std::vector<std::vector<int>> out;
  for (const auto& g : o_diagrams(params)) out.push_back(integral_rows(g));
  return out;
}

SignCheck sigma_sign_check(const std::vector<int>& rows, const ModelParams& params) {
  GroupDiagram g{Group::O, params.d, {}};
  for (int r : rows) g.rows.push_back(HalfInt::from_int(r));
  if (!validate_diagram(g)) throw std::domain_error("diagram does not fit: " + g.str());
  const auto depths = g.column_depths();
  const int c = depths.empty() ? 0 : depths[0];
  SignCheck out;
  out.predicted = parity_sign(static_cast<long long>(g.cells()) * params.d + c * (params.d - c) + params.omega());
  const auto sigma = sigma_op(1, params, SigmaBasis::b);
  const auto lhs = fockdual::apply(sigma, phi_lambda(rows, params));
  const auto rhs = phi_lambda(integral_rows(associated_diagram(g)), params);
  if (lhs == rhs) out.computed = 1;
  SparseVector<Amplitude> neg = rhs;
  for (auto& e : neg) e.second = -e.second;
  if (lhs == neg) out.computed = -1;
  out.pass = out.computed == out.predicted;
  return out;
}

DualityReport verify_duality(const ModelParams& params, Duality duality, const VerifyOptions& options) {
  const auto t0 = Clock::now();
  params.validate(options.mode_limit);
  if (duality_family(duality) != params.family) throw std::domain_error("duality does not match the form family");

  DualityReport rep;
  rep.params = params;
  rep.duality = duality;

  const auto frame = enumerate_frame_pairs(params, duality);
  const auto oracle = joint_hw_oracle(params, options.mode_limit);
  const auto mult = oracle_multiplicities(oracle);

  auto d_gens = generator_set(Side::d_side, params);
  auto k_gens = generator_set(Side::k_side, params);
  bool commutant = true;
  for (const auto& x : d_gens)
    for (const auto& y : k_gens)
      if (!commutator(x.op, y.op).is_zero()) commutant = false;

  std::vector<SparseOperator<Amplitude>> raising;
  for (auto side : {Side::d_side, Side::k_side})
    for (auto& n : raising_set(side, params)) raising.push_back(std::move(n.op));

  const bool orthogonal = params.family == Family::orthogonal;
  const bool even_d = params.d % 2 == 0;
  SparseOperator<Amplitude> R, sigma;
  if (orthogonal) {
    R = lift_to_fock(reflection_r(params), params);
    sigma = sigma_op(1, params, SigmaBasis::b);
  }

  auto oracle_vectors = [&](const WeightVector& w) {
    std::vector<SparseVector<GaussRat>> vs;
    for (const auto& v : oracle)
      if (v.weight == w) vs.push_back(v.vector);
    return vs;
  };
  auto to_gr = [](const SparseVector<Amplitude>& v) { return to_field_vector<GaussRat>(v); };
  auto is_joint_hw = [&](const SparseVector<Amplitude>& v, const WeightVector& w) {
    if (v.size() != 1) return false;
    if (!(cartan_weights(v.front().first, params) == w)) return false;
    return std::all_of(raising.begin(), raising.end(), [&](const auto& op) { return fockdual::apply(op, v).empty(); });
  };
  auto ratio = [](const SparseVector<Amplitude>& u, const SparseVector<Amplitude>& v) -> int {
    if (u == v) return 1;
    SparseVector<Amplitude> neg = v;
    for (auto& e : neg) e.second = -e.second;
    return u == neg ? -1 : 0;
  };
  auto eigen_of = [](const SparseOperator<Amplitude>& g, const SparseVector<GaussRat>& v) {
    auto gv = apply_exact(g, v);
    auto c = proportionality(gv, v);
    if (!c) return 0;
    if (*c == GaussRat(1)) return 1;
    if (*c == GaussRat(-1)) return -1;
    return 2;
  };

  std::multiset<WeightVector> expected_weights;
  mpz_class dim_sum = 0;
  int summands = 0;
  bool all_pairs = true;
  bool reducible_rule = true;
  bool half_integral_rule = true;

  for (const auto& fp : frame) {
    PairReport pr;
    pr.d_label = fp.d_label;
    pr.k_label = fp.k_label;
    pr.dim_d = fp.dim_d;
    pr.dim_k = fp.dim_k;
    dim_sum += fp.dim_d * fp.dim_k;

    bool d_red = false, k_red = false;
    if (duality == Duality::o_o) {
      d_red = fp.reducible_side & 1;
      k_red = fp.reducible_side & 2;
    }
    summands += irreducible_summands(fp.d_label, d_red) * irreducible_summands(fp.k_label, k_red);

    bool found = true;
    std::vector<std::vector<SparseVector<GaussRat>>> vecs;
    for (const auto& e : fp.expected) {
      const WeightVector w = weight_of(e.lambda, e.w);
      expected_weights.insert(w);
      auto vs = oracle_vectors(w);
      pr.hw_vectors += static_cast<int>(vs.size());
      if (vs.size() != 1) found = false;
      vecs.push_back(std::move(vs));
    }
    pr.oracle_multiplicity = static_cast<int>(vecs.front().size());
    pr.checks.emplace_back("oracle_found", found);

    if (duality == Duality::o_o) {
      const bool one = fp.reducible_side == 1 || fp.reducible_side == 2;
      reducible_rule = reducible_rule && one;
      pr.checks.emplace_back("exactly_one_reducible", one);
    }
    if (orthogonal && !even_d && (duality == Duality::o_o || duality == Duality::o_Pin)) {
      bool half = std::all_of(fp.frame_w.entries.begin(), fp.frame_w.entries.end(), [](HalfInt h) { return !h.is_integral(); });
      if (fp.k_label.kind == Label::Kind::diagram) half = half && !fp.k_label.diagram.integral();
      half_integral_rule = half_integral_rule && half;
      pr.checks.emplace_back("k_side_half_integral", half);
    }

    // phi vectors of the frame weight
    const auto& lam = fp.frame_lambda;
    const auto& w = fp.frame_w;
    const auto rows = rows_of(lam);
    const bool bottom = orthogonal && even_d && !lam.entries.empty() && lam.entries[0] > HalfInt{};
    const auto phi_a = phi_lambda(rows, params);
    const WeightVector wa = weight_of(lam, w);
    SparseVector<Amplitude> phi_b;
    WeightVector wb;
    if (orthogonal) {
      if (bottom) {
        phi_b = phi_lambda_down(rows, params);
        wb = weight_of(lam.first_negated(), w);
      } else {
        phi_b = phi_lambda(integral_rows(o_diagram(lam, params.d, true)), params);
        wb = weight_of(lam, w.first_negated());
      }
    }

    // which phi vectors belong to this pair
    bool use_a = true, use_b = orthogonal;
    if (fp.expected.size() == 1 && fp.expected.front().eigen != 0) {
      use_a = fp.expected.front().eigen == 1;
      use_b = !use_a;
    }

    bool phi_hw = true, phi_oracle = true;
    auto check_phi = [&](const SparseVector<Amplitude>& phi, const WeightVector& wt) {
      phi_hw = phi_hw && is_joint_hw(phi, wt);
      auto vs = oracle_vectors(wt);
      phi_oracle = phi_oracle && vs.size() == 1 && proportionality(to_gr(phi), vs.front()).has_value();
    };
    if (use_a) check_phi(phi_a, wa);
    if (use_b) check_phi(phi_b, wb);
    pr.checks.emplace_back("phi_joint_hw", phi_hw);
    pr.checks.emplace_back("phi_matches_oracle", phi_oracle);

    if (orthogonal) {
      const auto r_a = fockdual::apply(R, phi_a);
      const auto r_b = fockdual::apply(R, phi_b);
      bool r_ok;
      if (bottom) {
        r_ok = ratio(r_a, phi_b) != 0;
      } else {
        r_ok = (!use_a || ratio(r_a, phi_a) == 1) && (!use_b || ratio(r_b, phi_b) == -1);
      }
      pr.checks.emplace_back("r_phi", r_ok);

      const auto s_a = fockdual::apply(sigma, phi_a);
      const auto s_b = fockdual::apply(sigma, phi_b);
      bool s_ok;
      if (bottom) {
        s_ok = (!use_a || ratio(s_a, phi_a) == 1) && (!use_b || ratio(s_b, phi_b) == -1);
      } else {
        const int n = static_cast<int>(std::accumulate(rows.begin(), rows.end(), 0));
        const int c = static_cast<int>(rows.size());
        const int gamma = parity_sign(static_cast<long long>(n) * params.d + c * (params.d - c) + params.omega());
        s_ok = ratio(s_a, phi_b) == gamma;
      }
      pr.checks.emplace_back("sigma_phi", s_ok);
    }

    auto eigen_check = [&](const SparseOperator<Amplitude>& g) {
      bool ok = found;
      if (!ok) return false;
      if (fp.expected.size() == 1) {
        return eigen_of(g, vecs[0].front()) == fp.expected[0].eigen;
      }
      for (std::size_t i = 0; i < 2; ++i) {
        auto gv = apply_exact(g, vecs[i].front());
        auto c = proportionality(gv, vecs[1 - i].front());
        ok = ok && c.has_value() && fp.expected[i].eigen == 0;
      }
      return ok;
    };
    if (duality == Duality::O_o) pr.checks.emplace_back("r_eigen", eigen_check(R));
    if (duality == Duality::o_Pin) pr.checks.emplace_back("sigma_eigen", eigen_check(sigma));

    for (const auto& [name, ok] : pr.checks) all_pairs = all_pairs && ok;
    rep.pairs.push_back(std::move(pr));
  }

  std::multiset<WeightVector> oracle_weights;
  bool multiplicity_free = true;
  bool valid = true;
  const HWFamily dfam = d_side_family(params), kfam = k_side_family(params);
  for (const auto& [w, m] : mult) {
    for (int i = 0; i < m; ++i) oracle_weights.insert(w);
    multiplicity_free = multiplicity_free && m == 1;
    valid = valid && validate_highest_weight(as_hw(w.d_side, dfam)) && validate_highest_weight(as_hw(w.k_side, kfam));
  }

  rep.dimension_sum = dim_sum;
  rep.checks.emplace_back("commutant", commutant);
  rep.checks.emplace_back("label_set_matches_oracle", expected_weights == oracle_weights);
  rep.checks.emplace_back("dimension_closure", dim_sum == (mpz_class(1) << params.modes()));
  rep.checks.emplace_back("multiplicity_free", multiplicity_free);
  rep.checks.emplace_back("hw_count", summands == static_cast<int>(oracle.size()));
  rep.checks.emplace_back("oracle_weights_dominant", valid);
  if (duality == Duality::o_o) rep.checks.emplace_back("one_reducible_side", reducible_rule);
  if (orthogonal && !even_d && (duality == Duality::o_o || duality == Duality::o_Pin))
    rep.checks.emplace_back("k_side_half_integral", half_integral_rule);
  rep.checks.emplace_back("pairs_pass", all_pairs);

  rep.all_pass = std::all_of(rep.checks.begin(), rep.checks.end(), [](const auto& c) { return c.second; });
  rep.elapsed_ms = options.timing ? ms_since(t0) : 0.0;
  return rep;
}

bool CheckReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const NamedCheck& c) { return c.pass; });
}

CheckReport pin_check(const ModelParams& params, const VerifyOptions& options) {
  const auto t0 = Clock::now();
  params.validate(options.mode_limit);
  if (params.family != Family::orthogonal) throw std::domain_error("pin-check needs the orthogonal family");
  CheckReport rep;
  rep.command = "pin-check";
  rep.params = model_params(params);
  auto add = [&](std::string name, bool ok, std::string detail = {}) { rep.checks.push_back({std::move(name), ok, std::move(detail)}); };

  const std::size_t dim = params.dim();
  const auto I = SparseOperator<Amplitude>::identity(dim);
  const auto sign_d = I.scaled(Amplitude(parity_sign(params.d)));
  const auto T = lift_to_fock(basis_change_t(params), params);
  const auto Ti = lift_to_fock(basis_change_t_inverse(params), params);
  const auto R = lift_to_fock(reflection_r(params), params);

  std::vector<SparseOperator<Amplitude>> sb, sd;
  for (int t = 1; t <= params.k; ++t) {
    sb.push_back(sigma_op(t, params, SigmaBasis::b));
    sd.push_back(sigma_op(t, params, SigmaBasis::delta));
  }

  bool sq = true, change = true, vac = true, comm = true, anti = true;
  for (int t = 0; t < params.k; ++t) {
    sq = sq && sb[t] * sb[t] == sign_d && sd[t] * sd[t] == sign_d;
    change = change && Ti * sd[t] * T == sb[t];
    vac = vac && fockdual::apply(sb[t], basis_vector<Amplitude>(0)) == sigma_vacuum_image(t + 1, params);
    for (const auto& g : generator_set(Side::d_side, params)) comm = comm && commutator(sb[t], g.op).is_zero();
    anti = anti && R * sb[t] == (sb[t] * R).scaled(Amplitude(-1));
  }
  add("sigma_squared", sq);
  add("sigma_basis_change", change);
  add("sigma_vacuum_image", vac);
  add("sigma_commutes_o", comm);
  add("sigma_anticommutes_r", anti);

  const auto s = standard_reflection(1, params.k);
  OneModeReflection s2{std::vector<Amplitude>(params.k), std::vector<Amplitude>(params.k)};
  s2.ann[0] = Amplitude::i();
  s2.cre[0] = Amplitude::i();
  add("spin_minus_one", rho_spin({s, s}, params) == sign_d && rho_spin({s2, s2}, params) == sign_d);

  add("lift_r_involution", R * R == I);
  add("lift_t_inverse", T * Ti == I);
  add("lift_multiplicative", lift_to_fock(reflection_r(params) * basis_change_t(params), params) == R * T);

  bool eq = true, self = true;
  int count = 0;
  for (const auto& rows : frame_diagrams(params)) {
    const auto sc = sigma_sign_check(rows, params);
    eq = eq && sc.pass;
    ++count;
    if (!rows.empty() && 2 * static_cast<int>(rows.size()) == params.d) self = self && sc.computed == 1;
  }
  add("sigma_sign_formula", eq, std::to_string(count) + " diagrams");
  if (params.d % 2 == 0) add("self_associated_fixed", self);

  if (params.k >= 2) {
    const int g = parity_sign(params.d);
    add("sigma_kinds_graded_commute", sb[0] * sb[1] == (sb[1] * sb[0]).scaled(Amplitude(g)));
    const auto word = rho_spin({standard_reflection(2, params.k), standard_reflection(1, params.k)}, params);
    add("sigma_pair_is_spin_image", sd[1] * sd[0] == word);
  }

  rep.elapsed_ms = options.timing ? ms_since(t0) : 0.0;
  return rep;
}

namespace {

using SOp = SurdOp;

SOp surd(const Op& op) { return to_surd_op(op); }

bool angular_algebra(const AngularMomentum& a) {
  const Surd<Amplitude> i(Amplitude::i());
  return commutator(a.x, a.y) == a.z.scaled(i) && commutator(a.y, a.z) == a.x.scaled(i) &&
         commutator(a.z, a.x) == a.y.scaled(i);
}

bool commutes_all(const SOp& x, const AngularMomentum& a) {
  return commutator(x, a.x).is_zero() && commutator(x, a.y).is_zero() && commutator(x, a.z).is_zero();
}

bool vectors_commute(const AngularMomentum& a, const AngularMomentum& b) {
  return commutes_all(a.x, b) && commutes_all(a.y, b) && commutes_all(a.z, b);
}

Op field(FieldOp f, int bit, const ModelParams& m) { return field_operator(f, bit, m.modes()); }

/// X a+_b = c a_{b'} X for every (b, b', c) in the list.
bool conjugates(const Op& X, const std::vector<std::tuple<int, int, int>>& rel, const ModelParams& m) {
  for (auto [b, bp, c] : rel)
    if (!(X * field(FieldOp::create, b, m) == (field(FieldOp::annihilate, bp, m) * X).scaled(Amplitude(c)))) return false;
  return true;
}

/// Ratio c with a = c b, if the operators are proportional.
std::optional<Amplitude> op_ratio(const Op& a, const Op& b) {
  if (a.nnz() != b.nnz() || b.is_zero()) return std::nullopt;
  for (std::size_t j = 0; j < b.dim(); ++j)
    if (b.col_begin(j) < b.col_end(j)) {
      const auto& bv = b.val_at(b.col_begin(j));
      const auto av = a.entry(b.row_at(b.col_begin(j)), j);
      for (Amplitude c : {Amplitude(1), Amplitude(-1), Amplitude::i(), -Amplitude::i(), Amplitude(2), Amplitude(-2)})
        if (av == c * bv && a == b.scaled(c)) return c;
      return std::nullopt;
    }
  return std::nullopt;
}

}  // namespace

CheckReport ph_check(const ShellParams& shell, const VerifyOptions& options) {
  const auto t0 = Clock::now();
  if (shell.k != 2) throw std::domain_error("ph-check needs k = 2");
  shell.validate(options.mode_limit);
  CheckReport rep;
  rep.command = "ph-check";
  rep.params = {{"l", std::to_string(shell.l)}, {"k", "2"}, {"d", std::to_string(shell.d())}};
  auto add = [&](std::string name, bool ok, std::string detail = {}) { rep.checks.push_back({std::move(name), ok, std::move(detail)}); };

  const ModelParams m = shell.model();
  const int l = shell.l;
  const std::size_t dim = m.dim();
  const auto I = Op::identity(dim);
  const auto vac = basis_vector<Amplitude>(0);
  auto bit = [&](int ml, int tau) { return mode_index(ml, tau, m).bit; };

  const auto L = orbital_L(shell);
  const auto S = spin_S(shell);
  const auto Q = quasispin_Q(shell);
  const auto c = conjugation_ops(shell);
  const auto s_up = sigma_m(1, shell);
  const auto s_dn = sigma_m(2, shell);

  add("L_angular_momentum_algebra", angular_algebra(L));
  add("S_angular_momentum_algebra", angular_algebra(S));
  add("L_commutes_S", vectors_commute(L, S));
  add("sigma_halves_anticommute", s_up * s_dn == (s_dn * s_up).scaled(Amplitude(-1)));

  std::vector<std::tuple<int, int, int>> c1_rel, c1_rel_neg, racah;
  for (int ml = -l; ml <= l; ++ml)
    for (int t = 1; t <= 2; ++t) {
      const int e = parity_sign(l + ml);
      c1_rel.emplace_back(bit(ml, t), bit(-ml, t), e);
      c1_rel_neg.emplace_back(bit(ml, t), bit(-ml, t), -e);
      const int ms2 = t == 1 ? 1 : -1;
      racah.emplace_back(bit(ml, t), bit(-ml, 3 - t), parity_sign((2 * l + 1 + 2 * ml + ms2) / 2));
    }
  add("C1_conjugation_relation", conjugates(c.C1, c1_rel, m));
  add("C1_conjugation_relation_opposite_sign", conjugates(c.C1, c1_rel_neg, m));
  add("C1_commutes_L", commutes_all(surd(c.C1), L));

  add("F_block_equals_rotation_lift", c.F == pair_rotation_lift(1, 2, shell));
  bool f_act = fockdual::apply(c.F, vac) == vac;
  for (int ml = -l; ml <= l; ++ml) {
    f_act = f_act && c.F * field(FieldOp::create, bit(ml, 1), m) == (field(FieldOp::create, bit(ml, 2), m) * c.F).scaled(Amplitude(-1));
    f_act = f_act && c.F * field(FieldOp::create, bit(ml, 2), m) == field(FieldOp::create, bit(ml, 1), m) * c.F;
  }
  add("F_action", f_act);
  {
    const auto F = surd(c.F), Ft = surd(c.F.adjoint());
    const Surd<Amplitude> minus(Amplitude(-1));
    add("F_rotates_spin", F * S.y * Ft == S.y && F * S.z * Ft == S.z.scaled(minus) && F * S.x * Ft == S.x.scaled(minus));
  }

  add("C2_commutes_L", commutes_all(surd(c.C2), L));
  add("C2_commutes_S", commutes_all(surd(c.C2), S));
  add("C2_racah_relation", conjugates(c.C2, racah, m));
  add("C3_racah_relation", conjugates(c.C3, racah, m));
  add("C3_commutes_L", commutes_all(surd(c.C3), L));
  add("C3_commutes_S", commutes_all(surd(c.C3), S));
  add("C3_equals_C2", c.C3 == c.C2);
  {
    std::vector<std::vector<Op::Entry>> cols(dim);
    for (std::size_t s = 0; s < dim; ++s) cols[s].emplace_back(s, Amplitude(parity_sign(__builtin_popcount(static_cast<unsigned>(s)))));
    const auto P = Op::from_columns(std::move(cols));
    const auto r = op_ratio(c.C2, c.C3 * P);
    add("C2_equals_C3_times_parity", r.has_value() && *r == Amplitude(1), r ? "ratio " + r->str() : "not proportional");
    const auto r2 = op_ratio(c.C2, c.C3);
    add("C2_proportional_C3", r2.has_value(), r2 ? "ratio " + r2->str() : "not proportional");
  }
  const auto fc1 = fockdual::apply(c.F * c.C1, vac);
  const auto c1f = fockdual::apply(c.C1 * c.F, vac);
  add("FC1_vacuum_is_vacuum", fc1 == vac);
  add("C1F_vacuum_is_vacuum", c1f == vac);
  add("FC1_vacuum_equals_C1F_vacuum", fc1 == c1f);
  {
    SparseVector<Amplitude> pairs = vac;
    for (int ml = -l; ml <= l; ++ml) {
      Op pr = field(FieldOp::create, bit(ml, 1), m) * field(FieldOp::create, bit(-ml, 2), m);
      pairs = fockdual::apply(pr, pairs);
    }
    for (auto& e : pairs) e.second *= Amplitude(parity_sign(l));
    add("C3_vacuum_pairs", fockdual::apply(c.C3, vac) == pairs);
  }

  const Amplitude half_d = Amplitude(-shell.d()).half();
  add("Qz_vacuum", fockdual::apply(Q.z, vac) == SparseVector<Amplitude>{{0u, half_d}});
  add("Q_sl2", commutator(Q.plus, Q.minus) == Q.z.scaled(Amplitude(2)) && commutator(Q.z, Q.plus) == Q.plus &&
                   commutator(Q.z, Q.minus) == Q.minus.scaled(Amplitude(-1)));
  const AngularMomentum Qs{surd(Q.z), surd(Q.plus), surd(Q.minus), surd(Q.x), surd(Q.y)};
  add("Q_angular_momentum_algebra", angular_algebra(Qs));
  add("Q_commutes_S", vectors_commute(Qs, S));
  {
    // sigma_down S sigma_down^-1 = (-Q_x, -Q_y, Q_z)
    const auto sd = surd(s_dn);
    const Surd<Amplitude> minus(Amplitude(-1));
    add("sigma_maps_S_to_Q", sd * S.z == Qs.z * sd && sd * S.plus == (Qs.plus * sd).scaled(minus) &&
                                 sd * S.minus == (Qs.minus * sd).scaled(minus));
  }
  {
    // sp(2) of the 2d modes with the product Wigner form
    Expr<Amplitude> create_pair, annihilate_pair;
    for (int ml = -l; ml <= l; ++ml)
      for (int t = 1; t <= 2; ++t) {
        const int ms2 = t == 1 ? 1 : -1;
        const int b = parity_sign(l - ml) * parity_sign((1 - ms2) / 2);
        create_pair += (Expr<Amplitude>::create(bit(ml, t)) * Expr<Amplitude>::create(bit(-ml, 3 - t))).scaled(Amplitude(b));
        annihilate_pair +=
            (Expr<Amplitude>::annihilate(bit(-ml, 3 - t)) * Expr<Amplitude>::annihilate(bit(ml, t))).scaled(Amplitude(b));
      }
    const auto up = build_operator(create_pair, m.modes());
    const auto down = build_operator(annihilate_pair, m.modes());
    Expr<Amplitude> cart = Expr<Amplitude>::one().scaled(Amplitude(shell.d()));
    for (int b = 0; b < m.modes(); ++b) cart = cart - Expr<Amplitude>::create(b) * Expr<Amplitude>::annihilate(b);
    const auto h = build_operator(cart, m.modes());
    const auto ru = op_ratio(up, Q.plus), rd = op_ratio(down, Q.minus);
    add("Q_spans_pair_sp2", ru && rd && h == Q.z.scaled(Amplitude(-2)),
        ru && rd ? "ratios " + ru->str() + ", " + rd->str() : "not proportional");
  }

  // single-j subspaces
  const auto W = coupling_lift(shell);
  const auto Jc = coupled_J(shell);
  const auto js = shell_js(shell);
  Op qsum = Op::zero(dim), qlit = Op::zero(dim), cprod = I;
  bool cg_ok = true;
  for (HalfInt j : js)
    for (HalfInt jp : js)
      for (int m2 = -std::min(j.twice, jp.twice); m2 <= std::min(j.twice, jp.twice); m2 += 2) {
        RatSurd acc;
        for (int s2 : {1, -1}) {
          const int ml2 = m2 - s2;
          if (std::abs(ml2) > 2 * l) continue;
          acc += cg_half_coupling(l, j, ml2 / 2, HalfInt::from_twice(s2)) * cg_half_coupling(l, jp, ml2 / 2, HalfInt::from_twice(s2));
        }
        cg_ok = cg_ok && acc == RatSurd(j == jp ? 1 : 0);
      }
  add("cg_orthonormal", cg_ok);

  for (HalfInt j : js) {
    const auto pj = perj_conjugation(shell, j);
    const std::string tag = "[j=" + std::to_string(j.twice) + "/2]";
    qsum = qsum + pj.q_y;
    qlit = qlit + perj_literal_qy(shell, j);
    cprod = cprod * pj.C;
    SparseVector<Amplitude> closed = vac;
    for (int m2 = -j.twice; m2 <= j.twice; m2 += 2)
      closed = fockdual::apply(field(FieldOp::create, coupled_bit(j, HalfInt::from_twice(m2), shell), m), closed);
    const int predicted = parity_sign((j.twice + 1) / 2);
    const auto cv = fockdual::apply(pj.C, vac);
    auto neg = closed;
    for (auto& e : neg) e.second = -e.second;
    const int observed = cv == closed ? 1 : (cv == neg ? -1 : 0);
    add("perj_vacuum_sign" + tag, observed == predicted, "observed " + std::to_string(observed));
    std::vector<std::tuple<int, int, int>> rel;
    for (int m2 = -j.twice; m2 <= j.twice; m2 += 2)
      rel.emplace_back(coupled_bit(j, HalfInt::from_twice(m2), shell), coupled_bit(j, HalfInt::from_twice(-m2), shell),
                       parity_sign((j.twice + m2) / 2));
    add("perj_conjugation_relation" + tag, conjugates(pj.C, rel, m));
    const auto C2 = pj.C * pj.C;
    bool sq = true;
    for (int m2 = -j.twice; m2 <= j.twice; m2 += 2) {
      const auto a = field(FieldOp::create, coupled_bit(j, HalfInt::from_twice(m2), shell), m);
      sq = sq && C2 * a == (a * C2).scaled(Amplitude(parity_sign(j.twice)));
    }
    add("perj_C_squared" + tag, sq);
    add("perj_commutes_J" + tag, commutes_all(surd(pj.C), Jc));
  }
  const auto Wq = [&](const Op& coupled, const Op& uncoupled) { return W * to_rat_surd_op(coupled) == to_rat_surd_op(uncoupled) * W; };
  add("perj_sum_equals_Qy", Wq(qsum, Q.y));
  add("perj_literal_sum_equals_Qy", Wq(qlit, Q.y));
  add("perj_product_equals_C3", Wq(cprod, c.C3));
  add("coupled_J_equals_L_plus_S", W * to_rat_surd_op(Jc.z) == to_rat_surd_op(L.z + S.z) * W &&
                                       W * to_rat_surd_op(Jc.plus) == to_rat_surd_op(L.plus + S.plus) * W);

  rep.elapsed_ms = options.timing ? ms_since(t0) : 0.0;
  return rep;
}

CheckReport nucleon_check(const ShellParams& shell, const VerifyOptions& options) {
  const auto t0 = Clock::now();
  if (shell.k != 4) throw std::domain_error("nucleon check needs k = 4");
  shell.validate(options.mode_limit);
  CheckReport rep;
  rep.command = "nucleon-check";
  rep.params = {{"l", std::to_string(shell.l)}, {"k", "4"}, {"d", std::to_string(shell.d())}};
  auto add = [&](std::string name, bool ok, std::string detail = {}) { rep.checks.push_back({std::move(name), ok, std::move(detail)}); };

  const auto S = spin_S(shell);
  const auto T = isospin_T(shell);
  const auto p = conjugation_ops(shell, 1, 2);
  const auto n = conjugation_ops(shell, 3, 4);
  const Op FT = pair_rotation_block(1, 3, shell) * pair_rotation_block(2, 4, shell);
  add("isospin_rotation_block_equals_lift", FT == pair_rotation_lift(1, 3, shell) * pair_rotation_lift(2, 4, shell));
  add("S_commutes_T", vectors_commute(S, T));

  const ModelParams m = shell.model();
  SparseVector<Amplitude> closed = basis_vector<Amplitude>(0);
  for (int b = 0; b < m.modes(); ++b) closed = fockdual::apply(field(FieldOp::create, b, m), closed);

  for (auto [tag, a, b] : {std::tuple{"C2", &p.C2, &n.C2}, std::tuple{"C3", &p.C3, &n.C3}}) {
    const std::string t = tag;
    try {
      const Op comp = product_conjugation({*a, *b}, FT);
      add("kind_factors_commute_" + t, true);
      const auto cs = surd(comp);
      add("composite_" + t + "_commutes_S", commutes_all(cs, S));
      add("composite_" + t + "_commutes_T", commutes_all(cs, T));
      const auto img = fockdual::apply(comp, basis_vector<Amplitude>(0));
      add("composite_" + t + "_vacuum_to_closed_shell", img.size() == 1 && img.front().first == closed.front().first);
    } catch (const std::domain_error&) {
      add("kind_factors_commute_" + t, false);
    }
  }
  rep.elapsed_ms = options.timing ? ms_since(t0) : 0.0;
  return rep;
}

}  // namespace fockdual
