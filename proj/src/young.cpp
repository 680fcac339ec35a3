#include "fockdual/young.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace fockdual {

std::string to_string(HWFamily f) {
  switch (f) {
    case HWFamily::o_odd: return "o_odd";
    case HWFamily::o_even: return "o_even";
    case HWFamily::sp: return "sp";
  }
  return "?";
}

HWFamily hw_family_from_string(const std::string& s) {
  if (s == "o_odd") return HWFamily::o_odd;
  if (s == "o_even") return HWFamily::o_even;
  if (s == "sp") return HWFamily::sp;
  throw std::domain_error("unknown weight family: " + s);
}

HighestWeight HighestWeight::first_negated() const {
  HighestWeight h = *this;
  if (!h.entries.empty()) h.entries[0] = -h.entries[0];
  return h;
}

namespace {

std::string join(const std::vector<HalfInt>& v) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ",";
    os << (v[i].is_integral() ? std::to_string(v[i].twice / 2) : std::to_string(v[i].twice) + "/2");
  }
  os << ")";
  return os.str();
}

}  // namespace

std::string HighestWeight::str() const { return to_string(family) + join(entries); }

bool validate_highest_weight(const HighestWeight& hw) {
  const auto& e = hw.entries;
  if (e.empty()) return true;
  const bool integral = e[0].is_integral();
  for (const auto& x : e)
    if (x.is_integral() != integral) return false;
  if (hw.family == HWFamily::sp && !integral) return false;
  for (std::size_t i = 1; i < e.size(); ++i)
    if (e[i] < e[i - 1]) return false;
  if (hw.family == HWFamily::o_even) {
    if (e.size() >= 2 && e[1] < e[0].abs()) return false;
  } else if (e[0] < HalfInt{}) {
    return false;
  }
  return true;
}

mpz_class weyl_dimension(const HighestWeight& hw) {
  if (!validate_highest_weight(hw)) throw std::domain_error("invalid highest weight " + hw.str());
  const int n = hw.rank();
  if (n == 0) return 1;
  std::vector<mpq_class> l(n), r(n);
  for (int i = 0; i < n; ++i) {
    // epsilon coordinate i (0-based) is the (n-i)-th entry, largest first
    mpq_class mu(hw.entries[n - 1 - i].twice, 2);
    mu.canonicalize();
    mpq_class rho;
    switch (hw.family) {
      case HWFamily::o_odd: rho = mpq_class(2 * (n - 1 - i) + 1, 2); break;
      case HWFamily::sp: rho = n - i; break;
      case HWFamily::o_even: rho = n - 1 - i; break;
    }
    rho.canonicalize();
    l[i] = mu + rho;
    r[i] = rho;
  }
  mpq_class dim = 1;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) dim *= (l[i] * l[i] - l[j] * l[j]) / (r[i] * r[i] - r[j] * r[j]);
  if (hw.family != HWFamily::o_even)
    for (int i = 0; i < n; ++i) dim *= l[i] / r[i];
  if (dim.get_den() != 1) throw std::logic_error("non-integral Weyl dimension for " + hw.str());
  return dim.get_num();
}

bool GroupDiagram::integral() const {
  return std::all_of(rows.begin(), rows.end(), [](HalfInt h) { return h.is_integral(); });
}

int GroupDiagram::cells() const {
  int c = 0;
  for (auto r : rows) c += r.as_int();
  return c;
}

std::vector<int> GroupDiagram::column_depths() const {
  std::vector<int> depths;
  if (rows.empty()) return depths;
  const int longest = rows.back().as_int();
  for (int c = 1; c <= longest; ++c) {
    int n = 0;
    for (auto r : rows) n += r.as_int() >= c;
    depths.push_back(n);
  }
  return depths;
}

std::string GroupDiagram::family_name() const {
  return (group == Group::O ? "O(" : "Pin(") + std::to_string(N) + ")";
}

std::string GroupDiagram::str() const { return family_name() + join(rows); }

bool validate_diagram(const GroupDiagram& g) {
  for (std::size_t i = 0; i < g.rows.size(); ++i) {
    if (g.rows[i] <= HalfInt{}) return false;
    if (i > 0 && g.rows[i] < g.rows[i - 1]) return false;
  }
  if (!g.integral()) {
    if (g.group != Group::Pin) return false;
    return std::none_of(g.rows.begin(), g.rows.end(), [](HalfInt h) { return h.is_integral(); }) &&
           g.row_count() == g.N / 2;
  }
  const auto depths = g.column_depths();
  if (!depths.empty() && depths[0] > g.N) return false;
  if (depths.size() >= 2 && depths[0] + depths[1] > g.N) return false;
  return true;
}

GroupDiagram diagram_from_columns(Group group, int N, const std::vector<int>& depths) {
  GroupDiagram g{group, N, {}};
  const int nrows = depths.empty() ? 0 : depths[0];
  for (int r = nrows; r >= 1; --r) {
    int len = 0;
    for (int c : depths) len += c >= r;
    if (len > 0) g.rows.push_back(HalfInt::from_int(len));
  }
  return g;
}

GroupDiagram associated_diagram(const GroupDiagram& g) {
  if (!g.integral()) throw std::domain_error("association needs integral rows");
  auto depths = g.column_depths();
  if (depths.empty()) {
    depths.push_back(g.N);
  } else {
    depths[0] = g.N - depths[0];
  }
  if (depths[0] < 0 || (depths.size() >= 2 && depths[0] < depths[1]))
    throw std::domain_error("associated diagram of " + g.str() + " is not a diagram");
  while (!depths.empty() && depths.back() == 0) depths.pop_back();
  return diagram_from_columns(g.group, g.N, depths);
}

std::vector<int> integral_rows(const GroupDiagram& g) {
  std::vector<int> out;
  for (auto r : g.rows) out.push_back(r.as_int());
  return out;
}

std::vector<int> column_depths(const HighestWeight& hw) {
  std::vector<int> depths;
  int longest = 0;
  for (auto e : hw.entries) {
    if (e < HalfInt{}) throw std::domain_error("negative entry has no diagram");
    longest = std::max(longest, e.as_int());
  }
  for (int c = 1; c <= longest; ++c) {
    int n = 0;
    for (auto e : hw.entries) n += e.as_int() >= c;
    depths.push_back(n);
  }
  return depths;
}

std::string to_string(Duality d) {
  switch (d) {
    case Duality::sp_sp: return "sp-sp";
    case Duality::o_o: return "o-o";
    case Duality::O_o: return "O-o";
    case Duality::o_Pin: return "o-Pin";
  }
  return "?";
}

Duality duality_from_string(const std::string& s) {
  if (s == "sp-sp" || s == "sp_sp") return Duality::sp_sp;
  if (s == "o-o" || s == "o_o") return Duality::o_o;
  if (s == "O-o" || s == "O_o") return Duality::O_o;
  if (s == "o-Pin" || s == "o_Pin") return Duality::o_Pin;
  throw std::domain_error("unknown duality: " + s);
}

Family duality_family(Duality d) { return d == Duality::sp_sp ? Family::symplectic : Family::orthogonal; }

std::string Label::str() const { return kind == Kind::weight ? hw.str() : diagram.str(); }

HighestWeight diagram_weight(const GroupDiagram& g, HWFamily family, int rank) {
  if (g.row_count() > rank) throw std::domain_error("diagram " + g.str() + " has more rows than the rank");
  HighestWeight hw{family, std::vector<HalfInt>(rank)};
  const int off = rank - g.row_count();
  for (int i = 0; i < g.row_count(); ++i) hw.entries[off + i] = g.rows[i];
  return hw;
}

bool o_o_reducible(const HighestWeight& hw) {
  return hw.family == HWFamily::o_even && !hw.entries.empty() && hw.entries[0] > HalfInt{};
}

mpz_class module_dimension(const Label& label, bool reducible) {
  if (label.kind == Label::Kind::weight) {
    mpz_class d = weyl_dimension(label.hw);
    return reducible ? mpz_class(2 * d) : d;
  }
  const GroupDiagram& g = label.diagram;
  if (!validate_diagram(g)) throw std::domain_error("invalid diagram " + g.str());
  const int half = g.N / 2;
  const HWFamily fam = (g.group == Group::O && g.N % 2 == 1) ? HWFamily::o_odd : HWFamily::o_even;
  if (!g.integral()) return 2 * weyl_dimension(diagram_weight(g, fam, half));
  const auto depths = g.column_depths();
  const int c1 = depths.empty() ? 0 : depths[0];
  if (2 * c1 > g.N) return module_dimension(Label::of(associated_diagram(g)));
  const mpz_class d = weyl_dimension(diagram_weight(g, fam, half));
  return 2 * c1 == g.N ? mpz_class(2 * d) : d;
}

HWFamily d_side_family(const ModelParams& params) {
  if (params.family == Family::symplectic) return HWFamily::sp;
  return params.d % 2 ? HWFamily::o_odd : HWFamily::o_even;
}

HWFamily k_side_family(const ModelParams& params) {
  return params.family == Family::symplectic ? HWFamily::sp : HWFamily::o_even;
}

std::vector<HighestWeight> frame_weights(const ModelParams& params) {
  std::vector<HighestWeight> out;
  const int om = params.omega();
  std::vector<HalfInt> cur;
  std::function<void(int)> rec = [&](int lo) {
    if (static_cast<int>(cur.size()) == om) {
      out.push_back(HighestWeight{d_side_family(params), cur});
      return;
    }
    for (int v = lo; v <= params.k; ++v) {
      cur.push_back(HalfInt::from_int(v));
      rec(v);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

HighestWeight frame_complement(const HighestWeight& lambda, const ModelParams& params) {
  HighestWeight w{k_side_family(params), {}};
  for (int t = 1; t <= params.k; ++t) {
    int depth = 0;
    for (auto e : lambda.entries) depth += e.as_int() >= t;
    w.entries.push_back(HalfInt::from_twice(params.d - 2 * depth));
  }
  return w;
}

std::vector<GroupDiagram> o_diagrams(const ModelParams& params) {
  std::vector<GroupDiagram> out;
  std::vector<int> cols;
  std::function<void(int)> rec = [&](int hi) {
    out.push_back(diagram_from_columns(Group::O, params.d, cols));
    if (static_cast<int>(cols.size()) == params.k) return;
    for (int c = 1; c <= hi; ++c) {
      if (cols.size() == 1 && cols[0] + c > params.d) break;
      cols.push_back(c);
      rec(c);
      cols.pop_back();
    }
  };
  rec(params.d);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

GroupDiagram abs_rows(const HighestWeight& hw, Group group, int N) {
  GroupDiagram g{group, N, {}};
  for (auto e : hw.entries)
    if (e.abs() > HalfInt{}) g.rows.push_back(e.abs());
  std::sort(g.rows.begin(), g.rows.end());
  return g;
}

}  // namespace

GroupDiagram pin_diagram(const HighestWeight& w, int k, bool associated) {
  GroupDiagram g = abs_rows(w, Group::Pin, 2 * k);
  return associated ? associated_diagram(g) : g;
}

GroupDiagram o_diagram(const HighestWeight& lambda, int d, bool associated) {
  GroupDiagram g = abs_rows(lambda, Group::O, d);
  return associated ? associated_diagram(g) : g;
}

std::vector<FramePair> enumerate_frame_pairs(const ModelParams& params, Duality duality) {
  if (duality_family(duality) != params.family) throw std::domain_error("duality does not match the form family");
  std::vector<FramePair> out;
  const bool even_d = params.d % 2 == 0;

  if (duality == Duality::O_o) {
    for (const auto& g : o_diagrams(params)) {
      auto depths = g.column_depths();
      depths.resize(params.k, 0);
      HighestWeight w{HWFamily::o_even, {}};
      for (int c : depths) w.entries.push_back(HalfInt::from_twice(params.d - 2 * c));
      const int c1 = depths.empty() ? 0 : depths[0];
      FramePair fp;
      fp.duality = duality;
      fp.d_label = Label::of(g);
      fp.k_label = Label::of(w);
      fp.dim_d = module_dimension(fp.d_label);
      fp.dim_k = weyl_dimension(w);
      const GroupDiagram low = 2 * c1 > params.d ? associated_diagram(g) : g;
      fp.frame_lambda = diagram_weight(low, d_side_family(params), params.omega());
      fp.frame_w = w;
      if (fp.frame_w.entries[0] < HalfInt{}) fp.frame_w = fp.frame_w.first_negated();
      if (2 * c1 == params.d) {
        fp.expected = {{fp.frame_lambda, w, 0}, {fp.frame_lambda.first_negated(), w, 0}};
      } else {
        fp.expected = {{fp.frame_lambda, w, 2 * c1 < params.d ? 1 : -1}};
      }
      out.push_back(std::move(fp));
    }
    return out;
  }

  for (const auto& lambda : frame_weights(params)) {
    const HighestWeight w = frame_complement(lambda, params);
    FramePair fp;
    fp.duality = duality;
    fp.frame_lambda = lambda;
    fp.frame_w = w;
    switch (duality) {
      case Duality::sp_sp:
        fp.d_label = Label::of(lambda);
        fp.k_label = Label::of(w);
        fp.dim_d = weyl_dimension(lambda);
        fp.dim_k = weyl_dimension(w);
        fp.expected = {{lambda, w, 0}};
        out.push_back(std::move(fp));
        break;
      case Duality::o_o: {
        const bool rd = o_o_reducible(lambda);
        const bool rk = o_o_reducible(w);
        fp.reducible_side = (rd ? 1 : 0) + (rk ? 2 : 0);
        fp.d_label = Label::of(lambda);
        fp.k_label = Label::of(w);
        fp.dim_d = module_dimension(fp.d_label, rd);
        fp.dim_k = module_dimension(fp.k_label, rk);
        fp.expected = {{lambda, w, 0}};
        if (rd) fp.expected.push_back({lambda.first_negated(), w, 0});
        if (rk) fp.expected.push_back({lambda, w.first_negated(), 0});
        out.push_back(std::move(fp));
        break;
      }
      case Duality::o_Pin: {
        const bool bottom = even_d && !lambda.entries.empty() && lambda.entries[0] > HalfInt{};
        if (bottom) {
          FramePair upper = fp;
          upper.d_label = Label::of(lambda);
          upper.k_label = Label::of(pin_diagram(w, params.k, false));
          upper.dim_d = weyl_dimension(lambda);
          upper.dim_k = module_dimension(upper.k_label);
          upper.expected = {{lambda, w, 1}};
          FramePair lower = fp;
          lower.d_label = Label::of(lambda.first_negated());
          lower.k_label = Label::of(pin_diagram(w, params.k, true));
          lower.dim_d = weyl_dimension(lambda.first_negated());
          lower.dim_k = module_dimension(lower.k_label);
          lower.expected = {{lambda.first_negated(), w, -1}};
          out.push_back(std::move(upper));
          out.push_back(std::move(lower));
        } else {
          fp.d_label = Label::of(lambda);
          fp.k_label = Label::of(pin_diagram(w, params.k, false));
          fp.dim_d = weyl_dimension(lambda);
          fp.dim_k = module_dimension(fp.k_label);
          fp.expected = {{lambda, w, 0}, {lambda, w.first_negated(), 0}};
          out.push_back(std::move(fp));
        }
        break;
      }
      case Duality::O_o: break;
    }
  }
  return out;
}

}  // namespace fockdual
