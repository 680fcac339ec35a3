#include "fockdual/report.hpp"

#include <iomanip>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace fockdual {

namespace {

std::string rat(const mpq_class& q) { return q.get_num().get_str() + "/" + q.get_den().get_str(); }

Json dim_to_json(const mpz_class& z) {
  if (z.fits_slong_p()) return Json(z.get_si());
  return Json(z.get_str());
}

mpz_class dim_from_json(const Json& j) {
  if (j.is_string()) return mpz_class(j.get<std::string>());
  return mpz_class(j.get<long>());
}

Json term(const GaussInt& g, int e, int pow) {
  mpq_class re(static_cast<long>(g.re)), im(static_cast<long>(g.im));
  re /= mpq_class(mpz_class(1) << e);
  im /= mpq_class(mpz_class(1) << e);
  return Json{{"re", rat(re)}, {"im", rat(im)}, {"sqrt2pow", pow}};
}

Json checks_object(const CheckList& checks) {
  Json o = Json::object();
  for (const auto& [name, ok] : checks) o[name] = ok;
  return o;
}

CheckList checks_from_object(const Json& o) {
  CheckList out;
  for (const auto& [name, v] : o.items()) out.emplace_back(name, v.get<bool>());
  return out;
}

std::string pass_str(bool ok) { return ok ? "pass" : "FAIL"; }

std::string failed_names(const CheckList& checks) {
  std::string s;
  for (const auto& [name, ok] : checks)
    if (!ok) s += (s.empty() ? "" : ",") + name;
  return s.empty() ? "pass" : "FAIL(" + s + ")";
}

std::string params_line(const ModelParams& p) {
  return "d=" + std::to_string(p.d) + " k=" + std::to_string(p.k) + " family=" + to_string(p.family);
}

}  // namespace

std::string rational_string(HalfInt h) {
  return h.is_integral() ? std::to_string(h.as_int()) + "/1" : std::to_string(h.twice) + "/2";
}

Json label_to_json(const Label& label) {
  Json rows = Json::array();
  if (label.kind == Label::Kind::weight) {
    for (auto e : label.hw.entries) rows.push_back(rational_string(e));
    return Json{{"family", to_string(label.hw.family)}, {"rows", rows}};
  }
  for (auto e : label.diagram.rows) rows.push_back(rational_string(e));
  return Json{{"family", label.diagram.family_name()}, {"rows", rows}};
}

Label label_from_json(const Json& j) {
  const auto family = j.at("family").get<std::string>();
  std::vector<HalfInt> rows;
  for (const auto& r : j.at("rows")) rows.push_back(HalfInt::parse(r.get<std::string>()));
  auto group_n = [&](const std::string& prefix) {
    return std::stoi(family.substr(prefix.size(), family.size() - prefix.size() - 1));
  };
  if (family.rfind("O(", 0) == 0) return Label::of(GroupDiagram{Group::O, group_n("O("), rows});
  if (family.rfind("Pin(", 0) == 0) return Label::of(GroupDiagram{Group::Pin, group_n("Pin("), rows});
  return Label::of(HighestWeight{hw_family_from_string(family), rows});
}

Json amplitude_to_json(const Amplitude& a) {
  const bool has_x = !a.x().is_zero(), has_y = !a.y().is_zero();
  if (has_x && has_y) return Json::array({term(a.x(), a.exponent(), 0), term(a.y(), a.exponent(), 1)});
  if (has_y) return term(a.y(), a.exponent(), 1);
  return term(a.x(), a.exponent(), 0);
}

Json operator_to_json(const SparseOperator<Amplitude>& op, bool triplets) {
  Json j{{"dimension", op.dim()}, {"nonzeros", op.nnz()}};
  if (triplets) {
    Json t = Json::array();
    for (std::size_t c = 0; c < op.dim(); ++c)
      for (std::size_t idx = op.col_begin(c); idx < op.col_end(c); ++idx)
        t.push_back(Json::array({op.row_at(idx), c, amplitude_to_json(op.val_at(idx))}));
    j["triplets"] = std::move(t);
  }
  return j;
}

Json report_to_json(const DualityReport& r) {
  Json pairs = Json::array();
  for (const auto& p : r.pairs) {
    pairs.push_back(Json{{"dLabel", label_to_json(p.d_label)},
                         {"kLabel", label_to_json(p.k_label)},
                         {"dimD", dim_to_json(p.dim_d)},
                         {"dimK", dim_to_json(p.dim_k)},
                         {"oracleMultiplicity", p.oracle_multiplicity},
                         {"hwVectors", p.hw_vectors},
                         {"checks", checks_object(p.checks)}});
  }
  return Json{{"version", kReportVersion},
              {"params", {{"d", r.params.d}, {"k", r.params.k}, {"family", to_string(r.params.family)}}},
              {"duality", to_string(r.duality)},
              {"pairs", pairs},
              {"dimensionSum", dim_to_json(r.dimension_sum)},
              {"checks", checks_object(r.checks)},
              {"allPass", r.all_pass},
              {"elapsedMs", r.elapsed_ms}};
}

DualityReport report_from_json(const Json& j) {
  if (j.at("version").get<int>() != kReportVersion) throw std::domain_error("unsupported report version");
  DualityReport r;
  const auto& p = j.at("params");
  r.params = ModelParams{p.at("d").get<int>(), p.at("k").get<int>(), family_from_string(p.at("family").get<std::string>())};
  r.duality = duality_from_string(j.at("duality").get<std::string>());
  for (const auto& pj : j.at("pairs")) {
    PairReport pr;
    pr.d_label = label_from_json(pj.at("dLabel"));
    pr.k_label = label_from_json(pj.at("kLabel"));
    pr.dim_d = dim_from_json(pj.at("dimD"));
    pr.dim_k = dim_from_json(pj.at("dimK"));
    pr.oracle_multiplicity = pj.at("oracleMultiplicity").get<int>();
    pr.hw_vectors = pj.value("hwVectors", 0);
    pr.checks = checks_from_object(pj.at("checks"));
    r.pairs.push_back(std::move(pr));
  }
  r.dimension_sum = dim_from_json(j.at("dimensionSum"));
  if (j.contains("checks")) r.checks = checks_from_object(j.at("checks"));
  r.all_pass = j.at("allPass").get<bool>();
  r.elapsed_ms = j.at("elapsedMs").get<double>();
  return r;
}

std::string report_to_text(const DualityReport& r) {
  std::ostringstream os;
  os << "duality " << to_string(r.duality) << "  " << params_line(r.params) << "\n";
  os << std::left << std::setw(22) << "dLabel" << std::setw(22) << "kLabel" << std::setw(10) << "dimD" << std::setw(10)
     << "dimK" << std::setw(6) << "mult" << "checks\n";
  for (const auto& p : r.pairs) {
    os << std::setw(22) << p.d_label.str() << std::setw(22) << p.k_label.str() << std::setw(10) << p.dim_d.get_str()
       << std::setw(10) << p.dim_k.get_str() << std::setw(6) << p.oracle_multiplicity << failed_names(p.checks) << "\n";
  }
  os << "dimensionSum " << r.dimension_sum.get_str() << "\n";
  for (const auto& [name, ok] : r.checks) os << name << ": " << pass_str(ok) << "\n";
  os << "allPass " << (r.all_pass ? "true" : "false") << "\n";
  os << "elapsedMs " << r.elapsed_ms << "\n";
  return os.str();
}

Json frame_pairs_to_json(const ModelParams& params, Duality duality, const std::vector<FramePair>& pairs) {
  Json arr = Json::array();
  for (const auto& fp : pairs) {
    Json expected = Json::array();
    for (const auto& e : fp.expected) {
      Json lam = Json::array(), w = Json::array();
      for (auto x : e.lambda.entries) lam.push_back(rational_string(x));
      for (auto x : e.w.entries) w.push_back(rational_string(x));
      expected.push_back(Json{{"lambda", lam}, {"w", w}, {"eigen", e.eigen}});
    }
    Json item{{"dLabel", label_to_json(fp.d_label)},
              {"kLabel", label_to_json(fp.k_label)},
              {"dimD", dim_to_json(fp.dim_d)},
              {"dimK", dim_to_json(fp.dim_k)},
              {"expected", expected}};
    if (duality == Duality::o_o) item["reducibleSide"] = fp.reducible_side == 1 ? "d" : fp.reducible_side == 2 ? "k" : fp.reducible_side == 3 ? "both" : "none";
    arr.push_back(std::move(item));
  }
  mpz_class sum = 0;
  for (const auto& fp : pairs) sum += fp.dim_d * fp.dim_k;
  return Json{{"version", kReportVersion},
              {"params", {{"d", params.d}, {"k", params.k}, {"family", to_string(params.family)}}},
              {"duality", to_string(duality)},
              {"pairs", arr},
              {"dimensionSum", dim_to_json(sum)}};
}

std::string frame_pairs_to_text(const ModelParams& params, Duality duality, const std::vector<FramePair>& pairs) {
  std::ostringstream os;
  os << "duality " << to_string(duality) << "  " << params_line(params) << "\n";
  os << std::left << std::setw(22) << "dLabel" << std::setw(22) << "kLabel" << std::setw(10) << "dimD" << "dimK\n";
  mpz_class sum = 0;
  for (const auto& fp : pairs) {
    os << std::setw(22) << fp.d_label.str() << std::setw(22) << fp.k_label.str() << std::setw(10) << fp.dim_d.get_str()
       << fp.dim_k.get_str() << "\n";
    sum += fp.dim_d * fp.dim_k;
  }
  os << "pairs " << pairs.size() << "\n";
  os << "dimensionSum " << sum.get_str() << "\n";
  return os.str();
}

Json check_report_to_json(const CheckReport& r) {
  Json params = Json::object();
  for (const auto& [k, v] : r.params) params[k] = v;
  Json checks = Json::object(), details = Json::object();
  for (const auto& c : r.checks) {
    checks[c.name] = c.pass;
    if (!c.detail.empty()) details[c.name] = c.detail;
  }
  return Json{{"version", kReportVersion}, {"command", r.command}, {"params", params}, {"checks", checks},
              {"details", details},        {"allPass", r.all_pass()}, {"elapsedMs", r.elapsed_ms}};
}

std::string check_report_to_text(const CheckReport& r) {
  std::ostringstream os;
  os << r.command;
  for (const auto& [k, v] : r.params) os << " " << k << "=" << v;
  os << "\n";
  for (const auto& c : r.checks) {
    os << c.name << ": " << pass_str(c.pass);
    if (!c.detail.empty()) os << " (" << c.detail << ")";
    os << "\n";
  }
  os << "allPass " << (r.all_pass() ? "true" : "false") << "\n";
  os << "elapsedMs " << r.elapsed_ms << "\n";
  return os.str();
}

}  // namespace fockdual
