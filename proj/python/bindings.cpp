#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "fockdual/report.hpp"

namespace py = pybind11;
using namespace fockdual;

namespace {

ModelParams model(int d, int k, const std::string& duality, const std::string& family) {
  const Family f = family.empty() ? duality_family(duality_from_string(duality)) : family_from_string(family);
  return ModelParams{d, k, f};
}

VerifyOptions options(int mode_limit) {
  VerifyOptions o;
  if (mode_limit > 0) o.mode_limit = mode_limit;
  return o;
}

}  // namespace

PYBIND11_MODULE(_fockdual, m) {
  m.doc() = "Exact fermion Fock space duality checks";
  py::register_exception<ResourceLimit>(m, "ResourceLimit");

  m.def(
      "verify_json",
      [](int d, int k, const std::string& duality, const std::string& family, int mode_limit) {
        const auto rep = verify_duality(model(d, k, duality, family), duality_from_string(duality), options(mode_limit));
        return report_to_json(rep).dump();
      },
      py::arg("d"), py::arg("k"), py::arg("duality"), py::arg("family") = "", py::arg("mode_limit") = 0);

  m.def(
      "enumerate_json",
      [](int d, int k, const std::string& duality, const std::string& family) {
        const auto p = model(d, k, duality, family);
        const auto dual = duality_from_string(duality);
        return frame_pairs_to_json(p, dual, enumerate_frame_pairs(p, dual)).dump();
      },
      py::arg("d"), py::arg("k"), py::arg("duality"), py::arg("family") = "");

  m.def(
      "pin_check_json",
      [](int d, int k) { return check_report_to_json(pin_check({d, k, Family::orthogonal})).dump(); }, py::arg("d"),
      py::arg("k"));

  m.def(
      "ph_check_json",
      [](int l, int k) {
        const ShellParams shell{l, k};
        return check_report_to_json(k == 4 ? nucleon_check(shell) : ph_check(shell)).dump();
      },
      py::arg("l"), py::arg("k") = 2);

  m.def(
      "weyl_dimension",
      [](const std::string& family, const std::vector<std::string>& entries) {
        HighestWeight hw{hw_family_from_string(family), {}};
        for (const auto& e : entries) hw.entries.push_back(HalfInt::parse(e));
        return weyl_dimension(hw).get_str();
      },
      py::arg("family"), py::arg("entries"));

  m.def(
      "oracle_multiplicities",
      [](int d, int k, const std::string& family, int mode_limit) {
        const ModelParams p{d, k, family_from_string(family)};
        std::vector<std::tuple<std::vector<std::string>, std::vector<std::string>, int>> out;
        for (const auto& [w, n] : oracle_multiplicities(joint_hw_oracle(p, options(mode_limit).mode_limit))) {
          std::vector<std::string> a, b;
          for (auto h : w.d_side) a.push_back(rational_string(h));
          for (auto h : w.k_side) b.push_back(rational_string(h));
          out.emplace_back(std::move(a), std::move(b), n);
        }
        return out;
      },
      py::arg("d"), py::arg("k"), py::arg("family"), py::arg("mode_limit") = 0);
}
