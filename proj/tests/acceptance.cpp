#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <set>
#include <sstream>

#include <sys/wait.h>
#include <unistd.h>

#include "CLI11.hpp"

#include "fockdual/report.hpp"

using namespace fockdual;
namespace fs = std::filesystem;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& what) {
    pass = false;
    if (detail.size() < 600) detail += (detail.empty() ? "" : "; ") + what;
  }
};

std::string grid_tag(const ModelParams& p) {
  return "d=" + std::to_string(p.d) + ",k=" + std::to_string(p.k) + "," + to_string(p.family);
}

template <class F>
void for_grid(F&& f) {
  for (int k = 1; k <= 12; ++k)
    for (int d = 1; d * k <= 12; ++d) {
      f(ModelParams{d, k, Family::orthogonal});
      if (d % 2 == 0) f(ModelParams{d, k, Family::symplectic});
    }
}

Outcome anticommutators() {
  Outcome o;
  const auto t0 = Clock::now();
  for_grid([&](const ModelParams& p) {
    const int n = p.modes();
    const auto I = SparseOperator<Amplitude>::identity(p.dim());
    std::vector<SparseOperator<Amplitude>> a, c;
    for (int tau = 1; tau <= p.k; ++tau)
      for (int lab : p.labels()) {
        const int bit = mode_index(lab, tau, p).bit;
        a.push_back(field_operator(FieldOp::annihilate, bit, n));
        c.push_back(field_operator(FieldOp::create, bit, n));
      }
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < a.size(); ++j) {
        if (!(anticommutator(a[i], c[j]) == (i == j ? I : SparseOperator<Amplitude>::zero(p.dim()))) ||
            !anticommutator(a[i], a[j]).is_zero() || !anticommutator(c[i], c[j]).is_zero())
          o.fail(grid_tag(p) + " modes " + std::to_string(i) + "," + std::to_string(j));
      }
  });
  const double s = std::chrono::duration<double>(Clock::now() - t0).count();
  if (s >= 10.0) o.fail("runtime " + std::to_string(s) + " s");
  o.detail += (o.detail.empty() ? "" : "; ") + std::to_string(s).substr(0, 5) + " s";
  return o;
}

Outcome commutant() {
  Outcome o;
  int pairs = 0;
  for_grid([&](const ModelParams& p) {
    const auto dg = generator_set(Side::d_side, p), kg = generator_set(Side::k_side, p);
    for (const auto& x : dg)
      for (const auto& y : kg) {
        ++pairs;
        if (!commutator(x.op, y.op).is_zero()) o.fail(grid_tag(p) + " " + x.name + " " + y.name);
      }
  });
  o.detail += (o.detail.empty() ? "" : "; ") + std::to_string(pairs) + " generator pairs";
  return o;
}

void verify_grid(Outcome& o, Duality dual, const std::vector<std::string>& required) {
  for_grid([&](const ModelParams& p) {
    if (p.family != duality_family(dual)) return;
    const auto rep = verify_duality(p, dual);
    if (!rep.all_pass) {
      std::string bad;
      for (const auto& [n, ok] : rep.checks)
        if (!ok) bad += " " + n;
      for (const auto& pr : rep.pairs)
        for (const auto& [n, ok] : pr.checks)
          if (!ok) bad += " " + pr.d_label.str() + ":" + n;
      o.fail(to_string(dual) + " " + grid_tag(p) + bad);
    }
    for (const auto& name : required) {
      bool present = false;
      for (const auto& [n, ok] : rep.checks) present = present || n == name;
      for (const auto& pr : rep.pairs)
        for (const auto& [n, ok] : pr.checks) present = present || n == name;
      if (!present && !rep.pairs.empty()) o.fail(to_string(dual) + " " + grid_tag(p) + " lacks " + name);
    }
  });
}

Outcome decomposition_sp() {
  Outcome o;
  verify_grid(o, Duality::sp_sp, {"label_set_matches_oracle", "dimension_closure"});
  const auto rep = verify_duality({4, 1, Family::symplectic}, Duality::sp_sp);
  std::multiset<std::pair<long, long>> dims;
  for (const auto& pr : rep.pairs) dims.emplace(pr.dim_d.get_si(), pr.dim_k.get_si());
  if (dims != std::multiset<std::pair<long, long>>{{1, 3}, {4, 2}, {5, 1}} || rep.dimension_sum != 16)
    o.fail("d=4 k=1 reference dims");
  return o;
}

Outcome decomposition_oo() {
  Outcome o;
  verify_grid(o, Duality::o_o, {"label_set_matches_oracle", "dimension_closure", "one_reducible_side"});
  for (int d = 1; d <= 11; d += 2)
    for (int k = 1; d * k <= 12; ++k) {
      const auto rep = verify_duality({d, k, Family::orthogonal}, Duality::o_o);
      bool seen = false;
      for (const auto& [n, ok] : rep.checks) seen = seen || (n == "k_side_half_integral" && ok);
      if (!seen) o.fail("half-integral k side d=" + std::to_string(d) + " k=" + std::to_string(k));
    }
  return o;
}

Outcome decomposition_O_pin() {
  Outcome o;
  verify_grid(o, Duality::O_o, {"label_set_matches_oracle", "dimension_closure", "r_phi", "r_eigen"});
  verify_grid(o, Duality::o_Pin, {"label_set_matches_oracle", "dimension_closure", "sigma_phi", "sigma_eigen"});
  return o;
}

Outcome pin_suite() {
  Outcome o;
  for (int d = 1; d <= 5; ++d)
    for (int k = 1; k <= 2; ++k) {
      const auto rep = pin_check({d, k, Family::orthogonal});
      for (const auto& c : rep.checks)
        if (!c.pass) o.fail("d=" + std::to_string(d) + " k=" + std::to_string(k) + " " + c.name);
    }
  return o;
}

Outcome particle_hole() {
  Outcome o;
  const auto t0 = Clock::now();
  const std::vector<std::string> required = {
      "C3_equals_C2",         "C2_commutes_L", "C2_commutes_S", "C2_racah_relation", "FC1_vacuum_is_vacuum",
      "C1F_vacuum_is_vacuum", "Q_commutes_S",  "Q_sl2",         "perj_conjugation_relation", "perj_vacuum_sign",
      "perj_C_squared"};
  for (int l : {1, 2}) {
    const auto rep = ph_check({l, 2});
    for (const auto& c : rep.checks) {
      bool wanted = false;
      for (const auto& r : required) wanted = wanted || c.name.rfind(r, 0) == 0;
      if (wanted && !c.pass) o.fail("l=" + std::to_string(l) + " " + c.name);
    }
  }
  const double s = std::chrono::duration<double>(Clock::now() - t0).count();
  if (s >= 60.0) o.fail("runtime " + std::to_string(s) + " s");
  return o;
}

Outcome nucleon() {
  Outcome o;
  const auto t0 = Clock::now();
  const auto rep = nucleon_check({1, 4});
  for (const auto& c : rep.checks)
    if (!c.pass) o.fail(c.name);
  const double s = std::chrono::duration<double>(Clock::now() - t0).count();
  if (s >= 120.0) o.fail("runtime " + std::to_string(s) + " s");
  o.detail += (o.detail.empty() ? "" : "; ") + std::to_string(s).substr(0, 5) + " s";
  return o;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

Outcome determinism(const std::string& cli) {
  Outcome o;
  if (cli.empty()) {
    o.fail("no --cli path");
    return o;
  }
  const fs::path base = fs::temp_directory_path() / ("fockdual_det_" + std::to_string(::getpid()));
  std::vector<fs::path> dirs = {base / "a", base / "b"};
  for (const auto& dir : dirs) {
    const std::string cmd = "\"" + cli + "\" suite --output \"" + dir.string() + "\" > /dev/null";
    const int rc = std::system(cmd.c_str());
    if (rc == -1 || (WEXITSTATUS(rc) != 0 && WEXITSTATUS(rc) != 1)) o.fail("suite run failed");
  }
  std::set<std::string> names;
  for (const auto& dir : dirs)
    if (fs::exists(dir))
      for (const auto& e : fs::directory_iterator(dir)) names.insert(e.path().filename().string());
  for (const auto& n : names)
    if (!fs::exists(dirs[0] / n) || !fs::exists(dirs[1] / n) || slurp(dirs[0] / n) != slurp(dirs[1] / n)) o.fail(n);
  if (names.empty()) o.fail("no reports");
  o.detail += (o.detail.empty() ? "" : "; ") + std::to_string(names.size()) + " files compared";
  fs::remove_all(base);
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance criteria"};
  std::vector<int> which;
  std::string cli;
  app.add_option("--criterion", which, "Criteria to run (default all)")->check(CLI::Range(1, 9));
  app.add_option("--cli", cli, "Path of the fockdual executable");
  CLI11_PARSE(app, argc, argv);
  if (which.empty()) which = {1, 2, 3, 4, 5, 6, 7, 8, 9};

  const char* names[] = {"",
                         "anticommutation relations",
                         "commutant",
                         "sp-sp decomposition",
                         "o-o decomposition",
                         "O-o and o-Pin decompositions",
                         "Pin operator identities",
                         "particle-hole identities",
                         "nucleon conjugation",
                         "suite determinism"};
  bool all = true;
  for (int c : which) {
    Outcome o;
    switch (c) {
      case 1: o = anticommutators(); break;
      case 2: o = commutant(); break;
      case 3: o = decomposition_sp(); break;
      case 4: o = decomposition_oo(); break;
      case 5: o = decomposition_O_pin(); break;
      case 6: o = pin_suite(); break;
      case 7: o = particle_hole(); break;
      case 8: o = nucleon(); break;
      case 9: o = determinism(cli); break;
    }
    all = all && o.pass;
    std::cout << "criterion " << c << " (" << names[c] << "): " << (o.pass ? "PASS" : "FAIL");
    if (!o.detail.empty()) std::cout << " [" << o.detail << "]";
    std::cout << std::endl;
  }
  return all ? 0 : 1;
}
