#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "fockdual/report.hpp"

namespace fs = std::filesystem;
using namespace fockdual;

namespace {

enum Exit { ok = 0, check_failed = 1, usage = 2, resource = 3 };

struct Config {
  int d = 0, k = 0, l = 1;
  std::string duality, family, format = "text", output;
  int mode_limit = default_mode_limit();
  bool exact_only = false, timing = false, large = false;
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path);
  out << text;
  if (!out) throw IoError("write failed: " + path);
}

std::string render(const Json& j) { return j.dump(2) + "\n"; }

Family resolve_family(const Config& c, std::optional<Duality> duality) {
  if (!c.family.empty()) return family_from_string(c.family);
  if (duality) return duality_family(*duality);
  return Family::orthogonal;
}

VerifyOptions options(const Config& c) { return VerifyOptions{c.mode_limit, c.timing}; }

int run_verify(const Config& c) {
  const Duality dual = duality_from_string(c.duality);
  const ModelParams p{c.d, c.k, resolve_family(c, dual)};
  const auto rep = verify_duality(p, dual, options(c));
  emit(c.format == "json" ? render(report_to_json(rep)) : report_to_text(rep), c.output);
  return rep.all_pass ? ok : check_failed;
}

int run_enumerate(const Config& c) {
  const Duality dual = duality_from_string(c.duality);
  const ModelParams p{c.d, c.k, resolve_family(c, dual)};
  if (p.family == Family::symplectic && p.d % 2 != 0) throw std::domain_error("symplectic family needs even d");
  const auto pairs = enumerate_frame_pairs(p, dual);
  emit(c.format == "json" ? render(frame_pairs_to_json(p, dual, pairs)) : frame_pairs_to_text(p, dual, pairs), c.output);
  return ok;
}

int emit_checks(const CheckReport& rep, const Config& c) {
  emit(c.format == "json" ? render(check_report_to_json(rep)) : check_report_to_text(rep), c.output);
  return rep.all_pass() ? ok : check_failed;
}

int run_pin(const Config& c) {
  return emit_checks(pin_check(ModelParams{c.d, c.k, Family::orthogonal}, options(c)), c);
}

int run_ph(const Config& c) {
  const ShellParams shell{c.l, c.k == 0 ? 2 : c.k};
  return emit_checks(shell.k == 4 ? nucleon_check(shell, options(c)) : ph_check(shell, options(c)), c);
}

int run_suite(const Config& c) {
  const fs::path dir = c.output.empty() ? fs::path("suite_out") : fs::path(c.output);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw IoError("cannot create " + dir.string());
  const int max_modes = c.large ? 16 : 12;
  Json index = Json::array();
  bool all = true;
  auto record = [&](const std::string& name, const Json& j, bool pass) {
    emit(render(j), (dir / name).string());
    index.push_back(Json{{"file", name}, {"allPass", pass}});
    all = all && pass;
  };
  const VerifyOptions opt = options(c);
  for (int k = 1; k <= max_modes; ++k)
    for (int d = 1; d * k <= max_modes; ++d) {
      const std::string tag = "_d" + std::to_string(d) + "_k" + std::to_string(k);
      for (Duality dual : {Duality::sp_sp, Duality::o_o, Duality::O_o, Duality::o_Pin}) {
        const ModelParams p{d, k, duality_family(dual)};
        if (p.family == Family::symplectic && d % 2 != 0) continue;
        const auto rep = verify_duality(p, dual, opt);
        record("verify_" + to_string(dual) + tag + ".json", report_to_json(rep), rep.all_pass);
      }
      if (d <= 5 && k <= 2) {
        const auto rep = pin_check(ModelParams{d, k, Family::orthogonal}, opt);
        record("pin" + tag + ".json", check_report_to_json(rep), rep.all_pass());
      }
    }
  for (int l : {1, 2}) {
    const auto rep = ph_check(ShellParams{l, 2}, opt);
    record("ph_l" + std::to_string(l) + ".json", check_report_to_json(rep), rep.all_pass());
  }
  {
    const auto rep = nucleon_check(ShellParams{1, 4}, opt);
    record("nucleon_l1.json", check_report_to_json(rep), rep.all_pass());
  }
  emit(render(Json{{"version", kReportVersion}, {"maxModes", max_modes}, {"reports", index}, {"allPass", all}}),
       (dir / "index.json").string());
  std::cout << index.size() << " reports written to " << dir.string() << ", allPass " << (all ? "true" : "false")
            << "\n";
  return all ? ok : check_failed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fermion Fock space duality checks"};
  app.require_subcommand(1);
  Config c;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"json", "text"}));
    sub->add_option("--output", c.output, "Output file (directory for suite)");
    sub->add_option("--mode-limit", c.mode_limit, "Maximum d*k")->check(CLI::Range(1, kMaxModeLimit));
    sub->add_flag("--exact-only", c.exact_only, "Forbid floating point fallback (all checks are exact)");
    sub->add_flag("--timing", c.timing, "Record wall time in reports");
  };
  auto model = [&](CLI::App* sub, bool need_duality) {
    sub->add_option("--d", c.d, "Single-fermion dimension")->required()->check(CLI::PositiveNumber);
    sub->add_option("--k", c.k, "Number of fermion kinds")->required()->check(CLI::PositiveNumber);
    sub->add_option("--family", c.family, "orthogonal or symplectic")->check(CLI::IsMember({"orthogonal", "symplectic"}));
    auto* opt = sub->add_option("--duality", c.duality, "sp-sp, o-o, O-o or o-Pin")
                    ->check(CLI::IsMember({"sp-sp", "o-o", "O-o", "o-Pin"}));
    if (need_duality) opt->required();
  };

  auto* verify = app.add_subcommand("verify", "Check a duality against the highest weight oracle");
  model(verify, true);
  common(verify);
  auto* enumerate = app.add_subcommand("enumerate", "List frame pairs with dimensions");
  model(enumerate, true);
  common(enumerate);
  auto* pin = app.add_subcommand("pin-check", "Reflection and Pin operator identities");
  pin->add_option("--d", c.d, "Single-fermion dimension")->required()->check(CLI::PositiveNumber);
  pin->add_option("--k", c.k, "Number of fermion kinds")->required()->check(CLI::PositiveNumber);
  common(pin);
  auto* ph = app.add_subcommand("ph-check", "Particle-hole conjugation identities of an l shell");
  ph->add_option("--l", c.l, "Orbital angular momentum")->check(CLI::NonNegativeNumber);
  ph->add_option("--k", c.k, "2 (spin) or 4 (spin and isospin)")->check(CLI::IsMember({2, 4}));
  common(ph);
  auto* suite = app.add_subcommand("suite", "Run the full grid and write one report per point");
  suite->add_flag("--large", c.large, "Extend the grid to d*k <= 16");
  common(suite);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? ok : usage;
  }

  try {
    if (verify->parsed()) return run_verify(c);
    if (enumerate->parsed()) return run_enumerate(c);
    if (pin->parsed()) return run_pin(c);
    if (ph->parsed()) return run_ph(c);
    if (suite->parsed()) return run_suite(c);
  } catch (const ResourceLimit& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return resource;
  } catch (const IoError& e) {
    std::cerr << "i/o error: " << e.what() << "\n";
    return resource;
  } catch (const std::domain_error& e) {
    std::cerr << "invalid parameters: " << e.what() << "\n";
    return usage;
  }
  return usage;
}
