#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "fockdual/field.hpp"
#include "fockdual/fock.hpp"
#include "fockdual/lie_reps.hpp"
#include "fockdual/shell.hpp"
#include "fockdual/young.hpp"

namespace fockdual {

struct JointHWVector {
  WeightVector weight;
  SparseVector<GaussRat> vector;
};

/// Joint highest-weight vectors of the con and ncon representations of the params family:
/// per weight block, the exact nullspace of all raising operators of both sides.
std::vector<JointHWVector> joint_hw_oracle(const ModelParams& params, int mode_limit);
inline std::vector<JointHWVector> joint_hw_oracle(const ModelParams& params) {
  return joint_hw_oracle(params, default_mode_limit());
}

/// Multiplicity of every weight seen by the oracle.
std::map<WeightVector, int> oracle_multiplicities(const std::vector<JointHWVector>& hw);

/// The same multiplicities recomputed with every operator conjugated into the t basis.
/// Dense, so only meant for small spaces.
std::map<WeightVector, int> oracle_multiplicities_t_basis(const ModelParams& params,
                                                         const std::vector<WeightVector>& weights,
                                                         int* total_hw = nullptr);

using CheckList = std::vector<std::pair<std::string, bool>>;

struct PairReport {
  Label d_label;
  Label k_label;
  mpz_class dim_d;
  mpz_class dim_k;
  int oracle_multiplicity = 0;
  int hw_vectors = 0;
  CheckList checks;

  bool operator==(const PairReport&) const = default;
};

struct DualityReport {
  ModelParams params;
  Duality duality = Duality::o_o;
  std::vector<PairReport> pairs;
  mpz_class dimension_sum;
  CheckList checks;
  bool all_pass = false;
  double elapsed_ms = 0.0;
};

struct VerifyOptions {
  int mode_limit = default_mode_limit();
  bool timing = false;
};

/// Runs the duality checks; failures are recorded in the report. Throws ResourceLimit and
/// std::domain_error for unusable parameters.
DualityReport verify_duality(const ModelParams& params, Duality duality, const VerifyOptions& options = {});

/// Number of irreducible summands of a label upon restriction to the Lie algebra.
int irreducible_summands(const Label& label, bool reducible);

struct SignCheck {
  bool pass = false;
  int computed = 0;  // 0 when sigma phi is not +-phi of the associated diagram
  int predicted = 0;
};

/// sigma phi_lambda against (-)^(nd + c(d - c) + Omega) phi of the associated diagram,
/// c the first column depth, n the cell count.
SignCheck sigma_sign_check(const std::vector<int>& rows, const ModelParams& params);

/// Diagrams with at most d rows, k columns and first two column depths summing to at most d.
std::vector<std::vector<int>> frame_diagrams(const ModelParams& params);

struct NamedCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct CheckReport {
  std::string command;
  std::vector<std::pair<std::string, std::string>> params;
  std::vector<NamedCheck> checks;
  double elapsed_ms = 0.0;

  bool all_pass() const;
};

/// Reflection and Pin operator identities for orthogonal params.
CheckReport pin_check(const ModelParams& params, const VerifyOptions& options = {});

/// Particle-hole identities for a spin-1/2 shell (k = 2).
CheckReport ph_check(const ShellParams& shell, const VerifyOptions& options = {});

/// Composed nucleon conjugation (k = 4) against total spin and isospin.
CheckReport nucleon_check(const ShellParams& shell, const VerifyOptions& options = {});

}  // namespace fockdual
