#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>
#include <vector>

#include "fockdual/fock.hpp"
#include "fockdual/halfint.hpp"

namespace fockdual {

/// B (odd orthogonal), D (even orthogonal) or C (symplectic) series.
enum class HWFamily { o_odd, o_even, sp };

std::string to_string(HWFamily f);
HWFamily hw_family_from_string(const std::string& s);

/// Entries lambda_1..lambda_rank, bottom row first.
struct HighestWeight {
  HWFamily family = HWFamily::o_odd;
  std::vector<HalfInt> entries;

  int rank() const { return static_cast<int>(entries.size()); }
  HighestWeight first_negated() const;
  bool operator==(const HighestWeight&) const = default;
  auto operator<=>(const HighestWeight&) const = default;
  std::string str() const;
};

bool validate_highest_weight(const HighestWeight& hw);

/// Weyl dimension formula; ranks 0 and 1 of the even series give 1.
mpz_class weyl_dimension(const HighestWeight& hw);

enum class Group { O, Pin };

/// Rows bottom-to-top, non-decreasing, zero rows omitted. N is d for O(d), 2k for Pin(2k).
struct GroupDiagram {
  Group group = Group::O;
  int N = 1;
  std::vector<HalfInt> rows;

  bool integral() const;
  int row_count() const { return static_cast<int>(rows.size()); }
  int cells() const;
  /// Column depths, longest first; only for integral rows.
  std::vector<int> column_depths() const;
  std::string family_name() const;
  bool operator==(const GroupDiagram&) const = default;
  auto operator<=>(const GroupDiagram&) const = default;
  std::string str() const;
};

bool validate_diagram(const GroupDiagram& g);

/// Diagram with the given column depths (non-increasing).
GroupDiagram diagram_from_columns(Group group, int N, const std::vector<int>& depths);

/// First column depth replaced by N minus it.
GroupDiagram associated_diagram(const GroupDiagram& g);

/// Integer row lengths bottom-to-top (zero rows dropped).
std::vector<int> integral_rows(const GroupDiagram& g);

/// Column depths of a weight read as a diagram; requires non-negative integral entries.
std::vector<int> column_depths(const HighestWeight& hw);

enum class Duality { sp_sp, o_o, O_o, o_Pin };

std::string to_string(Duality d);
Duality duality_from_string(const std::string& s);
Family duality_family(Duality d);

struct Label {
  enum class Kind { weight, diagram };
  Kind kind = Kind::weight;
  HighestWeight hw;
  GroupDiagram diagram;

  static Label of(HighestWeight w) { return Label{Kind::weight, std::move(w), {}}; }
  static Label of(GroupDiagram g) { return Label{Kind::diagram, {}, std::move(g)}; }
  bool operator==(const Label&) const = default;
  auto operator<=>(const Label&) const = default;
  std::string str() const;
};

/// Module dimension of a duality label. A weight label is reducible when `reducible`
/// is set (the module is then the sum of the weight and its first-entry negation).
/// O(d) and Pin(2k) diagrams follow their restriction rules.
mpz_class module_dimension(const Label& label, bool reducible = false);

/// True for o_even weights with positive first entry (a sum of two irreducible modules).
bool o_o_reducible(const HighestWeight& hw);

/// Weight space data the oracle is expected to see for one pair.
struct ExpectedVector {
  HighestWeight lambda;
  HighestWeight w;
  /// +1 / -1 eigenvalue of the reflection used by the duality, 0 for a swapped pair.
  int eigen = 0;
  bool operator==(const ExpectedVector&) const = default;
};

struct FramePair {
  Duality duality = Duality::o_o;
  Label d_label;
  Label k_label;
  mpz_class dim_d;
  mpz_class dim_k;
  /// In-frame weight (lambda_1 >= 0) and its complement; every pair is generated from one.
  HighestWeight frame_lambda;
  HighestWeight frame_w;
  /// o_o only: 1 when the d-side module is reducible, 2 when the k-side is.
  int reducible_side = 0;
  std::vector<ExpectedVector> expected;
};

HWFamily d_side_family(const ModelParams& params);
HWFamily k_side_family(const ModelParams& params);

/// Weights 0 <= lambda_1 <= ... <= lambda_Omega <= k.
std::vector<HighestWeight> frame_weights(const ModelParams& params);

/// w_tau = d/2 - (depth of column tau of lambda).
HighestWeight frame_complement(const HighestWeight& lambda, const ModelParams& params);

/// O(d) diagrams with at most k columns.
std::vector<GroupDiagram> o_diagrams(const ModelParams& params);

/// Pin(2k) diagram of a k-side weight: rows |w|, first column completed to 2k rows when associated.
GroupDiagram pin_diagram(const HighestWeight& w, int k, bool associated);

/// O(d) diagram of a d-side weight: rows |lambda|, first column completed to d rows when associated.
GroupDiagram o_diagram(const HighestWeight& lambda, int d, bool associated);

/// Weight of a diagram with at most half its N rows, padded to `rank` entries.
HighestWeight diagram_weight(const GroupDiagram& g, HWFamily family, int rank);

std::vector<FramePair> enumerate_frame_pairs(const ModelParams& params, Duality duality);

}  // namespace fockdual
