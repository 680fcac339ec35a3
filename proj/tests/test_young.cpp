#include <algorithm>
#include <map>
#include <set>

#include "doctest.h"
#include "fockdual/young.hpp"

using namespace fockdual;

namespace {

HighestWeight hw(HWFamily f, std::vector<int> twice) {
  HighestWeight h{f, {}};
  for (int t : twice) h.entries.push_back(HalfInt::from_twice(t));
  return h;
}

std::multiset<std::pair<long, long>> dims(const ModelParams& p, Duality d) {
  std::multiset<std::pair<long, long>> out;
  for (const auto& fp : enumerate_frame_pairs(p, d)) out.emplace(fp.dim_d.get_si(), fp.dim_k.get_si());
  return out;
}

}  // namespace

TEST_CASE("weyl dimensions of small algebras") {
  // so(3): 2j + 1
  for (int t = 0; t <= 8; ++t) CHECK(weyl_dimension(hw(HWFamily::o_odd, {t})) == t + 1);
  // sp(2) = sl(2)
  for (int n = 0; n <= 5; ++n) CHECK(weyl_dimension(hw(HWFamily::sp, {2 * n})) == n + 1);
  // so(4) = sl2 x sl2: (b + a + 1)(b - a + 1)
  for (int b = 0; b <= 6; ++b)
    for (int a = -b; a <= b; a += 2) CHECK(weyl_dimension(hw(HWFamily::o_even, {a, b})) == (b + a + 2) * (b - a + 2) / 4);
  CHECK(weyl_dimension(hw(HWFamily::sp, {0, 2})) == 4);
  CHECK(weyl_dimension(hw(HWFamily::sp, {2, 2})) == 5);
  CHECK(weyl_dimension(hw(HWFamily::sp, {0, 4})) == 10);
  CHECK(weyl_dimension(hw(HWFamily::o_odd, {0, 2})) == 5);
  CHECK(weyl_dimension(hw(HWFamily::o_odd, {1, 1})) == 4);
  CHECK(weyl_dimension(hw(HWFamily::o_odd, {2, 2})) == 10);
  CHECK(weyl_dimension(hw(HWFamily::o_even, {0, 0, 2})) == 6);
  CHECK(weyl_dimension(hw(HWFamily::o_even, {1, 1, 1})) == 4);
  CHECK(weyl_dimension(hw(HWFamily::o_even, {0, 2, 2})) == 15);
}

TEST_CASE("weyl dimension is invariant under negating the first even-series entry") {
  for (int a = 0; a <= 4; ++a)
    for (int b = a; b <= 4; ++b)
      for (int c = b; c <= 4; ++c) {
        const auto h = hw(HWFamily::o_even, {2 * a, 2 * b, 2 * c});
        CHECK(weyl_dimension(h) == weyl_dimension(h.first_negated()));
        const auto s = hw(HWFamily::o_even, {2 * a + 1, 2 * b + 1, 2 * c + 1});
        CHECK(weyl_dimension(s) == weyl_dimension(s.first_negated()));
      }
}

TEST_CASE("highest weight validation") {
  CHECK(validate_highest_weight(hw(HWFamily::o_even, {-2, 2})));
  CHECK_FALSE(validate_highest_weight(hw(HWFamily::o_even, {-4, 2})));
  CHECK_FALSE(validate_highest_weight(hw(HWFamily::o_odd, {-2, 2})));
  CHECK_FALSE(validate_highest_weight(hw(HWFamily::sp, {1, 1})));
  CHECK_FALSE(validate_highest_weight(hw(HWFamily::o_odd, {1, 2})));
  CHECK_FALSE(validate_highest_weight(hw(HWFamily::o_odd, {4, 2})));
}

TEST_CASE("diagram combinatorics") {
  const auto g = diagram_from_columns(Group::O, 5, {4, 1});
  CHECK(g.str() == "O(5)(1,1,1,2)");
  CHECK(g.column_depths() == std::vector<int>{4, 1});
  CHECK(validate_diagram(g));
  const auto a = associated_diagram(g);
  CHECK(a.column_depths() == std::vector<int>{1, 1});
  CHECK(associated_diagram(a) == g);
  CHECK_FALSE(validate_diagram(diagram_from_columns(Group::O, 5, {4, 2})));
  GroupDiagram pin{Group::Pin, 4, {HalfInt::from_twice(1), HalfInt::from_twice(3)}};
  CHECK(validate_diagram(pin));
  pin.rows.pop_back();
  CHECK_FALSE(validate_diagram(pin));
}

TEST_CASE("reference pair lists") {
  CHECK(dims({4, 1, Family::symplectic}, Duality::sp_sp) == std::multiset<std::pair<long, long>>{{1, 3}, {4, 2}, {5, 1}});
  CHECK(dims({3, 1, Family::orthogonal}, Duality::o_o) == std::multiset<std::pair<long, long>>{{1, 2}, {3, 2}});
  CHECK(dims({2, 1, Family::orthogonal}, Duality::O_o).size() == 3);
}

TEST_CASE("frame pairs close on the Fock dimension") {
  for (int k = 1; k <= 6; ++k)
    for (int d = 1; d * k <= 14; ++d)
      for (Duality dual : {Duality::sp_sp, Duality::o_o, Duality::O_o, Duality::o_Pin}) {
        const ModelParams p{d, k, duality_family(dual)};
        if (p.family == Family::symplectic && d % 2) continue;
        mpz_class sum = 0;
        for (const auto& fp : enumerate_frame_pairs(p, dual)) {
          sum += fp.dim_d * fp.dim_k;
          CHECK(validate_highest_weight(fp.frame_lambda));
          if (dual == Duality::o_o) CHECK((fp.reducible_side == 1 || fp.reducible_side == 2));
        }
        CHECK_MESSAGE(sum == mpz_class(1) << (d * k), to_string(dual) << " d=" << d << " k=" << k);
      }
}

TEST_CASE("frame complement fills the rectangle") {
  const ModelParams p{5, 3, Family::orthogonal};
  for (const auto& lam : frame_weights(p)) {
    const auto w = frame_complement(lam, p);
    CHECK(w.rank() == 3);
    const auto depths = column_depths(lam);
    for (int t = 0; t < 3; ++t) {
      const int c = t < static_cast<int>(depths.size()) ? depths[t] : 0;
      CHECK(w.entries[t].twice == 5 - 2 * c);
    }
  }
}
