#include <set>

#include "doctest.h"
#include "fockdual/pin.hpp"
#include "fockdual/verify.hpp"

using namespace fockdual;

namespace {

/// Multiplicities by dense elimination with full-width raising rows, one weight at a time.
std::map<WeightVector, int> dense_oracle(const ModelParams& p) {
  const std::size_t dim = p.dim();
  std::vector<std::vector<GaussRat>> rows;
  for (auto side : {Side::d_side, Side::k_side})
    for (const auto& n : raising_set(side, p))
      for (std::size_t r = 0; r < dim; ++r) {
        std::vector<GaussRat> row(dim);
        bool any = false;
        for (std::size_t c = 0; c < dim; ++c) {
          const auto v = n.op.entry(r, c);
          if (!v.is_zero()) {
            row[c] = to_gaussrat(v);
            any = true;
          }
        }
        if (any) rows.push_back(std::move(row));
      }
  std::map<WeightVector, int> out;
  std::map<WeightVector, std::vector<std::size_t>> blocks;
  for (std::size_t s = 0; s < dim; ++s) blocks[cartan_weights(static_cast<FockState>(s), p)].push_back(s);
  for (const auto& [w, states] : blocks) {
    std::vector<std::vector<GaussRat>> sub;
    for (const auto& r : rows) {
      std::vector<GaussRat> row;
      for (auto s : states) row.push_back(r[s]);
      sub.push_back(std::move(row));
    }
    const auto k = nullspace(sub, states.size()).size();
    if (k) out[w] = static_cast<int>(k);
  }
  return out;
}

}  // namespace

TEST_CASE("oracle vectors are joint highest weight vectors") {
  for (auto [d, k, f] : {std::tuple{3, 2, Family::orthogonal}, {4, 2, Family::symplectic}, {2, 3, Family::orthogonal}}) {
    const ModelParams p{d, k, f};
    for (const auto& hw : joint_hw_oracle(p)) {
      for (auto side : {Side::d_side, Side::k_side})
        for (const auto& n : raising_set(side, p)) CHECK(apply_exact(n.op, hw.vector).empty());
      for (const auto& [s, c] : hw.vector) CHECK(cartan_weights(s, p) == hw.weight);
    }
  }
}

TEST_CASE("blocked oracle agrees with dense elimination") {
  for (auto [d, k, f] : {std::tuple{2, 2, Family::orthogonal}, {3, 1, Family::orthogonal}, {4, 1, Family::symplectic},
                         {2, 2, Family::symplectic}, {5, 1, Family::orthogonal}}) {
    const ModelParams p{d, k, f};
    CHECK(oracle_multiplicities(joint_hw_oracle(p)) == dense_oracle(p));
  }
}

TEST_CASE("multiplicities do not depend on the basis") {
  for (auto [d, k] : {std::pair{2, 1}, {3, 1}, {2, 2}, {4, 1}, {3, 2}}) {
    const ModelParams p{d, k, Family::orthogonal};
    const auto oracle = joint_hw_oracle(p);
    const auto mult = oracle_multiplicities(oracle);
    std::vector<WeightVector> ws;
    for (const auto& [w, m] : mult) ws.push_back(w);
    int total = 0;
    CHECK(oracle_multiplicities_t_basis(p, ws, &total) == mult);
    CHECK(total == static_cast<int>(oracle.size()));
  }
}

TEST_CASE("reference decomposition d=4 k=1") {
  const auto rep = verify_duality({4, 1, Family::symplectic}, Duality::sp_sp);
  CHECK(rep.all_pass);
  CHECK(rep.dimension_sum == 16);
  std::multiset<std::pair<long, long>> dims;
  for (const auto& pr : rep.pairs) dims.emplace(pr.dim_d.get_si(), pr.dim_k.get_si());
  CHECK(dims == std::multiset<std::pair<long, long>>{{1, 3}, {4, 2}, {5, 1}});
}

TEST_CASE("every duality verifies on small grids") {
  for (int k = 1; k <= 3; ++k)
    for (int d = 1; d * k <= 8; ++d)
      for (Duality dual : {Duality::sp_sp, Duality::o_o, Duality::O_o, Duality::o_Pin}) {
        const ModelParams p{d, k, duality_family(dual)};
        if (p.family == Family::symplectic && d % 2) continue;
        const auto rep = verify_duality(p, dual);
        CHECK_MESSAGE(rep.all_pass, to_string(dual) << " d=" << d << " k=" << k);
        int hw = 0;
        for (const auto& pr : rep.pairs) hw += pr.hw_vectors;
        CHECK(hw == static_cast<int>(joint_hw_oracle(p).size()));
      }
}

TEST_CASE("oracle is deterministic") {
  const ModelParams p{3, 3, Family::orthogonal};
  const auto a = joint_hw_oracle(p), b = joint_hw_oracle(p);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].weight == b[i].weight);
    CHECK(a[i].vector == b[i].vector);
  }
}

TEST_CASE("mode limit is enforced") {
  CHECK_THROWS_AS(joint_hw_oracle({6, 3, Family::orthogonal}, 12), ResourceLimit);
  CHECK_THROWS_AS(verify_duality({4, 2, Family::orthogonal}, Duality::sp_sp), std::domain_error);
}
