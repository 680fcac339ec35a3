#include "doctest.h"
#include "fockdual/report.hpp"

using namespace fockdual;

TEST_CASE("rationals and labels serialize as a/b") {
  CHECK(rational_string(HalfInt::from_twice(3)) == "3/2");
  CHECK(rational_string(HalfInt::from_int(-2)) == "-2/1");
  const Label w = Label::of(HighestWeight{HWFamily::o_even, {HalfInt::from_twice(-1), HalfInt::from_twice(3)}});
  CHECK(label_to_json(w).dump() == R"({"family":"o_even","rows":["-1/2","3/2"]})");
  CHECK(label_from_json(label_to_json(w)) == w);
  const Label g = Label::of(GroupDiagram{Group::Pin, 4, {HalfInt::from_twice(1), HalfInt::from_twice(1)}});
  CHECK(label_to_json(g)["family"] == "Pin(4)");
  CHECK(label_from_json(label_to_json(g)) == g);
}

TEST_CASE("amplitudes serialize with a sqrt2 power") {
  CHECK(amplitude_to_json(Amplitude::sqrt_half()).dump() == R"({"re":"1/2","im":"0/1","sqrt2pow":1})");
  CHECK(amplitude_to_json(Amplitude::i()).dump() == R"({"re":"0/1","im":"1/1","sqrt2pow":0})");
  CHECK(amplitude_to_json(Amplitude(1) + Amplitude::sqrt2()).is_array());
  const auto op = SparseOperator<Amplitude>::identity(4);
  const auto j = operator_to_json(op, true);
  CHECK(j["nonzeros"] == 4);
  CHECK(j["triplets"].size() == 4);
}

TEST_CASE("duality reports round-trip through json") {
  for (auto [d, k, dual] : {std::tuple{4, 1, Duality::sp_sp}, {3, 2, Duality::o_o}, {4, 2, Duality::O_o}, {2, 3, Duality::o_Pin}}) {
    const auto rep = verify_duality({d, k, duality_family(dual)}, dual);
    const auto j = report_to_json(rep);
    const auto back = report_from_json(Json::parse(j.dump()));
    CHECK(back.params.d == rep.params.d);
    CHECK(back.params.k == rep.params.k);
    CHECK(back.params.family == rep.params.family);
    CHECK(back.duality == rep.duality);
    CHECK(back.pairs == rep.pairs);
    CHECK(back.dimension_sum == rep.dimension_sum);
    CHECK(back.checks == rep.checks);
    CHECK(back.all_pass == rep.all_pass);
    CHECK(report_to_json(back).dump() == j.dump());
  }
}

TEST_CASE("reports are byte stable") {
  const ModelParams p{3, 3, Family::orthogonal};
  const auto a = report_to_json(verify_duality(p, Duality::o_Pin)).dump(2);
  const auto b = report_to_json(verify_duality(p, Duality::o_Pin)).dump(2);
  CHECK(a == b);
  CHECK(report_to_text(verify_duality(p, Duality::o_o)) == report_to_text(verify_duality(p, Duality::o_o)));
}

TEST_CASE("report schema fields") {
  const auto j = report_to_json(verify_duality({4, 1, Family::symplectic}, Duality::sp_sp));
  for (const char* key : {"version", "params", "duality", "pairs", "dimensionSum", "allPass", "elapsedMs"}) CHECK(j.contains(key));
  CHECK(j["dimensionSum"] == 16);
  CHECK(j["elapsedMs"] == 0.0);
  for (const auto& p : j["pairs"])
    for (const char* key : {"dLabel", "kLabel", "dimD", "dimK", "oracleMultiplicity", "checks"}) CHECK(p.contains(key));
}

TEST_CASE("text output lists checks") {
  CheckReport r{"ph-check", {{"l", "1"}}, {{"C3_equals_C2", true, ""}, {"x", false, "why"}}, 0.0};
  const auto t = check_report_to_text(r);
  CHECK(t.find("C3_equals_C2: pass") != std::string::npos);
  CHECK(t.find("x: FAIL (why)") != std::string::npos);
  CHECK_FALSE(r.all_pass());
}
