#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "fockdual/verify.hpp"

namespace fockdual {

using Json = nlohmann::ordered_json;

inline constexpr int kReportVersion = 1;

/// "a/b" with b in {1, 2}.
std::string rational_string(HalfInt h);

Json label_to_json(const Label& label);
Label label_from_json(const Json& j);

/// {"re":"a/b","im":"c/d","sqrt2pow":n} for c * sqrt2^n, or an array of two such terms.
Json amplitude_to_json(const Amplitude& a);

/// Dimension and nonzero count; with `triplets`, also every (row, col, amplitude).
Json operator_to_json(const SparseOperator<Amplitude>& op, bool triplets);

Json report_to_json(const DualityReport& report);
DualityReport report_from_json(const Json& j);
std::string report_to_text(const DualityReport& report);

Json frame_pairs_to_json(const ModelParams& params, Duality duality, const std::vector<FramePair>& pairs);
std::string frame_pairs_to_text(const ModelParams& params, Duality duality, const std::vector<FramePair>& pairs);

Json check_report_to_json(const CheckReport& report);
std::string check_report_to_text(const CheckReport& report);

}  // namespace fockdual
