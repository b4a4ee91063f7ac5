#pragma once

#include "tptri/q_analogue.hpp"
#include "tptri/tp_cert.hpp"

#include <json.hpp>

namespace tptri {

// JSON encodings.  Scalar and polynomial values travel as their exact text
// forms, so a report round-trips losslessly.
nlohmann::json to_json(const TPReport& report);
nlohmann::json to_json(const QTPReport& report);
nlohmann::json to_json(const CriterionResult& result);

TPReport tp_report_from_json(const nlohmann::json& j);
QTPReport q_tp_report_from_json(const nlohmann::json& j);
CriterionResult criterion_result_from_json(const nlohmann::json& j);

}  // namespace tptri
