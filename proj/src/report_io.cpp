#include "tptri/report_io.hpp"

#include "tptri/errors.hpp"

namespace tptri {

using nlohmann::json;

namespace {

json order_to_json(const std::optional<long>& order) {
    if (order) return *order;
    return "all";
}

std::optional<long> order_from_json(const json& j) {
    if (j.is_string()) {
        if (j.get<std::string>() != "all")
            throw ParseError("order_checked must be an integer or \"all\"");
        return std::nullopt;
    }
    return j.get<long>();
}

template <typename Report>
void read_common(const json& j, Report& report) {
    report.verified = j.at("verified").get<bool>();
    report.order_checked = order_from_json(j.at("order_checked"));
    report.minors_evaluated = j.at("minors_evaluated").get<unsigned long long>();
}

}  // namespace

json to_json(const TPReport& report) {
    json j{{"type", "tp-report"},
           {"verified", report.verified},
           {"order_checked", order_to_json(report.order_checked)},
           {"minors_evaluated", report.minors_evaluated}};
    if (report.witness) {
        j["witness"] = json{{"rows", report.witness->rows},
                            {"cols", report.witness->cols},
                            {"value", to_string(report.witness->value)}};
    }
    return j;
}

json to_json(const QTPReport& report) {
    json j{{"type", "q-tp-report"},
           {"verified", report.verified},
           {"order_checked", order_to_json(report.order_checked)},
           {"minors_evaluated", report.minors_evaluated}};
    if (report.witness) {
        j["witness"] = json{{"rows", report.witness->rows},
                            {"cols", report.witness->cols},
                            {"value", to_string(report.witness->value)},
                            {"first_negative_power", report.witness->first_negative_power}};
    }
    return j;
}

json to_json(const CriterionResult& result) {
    json j{{"type", "criterion-result"},
           {"criterion", result.criterion},
           {"holds", result.holds}};
    if (result.first_failure) {
        j["first_failure"] = json{{"index", result.first_failure->index},
                                  {"inequality", result.first_failure->inequality}};
    }
    return j;
}

TPReport tp_report_from_json(const json& j) {
    TPReport report;
    read_common(j, report);
    if (j.contains("witness")) {
        const json& w = j.at("witness");
        Witness witness;
        witness.rows = w.at("rows").get<std::vector<long>>();
        witness.cols = w.at("cols").get<std::vector<long>>();
        witness.value = parse_rational(w.at("value").get<std::string>());
        report.witness = std::move(witness);
    }
    return report;
}

QTPReport q_tp_report_from_json(const json& j) {
    QTPReport report;
    read_common(j, report);
    if (j.contains("witness")) {
        const json& w = j.at("witness");
        QWitness witness;
        witness.rows = w.at("rows").get<std::vector<long>>();
        witness.cols = w.at("cols").get<std::vector<long>>();
        witness.value = parse_qpoly(w.at("value").get<std::string>());
        witness.first_negative_power = w.at("first_negative_power").get<long>();
        report.witness = std::move(witness);
    }
    return report;
}

CriterionResult criterion_result_from_json(const json& j) {
    CriterionResult result;
    result.criterion = j.at("criterion").get<std::string>();
    result.holds = j.at("holds").get<bool>();
    if (j.contains("first_failure")) {
        const json& f = j.at("first_failure");
        result.first_failure = CriterionFailure{
            f.at("index").get<long>(), f.at("inequality").get<std::string>()};
    }
    return result;
}

}  // namespace tptri
