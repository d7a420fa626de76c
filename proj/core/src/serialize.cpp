#include "euler_orient/serialize.hpp"

#include <cmath>

namespace eo {
namespace {

nlohmann::json finite_or_null(double x) {
    if (std::isfinite(x)) return x;
    return nullptr;
}

nlohmann::json log_or_null(const LogNumber& x) {
    if (x.is_zero()) return nullptr;
    return finite_or_null(x.log());
}

}  // namespace

nlohmann::json to_json(const EstimateReport& report) {
    nlohmann::json j{
        {"graph", report.graph_id},
        {"n", report.n},
        {"m", report.m},
        {"lambda2", report.lambda2},
        {"gamma", report.gamma},
        {"ln_t", finite_or_null(report.ln_t)},
        {"method", report.method},
        {"ln_estimate", log_or_null(report.estimate)},
        {"approx", report.estimate.approx_string()},
    };
    j["exact"] = report.exact ? nlohmann::json(to_string(*report.exact)) : nlohmann::json(nullptr);
    j["ratio"] = report.ratio ? finite_or_null(*report.ratio) : nlohmann::json(nullptr);
    if (report.note) j["note"] = *report.note;
    return j;
}

nlohmann::json to_json(const McResult& result) {
    nlohmann::json j{
        {"method", to_string(result.method)},
        {"ln_estimate", log_or_null(result.estimate)},
        {"approx", result.estimate.approx_string()},
        {"stderr_rel", finite_or_null(result.stderr_rel)},
        {"samples", result.samples},
        {"accepted", result.accepted},
        {"seed", result.seed},
    };
    j["epsilon"] = result.epsilon ? nlohmann::json(*result.epsilon) : nlohmann::json(nullptr);
    return j;
}

nlohmann::json to_json(const LemmaReport& report) {
    nlohmann::json observed = nlohmann::json::object();
    for (const auto& [key, value] : report.observed) observed[key] = finite_or_null(value);
    nlohmann::json parameters = nlohmann::json::object();
    for (const auto& [key, value] : report.parameters) parameters[key] = finite_or_null(value);
    nlohmann::json counterexamples = nlohmann::json::array();
    for (const auto& c : report.counterexamples) {
        nlohmann::json params = nlohmann::json::object();
        for (const auto& [key, value] : c.parameters) params[key] = finite_or_null(value);
        counterexamples.push_back({{"n", c.graph.vertex_count()},
                                   {"m", c.graph.edge_count()},
                                   {"parameters", params},
                                   {"detail", c.detail}});
    }
    return {
        {"lemma", report.lemma},
        {"passed", report.passed()},
        {"instances", report.instances},
        {"violations", report.violations},
        {"skipped", report.skipped},
        {"observed", observed},
        {"parameters", parameters},
        {"counterexamples", counterexamples},
        {"notes", report.notes},
    };
}

}  // namespace eo
