#include "hahn/json_io.hpp"

#include <json.hpp>

namespace hahn {

namespace {

using Json = nlohmann::ordered_json;

/// Normalized kernel entries are integers; emit numbers while they fit a
/// 64-bit value and decimal strings beyond that.
Json rational_entry(const Rat& r) {
    if (is_integer(r)) {
        Int n = Int(numerator(r));
        if (n >= std::numeric_limits<std::int64_t>::min() &&
            n <= std::numeric_limits<std::int64_t>::max())
            return Json(static_cast<std::int64_t>(n));
    }
    return Json(to_string(r));
}

Json vector_entry(const std::optional<std::vector<Rat>>& v) {
    if (!v) return nullptr;
    Json arr = Json::array();
    for (const auto& x : *v) arr.push_back(rational_entry(x));
    return arr;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

} // namespace

std::string certificate_to_json(const Certificate& cert) {
    Json j;
    Json inputs = Json::array(), shifted = Json::array();
    for (const auto& s : cert.inputs) inputs.push_back(s.str());
    for (const auto& s : cert.shifted_inputs) shifted.push_back(s.str());
    j["inputs"] = std::move(inputs);
    j["shifted_inputs"] = std::move(shifted);
    j["rank"] = cert.rank;
    switch (cert.outcome) {
        case Certificate::Outcome::certified: j["outcome"] = "certified"; break;
        case Certificate::Outcome::dependent: j["outcome"] = "dependent"; break;
        case Certificate::Outcome::inconclusive: j["outcome"] = "inconclusive"; break;
    }
    j["witness"] = vector_entry(cert.witness);
    j["conclusion"] = cert.conclusion ? Json(*cert.conclusion) : Json(nullptr);
    j["trusted_region"] = cert.trusted_region ? Json(cert.trusted_region->str()) : Json(nullptr);
    return dump(j);
}

std::string relation_report_to_json(const RelationReport& report) {
    Json j;
    j["degree_bound"] = report.degree_bound;
    j["monomial_count"] = report.monomial_count;
    switch (report.outcome) {
        case RelationReport::Outcome::verified: j["outcome"] = "verified_relation"; break;
        case RelationReport::Outcome::candidate: j["outcome"] = "candidate_relation"; break;
        case RelationReport::Outcome::none_found: j["outcome"] = "none_found"; break;
    }
    Json monos = Json::array();
    for (const auto& tuple : report.monomials) monos.push_back(tuple);
    j["monomials"] = std::move(monos);
    j["coefficients"] = vector_entry(report.coefficients);
    j["valid_below"] = report.valid_below ? Json(report.valid_below->str()) : Json(nullptr);
    j["trusted_constraints"] =
        report.trusted_constraints ? Json(*report.trusted_constraints) : Json(nullptr);
    return dump(j);
}

std::string series_to_json(const Series& value) {
    Json j;
    j["value"] = value.str();
    j["guarantee"] = value.guarantee() ? Json(value.guarantee()->str()) : Json(nullptr);
    return dump(j);
}

} // namespace hahn
