#ifndef SELFMAPS_REPORT_HPP
#define SELFMAPS_REPORT_HPP

// Machine-readable reports. The schema is described in docs/report_schema.md
// and versioned by schema_version.

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "selfmaps/elliptic_pbundle.hpp"
#include "selfmaps/verdict.hpp"

namespace selfmaps {

inline constexpr int kSchemaVersion = 1;
std::string tool_version();

struct Report {
    int schema_version = kSchemaVersion;
    std::string tool_version;
    std::string command;
    std::string subject;
    std::optional<Verdict> verdict;
    std::vector<PrimeDecision> scan;  // per-prime table, ascending
    nlohmann::json details = nlohmann::json::object();
    std::optional<double> timing_ms;  // only with --timing; keeps output deterministic

    friend bool operator==(const Report&, const Report&) = default;
};

void to_json(nlohmann::json& j, const OrderParams& o);
void from_json(const nlohmann::json& j, OrderParams& o);
void to_json(nlohmann::json& j, const QuadElem& e);
void from_json(const nlohmann::json& j, QuadElem& e);
void to_json(nlohmann::json& j, const Route& r);
void from_json(const nlohmann::json& j, Route& r);
void to_json(nlohmann::json& j, const PrimeDecision& d);
void from_json(const nlohmann::json& j, PrimeDecision& d);
void to_json(nlohmann::json& j, const Certificate& c);
void from_json(const nlohmann::json& j, Certificate& c);
void to_json(nlohmann::json& j, const Verdict& v);
void from_json(const nlohmann::json& j, Verdict& v);
void to_json(nlohmann::json& j, const Report& r);
void from_json(const nlohmann::json& j, Report& r);

/// Human-readable one-line rendering of a route, e.g. "aut phi=(0,1) m=2 p=+m".
std::string format_route(const Route& r);
std::string format_verdict(const Verdict& v);

}  // namespace selfmaps

#endif
