#include "selfmaps/report.hpp"

#include <sstream>
#include <stdexcept>

#ifndef SELFMAPS_VERSION
#define SELFMAPS_VERSION "0.0.0"
#endif

namespace selfmaps {

using nlohmann::json;

namespace {

MissingReason reason_from(const std::string& s)
{
    if (s == "none") return MissingReason::None;
    if (s == "no_residue") return MissingReason::NoResidue;
    if (s == "no_isogeny") return MissingReason::NoIsogeny;
    throw std::invalid_argument("unknown missing reason '" + s + "'");
}

json witnesses_to_json(const std::map<Int, std::pair<int, int>>& w)
{
    json arr = json::array();
    for (const auto& [residue, ew] : w)
        arr.push_back({{"residue", residue}, {"element", ew.first}, {"sign", ew.second}});
    return arr;
}

std::map<Int, std::pair<int, int>> witnesses_from_json(const json& arr)
{
    std::map<Int, std::pair<int, int>> w;
    for (const auto& e : arr)
        w[e.at("residue").get<Int>()] = {e.at("element").get<int>(), e.at("sign").get<int>()};
    return w;
}

}  // namespace

std::string tool_version() { return SELFMAPS_VERSION; }

void to_json(json& j, const OrderParams& o) { j = {{"t", o.t}, {"n", o.n}}; }

void from_json(const json& j, OrderParams& o)
{
    o = OrderParams::make(j.at("t").get<int>(), j.at("n").get<Int>());
}

void to_json(json& j, const QuadElem& e) { j = {{"order", e.order}, {"x", e.x}, {"y", e.y}}; }

void from_json(const json& j, QuadElem& e)
{
    e.order = j.at("order").get<OrderParams>();
    e.x = j.at("x").get<Int>();
    e.y = j.at("y").get<Int>();
}

void to_json(json& j, const Route& r)
{
    j = {{"route", route_name(r)}};
    if (const auto* a = std::get_if<AutRoute>(&r)) {
        j["phi"] = a->phi;
        j["m"] = a->m;
        j["sign"] = a->sign;
    } else if (const auto* i = std::get_if<IsogenyRoute>(&r)) {
        j["alpha"] = i->alpha;
        j["sign"] = i->sign;
    }
}

void from_json(const json& j, Route& r)
{
    const auto name = j.at("route").get<std::string>();
    if (name == "torsion_multiple")
        r = TorsionMultiple{};
    else if (name == "aut_route")
        r = AutRoute{j.at("phi").get<QuadElem>(), j.at("m").get<Int>(), j.at("sign").get<int>()};
    else if (name == "isogeny_route")
        r = IsogenyRoute{j.at("alpha").get<QuadElem>(), j.at("sign").get<int>()};
    else
        throw std::invalid_argument("unknown route '" + name + "'");
}

void to_json(json& j, const PrimeDecision& d)
{
    j = {{"p", d.p}, {"achievable", d.achievable()}};
    if (d.witness)
        j["witness"] = *d.witness;
    else
        j["reason"] = to_string(d.reason);
}

void from_json(const json& j, PrimeDecision& d)
{
    d.p = j.at("p").get<Int>();
    d.witness.reset();
    d.reason = MissingReason::None;
    if (j.contains("witness")) d.witness = j.at("witness").get<Route>();
    if (j.contains("reason")) d.reason = reason_from(j.at("reason").get<std::string>());
}

void to_json(json& j, const Certificate& c)
{
    json residues = json::array();
    for (const auto& w : c.residues) residues.push_back({{"residue", w.residue}, {"route", w.route}});
    json primes = json::array();
    for (const auto& w : c.primes_dividing_k) primes.push_back({{"p", w.p}, {"route", w.route}});
    j = {{"family", c.family}, {"k", c.k}, {"residues", residues}, {"primes_dividing_k", primes}};
}

void from_json(const json& j, Certificate& c)
{
    c.family = j.at("family").get<std::string>();
    c.k = j.at("k").get<Int>();
    c.residues.clear();
    c.primes_dividing_k.clear();
    for (const auto& w : j.at("residues"))
        c.residues.push_back({w.at("residue").get<Int>(), w.at("route").get<Route>()});
    for (const auto& w : j.at("primes_dividing_k"))
        c.primes_dividing_k.push_back({w.at("p").get<Int>(), w.at("route").get<Route>()});
}

void to_json(json& j, const Verdict& v)
{
    j = {{"kind", verdict_name(v)}};
    std::visit(
        [&](const auto& x) {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, AllDegrees>) {
                j["reason"] = x.reason;
                j["certificate"] = x.certificate ? json(*x.certificate) : json(nullptr);
            } else if constexpr (std::is_same_v<T, MissingPrimes>) {
                j["examples"] = x.examples;
                j["scan_bound"] = x.scan_bound;
                j["reason"] = x.reason;
            } else if constexpr (std::is_same_v<T, InfinitelyManyMissing>) {
                j["reason"] = x.reason;
                j["listed_missing"] = x.listed_missing;
                j["listed_bound"] = x.listed_bound;
            } else if constexpr (std::is_same_v<T, SquaresOnly>) {
                j["reason"] = x.reason;
            } else if constexpr (std::is_same_v<T, FiniteCandidatePrimes>) {
                j["candidates"] = x.candidates;
                j["reason"] = x.reason;
            } else {
                j["p"] = x.p;
                j["witnesses"] = witnesses_to_json(x.witnesses);
            }
        },
        v);
}

void from_json(const json& j, Verdict& v)
{
    const auto kind = j.at("kind").get<std::string>();
    if (kind == "AllDegrees") {
        AllDegrees a;
        a.reason = j.at("reason").get<std::string>();
        if (!j.at("certificate").is_null()) a.certificate = j.at("certificate").get<Certificate>();
        v = a;
    } else if (kind == "MissingPrimes") {
        v = MissingPrimes{j.at("examples").get<std::vector<Int>>(), j.at("scan_bound").get<Int>(),
                          j.at("reason").get<std::string>()};
    } else if (kind == "InfinitelyManyMissing") {
        v = InfinitelyManyMissing{j.at("reason").get<std::string>(),
                                  j.at("listed_missing").get<std::vector<Int>>(),
                                  j.at("listed_bound").get<Int>()};
    } else if (kind == "SquaresOnly") {
        v = SquaresOnly{j.at("reason").get<std::string>()};
    } else if (kind == "FiniteCandidatePrimes") {
        v = FiniteCandidatePrimes{j.at("candidates").get<std::vector<Int>>(), j.at("reason").get<std::string>()};
    } else if (kind == "GroupConditionHolds") {
        v = GroupConditionHolds{j.at("p").get<Int>(), witnesses_from_json(j.at("witnesses"))};
    } else {
        throw std::invalid_argument("unknown verdict kind '" + kind + "'");
    }
}

void to_json(json& j, const Report& r)
{
    j = {{"schema_version", r.schema_version},
         {"tool_version", r.tool_version},
         {"command", r.command},
         {"subject", r.subject},
         {"verdict", r.verdict ? json(*r.verdict) : json(nullptr)},
         {"scan", r.scan},
         {"details", r.details}};
    if (r.timing_ms) j["timing_ms"] = *r.timing_ms;
}

void from_json(const json& j, Report& r)
{
    r.schema_version = j.at("schema_version").get<int>();
    if (r.schema_version != kSchemaVersion)
        throw std::invalid_argument("unsupported schema_version " + std::to_string(r.schema_version));
    r.tool_version = j.at("tool_version").get<std::string>();
    r.command = j.at("command").get<std::string>();
    r.subject = j.at("subject").get<std::string>();
    r.verdict.reset();
    if (!j.at("verdict").is_null()) r.verdict = j.at("verdict").get<Verdict>();
    r.scan = j.at("scan").get<std::vector<PrimeDecision>>();
    r.details = j.at("details");
    r.timing_ms.reset();
    if (j.contains("timing_ms")) r.timing_ms = j.at("timing_ms").get<double>();
}

std::string format_route(const Route& r)
{
    std::ostringstream os;
    if (std::holds_alternative<TorsionMultiple>(r)) {
        os << "k divides p";
    } else if (const auto* a = std::get_if<AutRoute>(&r)) {
        os << "automorphism " << a->phi << " with phi*L = L^" << a->m << ", p = "
           << (a->sign > 0 ? "+" : "-") << "m mod k";
    } else if (const auto* i = std::get_if<IsogenyRoute>(&r)) {
        os << "isogeny " << i->alpha << " with alpha*L = L^" << (i->sign > 0 ? "+1" : "-1");
    }
    return os.str();
}

std::string format_verdict(const Verdict& v)
{
    std::ostringstream os;
    os << verdict_name(v);
    const auto list = [&](const std::vector<Int>& xs, std::size_t cap) {
        os << " {";
        for (std::size_t i = 0; i < xs.size() && i < cap; ++i) os << (i ? ", " : "") << xs[i];
        if (xs.size() > cap) os << ", ... (" << xs.size() << " total)";
        os << "}";
    };
    std::visit(
        [&](const auto& x) {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, AllDegrees>) {
                os << ": " << x.reason;
                if (x.certificate) os << " [family " << x.certificate->family << "]";
            } else if constexpr (std::is_same_v<T, MissingPrimes>) {
                list(x.examples, 12);
                os << " up to " << x.scan_bound << ": " << x.reason;
            } else if constexpr (std::is_same_v<T, InfinitelyManyMissing>) {
                os << ": " << x.reason;
                if (x.listed_bound > 0) {
                    os << "; missing up to " << x.listed_bound;
                    list(x.listed_missing, 12);
                }
            } else if constexpr (std::is_same_v<T, SquaresOnly>) {
                os << ": " << x.reason;
            } else if constexpr (std::is_same_v<T, FiniteCandidatePrimes>) {
                os << " (candidate set)";
                list(x.candidates, 12);
            } else {
                os << ": group condition holds for p = " << x.p
                   << " (action on a curve not checked)";
            }
        },
        v);
    return os.str();
}

}  // namespace selfmaps
