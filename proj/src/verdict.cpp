#include "selfmaps/verdict.hpp"

namespace selfmaps {

namespace {
template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;
}  // namespace

std::string route_name(const Route& r)
{
    return std::visit(overloaded{[](const TorsionMultiple&) { return std::string("torsion_multiple"); },
                                 [](const AutRoute&) { return std::string("aut_route"); },
                                 [](const IsogenyRoute&) { return std::string("isogeny_route"); }},
                      r);
}

Int route_base_degree(const Route& r, Int p)
{
    return std::holds_alternative<IsogenyRoute>(r) ? p : 1;
}

Int route_fiber_degree(const Route& r, Int p)
{
    return std::holds_alternative<IsogenyRoute>(r) ? 1 : p;
}

std::string to_string(MissingReason r)
{
    switch (r) {
    case MissingReason::None: return "none";
    case MissingReason::NoResidue: return "no_residue";
    case MissingReason::NoIsogeny: return "no_isogeny";
    }
    return "?";
}

CompositeWitness compose(const PrimeDecision& a, const PrimeDecision& b)
{
    CompositeWitness c;
    if (!a.witness || !b.witness) return c;
    c.base_degree = route_base_degree(*a.witness, a.p) * route_base_degree(*b.witness, b.p);
    c.fiber_degree = route_fiber_degree(*a.witness, a.p) * route_fiber_degree(*b.witness, b.p);
    c.degree = c.base_degree * c.fiber_degree;
    return c;
}

std::string verdict_name(const Verdict& v)
{
    return std::visit(
        overloaded{[](const AllDegrees&) { return std::string("AllDegrees"); },
                   [](const MissingPrimes&) { return std::string("MissingPrimes"); },
                   [](const InfinitelyManyMissing&) { return std::string("InfinitelyManyMissing"); },
                   [](const SquaresOnly&) { return std::string("SquaresOnly"); },
                   [](const FiniteCandidatePrimes&) { return std::string("FiniteCandidatePrimes"); },
                   [](const GroupConditionHolds&) { return std::string("GroupConditionHolds"); }},
        v);
}

}  // namespace selfmaps
