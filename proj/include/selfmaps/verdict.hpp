#ifndef SELFMAPS_VERDICT_HPP
#define SELFMAPS_VERDICT_HPP

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "selfmaps/qorders.hpp"

namespace selfmaps {

// -- witness routes for a prime degree p ------------------------------------

/// k | p: a self-map of degree p exists independently of the base (multiply
/// the fibre coordinate by a p-th power).
struct TorsionMultiple {
    friend bool operator==(const TorsionMultiple&, const TorsionMultiple&) = default;
};

/// Automorphism phi of the base with phi^*L = L^m and p = sign*m (mod k).
struct AutRoute {
    QuadElem phi;
    Int m = 1;
    int sign = 1;
    friend bool operator==(const AutRoute&, const AutRoute&) = default;
};

/// Endomorphism alpha of degree p of the base lifted with iso fibres, valid
/// when alpha^*L = L^sign.
struct IsogenyRoute {
    QuadElem alpha;
    int sign = 1;
    friend bool operator==(const IsogenyRoute&, const IsogenyRoute&) = default;
};

using Route = std::variant<TorsionMultiple, AutRoute, IsogenyRoute>;

std::string route_name(const Route& r);
/// Degrees of the self-map on the base and on the fibres.
Int route_base_degree(const Route& r, Int p);
Int route_fiber_degree(const Route& r, Int p);

enum class MissingReason { None, NoResidue, NoIsogeny };

struct PrimeDecision {
    Int p = 0;
    std::optional<Route> witness;
    MissingReason reason = MissingReason::None;

    bool achievable() const { return witness.has_value(); }
    friend bool operator==(const PrimeDecision&, const PrimeDecision&) = default;
};

std::string to_string(MissingReason r);

/// Composite degree from two prime witnesses, by composing the maps.
struct CompositeWitness {
    Int degree = 0;
    Int base_degree = 0;
    Int fiber_degree = 0;
};

CompositeWitness compose(const PrimeDecision& a, const PrimeDecision& b);

// -- verdicts ---------------------------------------------------------------

struct ResidueWitness {
    Int residue = 0;
    Route route;
    friend bool operator==(const ResidueWitness&, const ResidueWitness&) = default;
};

struct PrimeWitness {
    Int p = 0;
    Route route;
    friend bool operator==(const PrimeWitness&, const PrimeWitness&) = default;
};

/// Covers every prime: one route per unit residue class mod k and one route
/// per prime dividing k.
struct Certificate {
    std::string family;
    Int k = 1;
    std::vector<ResidueWitness> residues;
    std::vector<PrimeWitness> primes_dividing_k;
    friend bool operator==(const Certificate&, const Certificate&) = default;
};

struct AllDegrees {
    std::optional<Certificate> certificate;
    std::string reason;
    friend bool operator==(const AllDegrees&, const AllDegrees&) = default;
};

struct MissingPrimes {
    std::vector<Int> examples;
    Int scan_bound = 0;
    std::string reason;
    friend bool operator==(const MissingPrimes&, const MissingPrimes&) = default;
};

/// Infinitude is cited, not computed; listed_missing is what was found up to
/// listed_bound.
struct InfinitelyManyMissing {
    std::string reason;
    std::vector<Int> listed_missing;
    Int listed_bound = 0;
    friend bool operator==(const InfinitelyManyMissing&, const InfinitelyManyMissing&) = default;
};

struct SquaresOnly {
    std::string reason;
    friend bool operator==(const SquaresOnly&, const SquaresOnly&) = default;
};

/// Upper bound: only these primes can occur as degrees.
struct FiniteCandidatePrimes {
    std::vector<Int> candidates;
    std::string reason;
    friend bool operator==(const FiniteCandidatePrimes&, const FiniteCandidatePrimes&) = default;
};

/// The group-theoretic condition holds; realizability of the action on a
/// curve is not checked.
struct GroupConditionHolds {
    Int p = 0;
    std::map<Int, std::pair<int, int>> witnesses;  // residue -> (element, sign)
    friend bool operator==(const GroupConditionHolds&, const GroupConditionHolds&) = default;
};

using Verdict = std::variant<AllDegrees, MissingPrimes, InfinitelyManyMissing, SquaresOnly,
                             FiniteCandidatePrimes, GroupConditionHolds>;

std::string verdict_name(const Verdict& v);

}  // namespace selfmaps

#endif
