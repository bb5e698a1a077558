#ifndef SELFMAPS_ELLIPTIC_PBUNDLE_HPP
#define SELFMAPS_ELLIPTIC_PBUNDLE_HPP

// Self-map degrees of P^1-bundles over an elliptic curve E.
//
// For X = P(O + L) with L of exact order k, a self-map of prime degree p
// either covers an automorphism of E or is an isomorphism on fibres over an
// isogeny of degree p. That gives three routes:
//   (a) k | p;
//   (b) an automorphism phi with phi^*L = L^m and p = +-m (mod k);
//   (c) an endomorphism alpha of degree p with alpha^*L = L^{+-1}.
// Composite degrees follow by composing prime-degree maps.

#include <string>
#include <variant>
#include <vector>

#include "selfmaps/cm_elliptic.hpp"
#include "selfmaps/verdict.hpp"

namespace selfmaps {

struct SplitTorsion {
    TorsionPoint L;  // exact order L.k
};
struct SplitNonTorsion {};
struct SplitDegree {
    Int degree = 1;  // deg L != 0
};
/// Nontrivial extension of O by O.
struct AtiyahA0 {};
/// Nontrivial extension of O(q) by O.
struct AtiyahA1 {};

using BundleType = std::variant<SplitTorsion, SplitNonTorsion, SplitDegree, AtiyahA0, AtiyahA1>;

struct EllipticBundleDescriptor {
    CurveModel curve = CurveModel::no_cm();
    BundleType bundle = SplitNonTorsion{};

    /// Re-expresses L at its exact order (a point (2,0) mod 4 becomes (1,0)
    /// mod 2).
    static EllipticBundleDescriptor split_torsion(const CurveModel& curve, const TorsionPoint& L);
    static EllipticBundleDescriptor split_degree(const CurveModel& curve, Int degree);
    static EllipticBundleDescriptor of(const CurveModel& curve, BundleType b) { return {curve, b}; }

    /// Null unless the bundle is SplitTorsion.
    const TorsionPoint* torsion() const;
};

/// L at its exact order.
TorsionPoint renormalize(const TorsionPoint& L);

/// Throws std::invalid_argument for non-prime p or non-torsion descriptors.
PrimeDecision prime_achievable(const EllipticBundleDescriptor& desc, Int p);

struct ScanResult {
    Int bound = 0;
    std::vector<PrimeDecision> decisions;  // every prime <= bound, ascending

    std::vector<PrimeDecision> achievable() const;
    std::vector<Int> missing() const;
};

ScanResult scan_primes(const EllipticBundleDescriptor& desc, Int bound);

struct ExceptionalTriple {
    std::string family;
    OrderParams order;
    Int k = 0;
    QuadElem element;
    QuadElem conjugate_element;
    Int element_norm = 0;
};

/// The three CM configurations with k > 3 whose bundles have self-maps of
/// every degree: L in the kernel of 1 + w on Z[(1+sqrt-7)/2] (k = 4), of
/// 2 + i on Z[i] (k = 5), of 2 + w on Z[(1+sqrt-3)/2] (k = 7), or of the
/// conjugates.
std::vector<ExceptionalTriple> exceptional_triples();

/// Family tag if the descriptor is SplitTorsion with k <= 3 or matches one of
/// the given triples by kernel membership.
std::optional<std::string> exceptional_family(const EllipticBundleDescriptor& desc,
                                              const std::vector<ExceptionalTriple>& triples);

/// Route for each unit residue mod k and each prime dividing k, or nullopt
/// if some class has no route.
std::optional<Certificate> build_certificate(const EllipticBundleDescriptor& desc,
                                             const std::string& family);

inline constexpr Int kMissingScanBound = 1000;

/// AllDegrees with a certificate for k <= 3 and the exceptional families,
/// MissingPrimes (smallest first, scanned to kMissingScanBound) otherwise.
/// Throws std::logic_error if the structural answer and the per-prime
/// computation disagree.
Verdict admits_all_degrees(const EllipticBundleDescriptor& desc,
                           const std::vector<ExceptionalTriple>& triples = exceptional_triples());

/// Verdicts for everything but a torsion L: Atiyah bundles, non-torsion
/// degree-zero L and L of nonzero degree.
Verdict nonsplit_verdict(const EllipticBundleDescriptor& desc, Int bound = kMissingScanBound);

/// Dispatches to admits_all_degrees or nonsplit_verdict.
Verdict classify_bundle(const EllipticBundleDescriptor& desc);

/// phi(k) < 4, necessary for every degree when Aut(E) = {+-1}.
bool totient_filter(Int k);

}  // namespace selfmaps

#endif
