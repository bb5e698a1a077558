#include "selfmaps/elliptic_pbundle.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "selfmaps/ns_lattice.hpp"

namespace selfmaps {

namespace {

const TorsionPoint& require_torsion(const EllipticBundleDescriptor& desc)
{
    const auto* L = desc.torsion();
    if (!L) throw std::invalid_argument("descriptor does not carry a torsion line bundle");
    if (exact_order(*L) != L->k)
        throw std::invalid_argument("torsion line bundle is not at its exact order");
    return *L;
}

// Identity, then -1, then the remaining automorphisms in (y, x) order.
std::vector<QuadElem> automorphisms_in_route_order(const CurveModel& curve)
{
    auto auts = aut_group(curve);
    const auto rank = [](const QuadElem& u) {
        if (u.y == 0) return u.x == 1 ? 0 : 1;
        return 2;
    };
    std::stable_sort(auts.begin(), auts.end(),
                     [&](const QuadElem& a, const QuadElem& b) { return rank(a) < rank(b); });
    return auts;
}

std::optional<AutRoute> aut_route_for(const CurveModel& curve, const TorsionPoint& L, Int residue)
{
    const Int k = L.k;
    if (k == 1) return AutRoute{QuadElem::rational(curve.arithmetic_order(), 1), 1, 1};
    // p = +m is preferred over p = -m across all automorphisms
    const auto auts = automorphisms_in_route_order(curve);
    for (int sign : {1, -1})
        for (const auto& phi : auts) {
            const auto m = pullback_exponent(phi, L);
            if (m && mod_floor(residue - sign * *m, k) == 0) return AutRoute{phi, *m, sign};
        }
    return std::nullopt;
}

std::vector<Int> non_norm_primes(const CurveModel& curve, Int bound)
{
    std::vector<Int> out;
    for (Int p : primes_up_to(bound))
        if (endomorphisms_of_degree(curve, p).empty()) out.push_back(p);
    return out;
}

}  // namespace

TorsionPoint renormalize(const TorsionPoint& L)
{
    const Int d = exact_order(L);
    const Int s = L.k / d;
    return TorsionPoint::make(d, L.v1 / s, L.v2 / s);
}

EllipticBundleDescriptor EllipticBundleDescriptor::split_torsion(const CurveModel& curve,
                                                                 const TorsionPoint& L)
{
    return {curve, SplitTorsion{renormalize(L)}};
}

EllipticBundleDescriptor EllipticBundleDescriptor::split_degree(const CurveModel& curve, Int degree)
{
    if (degree == 0) return {curve, SplitNonTorsion{}};
    return {curve, SplitDegree{degree}};
}

const TorsionPoint* EllipticBundleDescriptor::torsion() const
{
    const auto* s = std::get_if<SplitTorsion>(&bundle);
    return s ? &s->L : nullptr;
}

PrimeDecision prime_achievable(const EllipticBundleDescriptor& desc, Int p)
{
    if (!is_prime(p)) throw std::invalid_argument("prime_achievable: p must be prime");
    const auto& L = require_torsion(desc);
    const Int k = L.k;
    PrimeDecision d{p, std::nullopt, MissingReason::None};

    if (k > 1 && p % k == 0) {
        d.witness = TorsionMultiple{};
        return d;
    }
    if (auto r = aut_route_for(desc.curve, L, p)) {
        d.witness = *r;
        return d;
    }
    const auto isogenies = endomorphisms_of_degree(desc.curve, p);
    for (const auto& alpha : isogenies) {
        const auto m = pullback_exponent(alpha, L);
        if (!m) continue;
        if (*m == 1 % k) {
            d.witness = IsogenyRoute{alpha, 1};
            return d;
        }
        if (*m == k - 1) {
            d.witness = IsogenyRoute{alpha, -1};
            return d;
        }
    }
    d.reason = isogenies.empty() ? MissingReason::NoResidue : MissingReason::NoIsogeny;
    return d;
}

std::vector<PrimeDecision> ScanResult::achievable() const
{
    std::vector<PrimeDecision> out;
    std::copy_if(decisions.begin(), decisions.end(), std::back_inserter(out),
                 [](const PrimeDecision& d) { return d.achievable(); });
    return out;
}

std::vector<Int> ScanResult::missing() const
{
    std::vector<Int> out;
    for (const auto& d : decisions)
        if (!d.achievable()) out.push_back(d.p);
    return out;
}

ScanResult scan_primes(const EllipticBundleDescriptor& desc, Int bound)
{
    require_torsion(desc);
    ScanResult r;
    r.bound = bound;
    for (Int p : primes_up_to(bound)) r.decisions.push_back(prime_achievable(desc, p));
    return r;
}

std::vector<ExceptionalTriple> exceptional_triples()
{
    std::vector<ExceptionalTriple> out;
    // 3/2 + sqrt(-7)/2 = 1 + w with w = (1 + sqrt(-7))/2
    const auto o7 = OrderParams::make(1, 2);
    out.push_back({"disc7_k4", o7, 4, {o7, 1, 1}, conjugate({o7, 1, 1}), 0});
    const auto o4 = OrderParams::make(0, 1);
    out.push_back({"gaussian_k5", o4, 5, {o4, 2, 1}, conjugate({o4, 2, 1}), 0});
    // 5/2 + sqrt(-3)/2 = 2 + w with w = (1 + sqrt(-3))/2
    const auto o3 = OrderParams::make(1, 1);
    out.push_back({"eisenstein_k7", o3, 7, {o3, 2, 1}, conjugate({o3, 2, 1}), 0});
    for (auto& t : out) t.element_norm = norm(t.element);
    return out;
}

std::optional<std::string> exceptional_family(const EllipticBundleDescriptor& desc,
                                              const std::vector<ExceptionalTriple>& triples)
{
    const auto* L = desc.torsion();
    if (!L) return std::nullopt;
    if (L->k <= 3) return std::string("k_at_most_3");
    if (!desc.curve.has_cm()) return std::nullopt;
    for (const auto& t : triples) {
        if (!(desc.curve.cm_order() == t.order) || L->k != t.k) continue;
        if (!(t.element.order == t.order) || !(t.conjugate_element.order == t.order)) continue;
        if (in_kernel(t.element, *L) || in_kernel(t.conjugate_element, *L)) return t.family;
    }
    return std::nullopt;
}

std::optional<Certificate> build_certificate(const EllipticBundleDescriptor& desc,
                                             const std::string& family)
{
    const auto& L = require_torsion(desc);
    const Int k = L.k;
    Certificate cert;
    cert.family = family;
    cert.k = k;
    for (Int r = 0; r < k; ++r) {
        if (std::gcd(r, k) != 1) continue;
        auto route = aut_route_for(desc.curve, L, r);
        if (!route) return std::nullopt;
        cert.residues.push_back({r, *route});
    }
    for (Int q = 2; q <= k; ++q) {
        if (k % q != 0 || !is_prime(q)) continue;
        auto d = prime_achievable(desc, q);
        if (!d.witness) return std::nullopt;
        cert.primes_dividing_k.push_back({q, *d.witness});
    }
    return cert;
}

Verdict admits_all_degrees(const EllipticBundleDescriptor& desc,
                           const std::vector<ExceptionalTriple>& triples)
{
    const auto& L = require_torsion(desc);
    if (auto family = exceptional_family(desc, triples)) {
        auto cert = build_certificate(desc, *family);
        if (!cert)
            throw std::logic_error("matched family " + *family + " but some prime class has no route");
        return AllDegrees{std::move(cert), "every prime degree has a route"};
    }
    auto missing = scan_primes(desc, kMissingScanBound).missing();
    if (missing.empty()) {
        std::ostringstream msg;
        msg << "no missing prime up to " << kMissingScanBound << " for " << desc.curve.name()
            << " k=" << L.k << " outside the exceptional families";
        throw std::logic_error(msg.str());
    }
    std::string reason = L.k >= 4 && !desc.curve.has_cm() && !totient_filter(L.k)
                             ? "totient of k is at least 4"
                             : "a small prime has no route";
    return MissingPrimes{std::move(missing), kMissingScanBound, reason};
}

Verdict nonsplit_verdict(const EllipticBundleDescriptor& desc, Int bound)
{
    return std::visit(
        [&](const auto& b) -> Verdict {
            using T = std::decay_t<decltype(b)>;
            if constexpr (std::is_same_v<T, SplitTorsion>) {
                throw std::invalid_argument("nonsplit_verdict: torsion bundles go through admits_all_degrees");
            } else if constexpr (std::is_same_v<T, AtiyahA0>) {
                return InfinitelyManyMissing{
                    "degrees are norms from End(E); primes without a norm are missing",
                    non_norm_primes(desc.curve, bound), bound};
            } else if constexpr (std::is_same_v<T, AtiyahA1>) {
                if (!atiyah_deg2_search().empty())
                    throw std::logic_error("degree-two class search found a solution");
                return MissingPrimes{{2}, 2, "no integral class with F.f*S in {1,2} has square 2"};
            } else if constexpr (std::is_same_v<T, SplitNonTorsion>) {
                return InfinitelyManyMissing{
                    "non-torsion L: fibres are preserved, degrees are degrees of endomorphisms of E",
                    non_norm_primes(desc.curve, bound), bound};
            } else {
                return SquaresOnly{"deg L != 0: unique curve of negative self-intersection"};
            }
        },
        desc.bundle);
}

Verdict classify_bundle(const EllipticBundleDescriptor& desc)
{
    if (desc.torsion()) return admits_all_degrees(desc);
    return nonsplit_verdict(desc);
}

bool totient_filter(Int k) { return euler_totient(k) < 4; }

}  // namespace selfmaps
