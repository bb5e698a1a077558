#include <doctest.h>

#include <algorithm>

#include "selfmaps/elliptic_pbundle.hpp"

using namespace selfmaps;

namespace {

const OrderParams gauss{0, 1};
const OrderParams eis{1, 1};
const OrderParams disc7{1, 2};

EllipticBundleDescriptor torsion(const CurveModel& c, Int k, Int v1, Int v2)
{
    return EllipticBundleDescriptor::split_torsion(c, TorsionPoint::make(k, v1, v2));
}

bool contains(const std::vector<Int>& xs, Int x) { return std::find(xs.begin(), xs.end(), x) != xs.end(); }

}  // namespace

TEST_CASE("descriptor renormalizes L to its exact order")
{
    const auto d = torsion(CurveModel::no_cm(), 4, 2, 0);
    REQUIRE(d.torsion());
    CHECK(*d.torsion() == TorsionPoint{2, 1, 0});
    CHECK(torsion(CurveModel::no_cm(), 6, 0, 0).torsion()->k == 1);
    CHECK_FALSE(EllipticBundleDescriptor::of(CurveModel::no_cm(), AtiyahA0{}).torsion());
}

TEST_CASE("prime achievability")
{
    const auto e5 = torsion(CurveModel::with_cm(gauss), 5, 1, 2);
    const auto d2 = prime_achievable(e5, 2);
    REQUIRE(d2.witness);
    const auto* aut = std::get_if<AutRoute>(&*d2.witness);
    REQUIRE(aut);
    CHECK(aut->phi == QuadElem{gauss, 0, 1});
    CHECK(aut->m == 2);
    CHECK(aut->sign == 1);

    for (const auto& c : {CurveModel::no_cm(), CurveModel::with_cm(gauss), CurveModel::with_cm(eis)}) {
        const auto d7 = prime_achievable(torsion(c, 3, 1, 0), 7);
        REQUIRE(d7.witness);
        const auto* a = std::get_if<AutRoute>(&*d7.witness);
        REQUIRE(a);
        CHECK(a->phi.x == 1);
        CHECK(a->phi.y == 0);
    }

    for (const auto& L : points_of_exact_order(4)) {
        const auto d = prime_achievable(EllipticBundleDescriptor::split_torsion(CurveModel::with_cm(gauss), L), 2);
        CHECK_FALSE(d.achievable());
    }

    const auto d5 = prime_achievable(e5, 5);
    REQUIRE(d5.witness);
    CHECK(std::holds_alternative<TorsionMultiple>(*d5.witness));

    CHECK_THROWS_AS(prime_achievable(e5, 4), std::invalid_argument);
    CHECK_THROWS_AS(prime_achievable(EllipticBundleDescriptor::of(CurveModel::no_cm(), AtiyahA0{}), 3),
                    std::invalid_argument);
}

TEST_CASE("scans")
{
    const auto d7 = torsion(CurveModel::with_cm(disc7), 4, 2, 1);
    const auto s = scan_primes(d7, 100);
    CHECK(s.decisions.size() == 25);
    CHECK(s.missing().empty());
    CHECK(scan_primes(d7, 10000).missing().empty());

    const auto nocm5 = torsion(CurveModel::no_cm(), 5, 1, 0);
    CHECK(scan_primes(nocm5, 30).missing() == std::vector<Int>{2, 3, 7, 13, 17, 23});
    const auto m100 = scan_primes(nocm5, 100).missing();
    CHECK(contains(m100, 2));
    CHECK(contains(m100, 3));
    CHECK(contains(m100, 7));

    for (const auto& c : {CurveModel::no_cm(), CurveModel::with_cm(eis)})
        CHECK(scan_primes(torsion(c, 1, 0, 0), 100).missing().empty());
    CHECK(scan_primes(nocm5, 1).decisions.empty());
}

TEST_CASE("every witness is a valid route")
{
    for (const auto& c : {CurveModel::no_cm(), CurveModel::with_cm(gauss), CurveModel::with_cm(eis),
                          CurveModel::with_cm(disc7)})
        for (Int k = 2; k <= 8; ++k)
            for (const auto& L : unit_orbit_representatives(c, k)) {
                const auto desc = EllipticBundleDescriptor::split_torsion(c, L);
                for (const auto& d : scan_primes(desc, 200).decisions) {
                    if (!d.witness) continue;
                    std::visit(
                        [&](const auto& r) {
                            using T = std::decay_t<decltype(r)>;
                            if constexpr (std::is_same_v<T, TorsionMultiple>) {
                                CHECK(d.p % k == 0);
                            } else if constexpr (std::is_same_v<T, AutRoute>) {
                                CHECK(norm(r.phi) == 1);
                                CHECK(pullback_exponent(r.phi, L) == r.m);
                                CHECK(mod_floor(d.p - r.sign * r.m, k) == 0);
                            } else {
                                CHECK(norm(r.alpha) == d.p);
                                CHECK(pullback_exponent(r.alpha, L) == mod_floor(r.sign, k));
                            }
                        },
                        *d.witness);
                    CHECK(route_base_degree(*d.witness, d.p) * route_fiber_degree(*d.witness, d.p) == d.p);
                }
            }
}

TEST_CASE("composite degrees")
{
    const auto e5 = torsion(CurveModel::with_cm(gauss), 5, 1, 2);
    const auto w = compose(prime_achievable(e5, 2), prime_achievable(e5, 3));
    CHECK(w.degree == 6);
    CHECK(w.base_degree * w.fiber_degree == 6);
}

TEST_CASE("exceptional triples")
{
    const auto ts = exceptional_triples();
    REQUIRE(ts.size() == 3);
    CHECK(kernel_on_torsion(ts[0].element, 4).size() == 4);
    CHECK(ts[0].element_norm == 4);
    CHECK(ts[1].element == QuadElem{gauss, 2, 1});
    CHECK(ts[1].element_norm == 5);
    // 5/2 + sqrt(-3)/2 = 2 + w with w = 1/2 + sqrt(-3)/2
    CHECK(ts[2].element == QuadElem{eis, 2, 1});
    CHECK(ts[2].element_norm == 7);
    for (const auto& t : ts) CHECK(t.conjugate_element == conjugate(t.element));
}

TEST_CASE("all-degrees verdicts")
{
    const auto e5 = admits_all_degrees(torsion(CurveModel::with_cm(gauss), 5, 1, 2));
    const auto* all = std::get_if<AllDegrees>(&e5);
    REQUIRE(all);
    REQUIRE(all->certificate);
    CHECK(all->certificate->family == "gaussian_k5");
    CHECK(all->certificate->residues.size() == 4);
    CHECK(all->certificate->primes_dividing_k.size() == 1);

    // 2 + w kills (v1, v2) with 2 v1 - v2 = 0 mod 7
    const auto e7 = admits_all_degrees(torsion(CurveModel::with_cm(eis), 7, 1, 2));
    REQUIRE(std::holds_alternative<AllDegrees>(e7));
    CHECK(std::get<AllDegrees>(e7).certificate->family == "eisenstein_k7");

    for (const auto& L : points_of_exact_order(6)) {
        const auto v = admits_all_degrees(EllipticBundleDescriptor::split_torsion(CurveModel::no_cm(), L));
        const auto* mp = std::get_if<MissingPrimes>(&v);
        REQUIRE(mp);
        CHECK(contains(mp->examples, 2));
        CHECK(contains(mp->examples, 3));
    }

    const auto small = admits_all_degrees(torsion(CurveModel::no_cm(), 3, 1, 1));
    REQUIRE(std::holds_alternative<AllDegrees>(small));
    CHECK(std::get<AllDegrees>(small).certificate->family == "k_at_most_3");
}

TEST_CASE("non-split verdicts")
{
    const auto a0 = nonsplit_verdict(EllipticBundleDescriptor::of(CurveModel::with_cm(gauss), AtiyahA0{}));
    const auto* inf = std::get_if<InfinitelyManyMissing>(&a0);
    REQUIRE(inf);
    for (Int p : {3, 7, 11, 19}) CHECK(contains(inf->listed_missing, p));
    CHECK_FALSE(contains(inf->listed_missing, 5));

    for (const auto& c : {CurveModel::no_cm(), CurveModel::with_cm(gauss)}) {
        const auto a1 = nonsplit_verdict(EllipticBundleDescriptor::of(c, AtiyahA1{}));
        REQUIRE(std::holds_alternative<MissingPrimes>(a1));
        CHECK(contains(std::get<MissingPrimes>(a1).examples, 2));
    }

    CHECK(std::holds_alternative<SquaresOnly>(
        nonsplit_verdict(EllipticBundleDescriptor::split_degree(CurveModel::no_cm(), 3))));

    const auto nt = nonsplit_verdict(EllipticBundleDescriptor::of(CurveModel::no_cm(), SplitNonTorsion{}), 50);
    REQUIRE(std::holds_alternative<InfinitelyManyMissing>(nt));
    CHECK(std::get<InfinitelyManyMissing>(nt).listed_missing.size() == 15);

    CHECK_THROWS(nonsplit_verdict(torsion(CurveModel::no_cm(), 5, 1, 0)));
}

TEST_CASE("totient filter")
{
    CHECK_FALSE(totient_filter(5));
    CHECK(totient_filter(6));
    CHECK_FALSE(totient_filter(12));
    CHECK(totient_filter(4));
    CHECK(totient_filter(3));
}

TEST_CASE("no-CM bundles with totient at least 4 miss a prime")
{
    for (Int k = 4; k <= 12; ++k) {
        if (totient_filter(k)) continue;
        for (const auto& L : unit_orbit_representatives(CurveModel::no_cm(), k))
            CHECK(std::holds_alternative<MissingPrimes>(
                admits_all_degrees(EllipticBundleDescriptor::split_torsion(CurveModel::no_cm(), L))));
    }
}
