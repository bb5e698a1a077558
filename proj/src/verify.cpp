#include "selfmaps/verify.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <complex>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "selfmaps/cm_elliptic.hpp"
#include "selfmaps/elliptic_pbundle.hpp"
#include "selfmaps/group_condition.hpp"
#include "selfmaps/ns_lattice.hpp"
#include "selfmaps/qorders.hpp"
#include "selfmaps/toric.hpp"

namespace selfmaps {

namespace {

// Collects failures; the first few are kept for the report.
class Tally {
public:
    void expect(bool ok, const std::string& what)
    {
        ++checks_;
        if (ok) return;
        ++failures_;
        if (notes_.size() < 5) notes_.push_back(what);
    }
    void note(const std::string& s) { info_ = s; }

    ClaimResult finish(int id, std::string name, std::string statement,
                       std::chrono::steady_clock::time_point start) const
    {
        ClaimResult r;
        r.id = id;
        r.name = std::move(name);
        r.statement = std::move(statement);
        r.passed = failures_ == 0 && checks_ > 0;
        std::ostringstream os;
        os << checks_ << " checks, " << failures_ << " failed";
        if (!info_.empty()) os << "; " << info_;
        for (const auto& n : notes_) os << "; " << n;
        r.detail = os.str();
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        return r;
    }

private:
    long checks_ = 0;
    long failures_ = 0;
    std::vector<std::string> notes_;
    std::string info_;
};

template <class F>
ClaimResult guarded(int id, const char* name, const char* statement, F&& body)
{
    const auto start = std::chrono::steady_clock::now();
    Tally tally;
    try {
        body(tally);
    } catch (const std::exception& ex) {
        tally.expect(false, std::string("exception: ") + ex.what());
    }
    return tally.finish(id, name, statement, start);
}

std::string str_point(const TorsionPoint& L)
{
    std::ostringstream os;
    os << "(" << L.v1 << "," << L.v2 << ") mod " << L.k;
    return os.str();
}

// Matrices of the six kernel elements on the basis {1, w}, written out by
// hand: [[x, -n y], [y, x + t y]].
struct KernelOracle {
    OrderParams order;
    Int k;
    std::array<Int, 4> m;
};

std::vector<KernelOracle> kernel_oracles()
{
    const OrderParams o7{1, 2}, o4{0, 1}, o3{1, 1};
    return {
        {o7, 4, {1, -2, 1, 2}},   // 3/2 + sqrt(-7)/2 = 1 + w
        {o7, 4, {2, 2, -1, 1}},   // 3/2 - sqrt(-7)/2 = 2 - w
        {o4, 5, {2, -1, 1, 2}},   // 2 + i
        {o4, 5, {2, 1, -1, 2}},   // 2 - i
        {o3, 7, {2, -1, 1, 3}},   // 5/2 + sqrt(-3)/2 = 2 + w
        {o3, 7, {3, 1, -1, 2}},   // 5/2 - sqrt(-3)/2 = 3 - w
    };
}

bool oracle_kills(const std::array<Int, 4>& m, Int k, Int v1, Int v2)
{
    return (m[0] * v1 + m[1] * v2) % k == 0 && (m[2] * v1 + m[3] * v2) % k == 0;
}

bool oracle_exceptional(const CurveModel& curve, const TorsionPoint& L)
{
    if (!curve.has_cm()) return false;
    for (const auto& o : kernel_oracles())
        if (o.order == curve.cm_order() && o.k == L.k && oracle_kills(o.m, L.k, L.v1, L.v2)) return true;
    return false;
}

std::vector<CurveModel> test_curves()
{
    return {CurveModel::no_cm(), CurveModel::with_cm({0, 1}), CurveModel::with_cm({1, 1}),
            CurveModel::with_cm({0, 2}), CurveModel::with_cm({1, 2})};
}

// Permutation group on {0..n-1} closed from generators, identity first.
CayleyGroup permutation_group(const std::vector<std::vector<int>>& gens)
{
    using Perm = std::vector<int>;
    const std::size_t n = gens.front().size();
    Perm id(n);
    std::iota(id.begin(), id.end(), 0);
    std::vector<Perm> elems{id};
    for (std::size_t i = 0; i < elems.size(); ++i)
        for (const auto& g : gens) {
            Perm h(n);
            for (std::size_t j = 0; j < n; ++j) h[j] = g[elems[i][j]];
            if (std::find(elems.begin(), elems.end(), h) == elems.end()) elems.push_back(h);
        }
    const auto index = [&](const Perm& p) {
        return static_cast<int>(std::find(elems.begin(), elems.end(), p) - elems.begin());
    };
    std::vector<std::vector<int>> t(elems.size(), std::vector<int>(elems.size()));
    for (std::size_t a = 0; a < elems.size(); ++a)
        for (std::size_t b = 0; b < elems.size(); ++b) {
            Perm h(n);
            for (std::size_t j = 0; j < n; ++j) h[j] = elems[a][elems[b][j]];
            t[a][b] = index(h);
        }
    return CayleyGroup(std::move(t));
}

}  // namespace

ClaimResult claim_degree_two_table()
{
    return guarded(1, "degree_two_table", "complex multiplications of degree two are +-1+-i, +-(1+-sqrt-7)/2, +-sqrt-2",
                   [](Tally& t) {
        using C = std::complex<double>;
        const double r7 = std::sqrt(7.0), r2 = std::sqrt(2.0);
        const std::map<Int, std::vector<C>> expected_complex{
            {-4, {{1, 1}, {1, -1}, {-1, 1}, {-1, -1}}},
            {-7, {{0.5, r7 / 2}, {0.5, -r7 / 2}, {-0.5, r7 / 2}, {-0.5, -r7 / 2}}},
            {-8, {{0, r2}, {0, -r2}}},
        };
        const std::map<Int, std::set<std::pair<Int, Int>>> expected_xy{
            {-4, {{1, 1}, {1, -1}, {-1, 1}, {-1, -1}}},
            {-7, {{0, 1}, {-1, 1}, {0, -1}, {1, -1}}},
            {-8, {{0, 1}, {0, -1}}},
        };
        std::set<Int> nonempty;
        for (const auto& row : degree_two_table(10)) {
            if (row.elements.empty()) continue;
            const Int d = row.order.discriminant();
            nonempty.insert(d);
            std::set<std::pair<Int, Int>> got;
            for (const auto& e : row.elements) got.insert({e.x, e.y});
            t.expect(expected_xy.count(d) && got == expected_xy.at(d),
                     "unexpected elements for discriminant " + std::to_string(d));
            if (!expected_complex.count(d)) continue;
            const C w{row.order.t / 2.0, std::sqrt(static_cast<double>(-d)) / 2.0};
            std::vector<bool> hit(expected_complex.at(d).size(), false);
            for (const auto& e : row.elements) {
                const C z = static_cast<double>(e.x) + static_cast<double>(e.y) * w;
                bool matched = false;
                for (std::size_t i = 0; i < hit.size(); ++i)
                    if (std::abs(z - expected_complex.at(d)[i]) < 1e-12) hit[i] = matched = true;
                t.expect(matched, "element not among the listed complex numbers");
            }
            t.expect(std::all_of(hit.begin(), hit.end(), [](bool b) { return b; }),
                     "listed complex number not found for discriminant " + std::to_string(d));
        }
        t.expect(nonempty == std::set<Int>{-8, -7, -4}, "nonempty rows are not exactly -4, -7, -8");
    });
}

ClaimResult claim_exceptional_triples(bool inject_fault)
{
    return guarded(2, "exceptional_triples",
                   "k=4,5,7 bundles with L in the named kernels have self-maps of every prime degree",
                   [inject_fault](Tally& t) {
        auto triples = exceptional_triples();
        if (inject_fault) {
            auto& bad = triples.front();
            bad.element = {bad.order, 1, 2};
            bad.conjugate_element = conjugate(bad.element);
        }
        int bundles = 0;
        for (const auto& o : kernel_oracles()) {
            int found = 0;
            for (Int v1 = 0; v1 < o.k; ++v1)
                for (Int v2 = 0; v2 < o.k; ++v2) {
                    if (!oracle_kills(o.m, o.k, v1, v2) || std::gcd(o.k, std::gcd(v1, v2)) != 1) continue;
                    ++found;
                    ++bundles;
                    const auto L = TorsionPoint::make(o.k, v1, v2);
                    const auto desc = EllipticBundleDescriptor::split_torsion(CurveModel::with_cm(o.order), L);
                    const auto scan = scan_primes(desc, 10000);
                    t.expect(scan.decisions.size() == 1229, "scan did not cover the 1229 primes below 10^4");
                    t.expect(scan.missing().empty(), "missing primes for L = " + str_point(L));
                    Verdict v;
                    try {
                        v = admits_all_degrees(desc, triples);
                    } catch (const std::exception& ex) {
                        t.expect(false, "classifier failed for L = " + str_point(L) + ": " + ex.what());
                        continue;
                    }
                    const auto* all = std::get_if<AllDegrees>(&v);
                    t.expect(all && all->certificate, "not AllDegrees for L = " + str_point(L));
                    if (!all || !all->certificate) continue;
                    std::set<Int> residues, units_mod_k;
                    for (const auto& w : all->certificate->residues) residues.insert(w.residue);
                    for (Int r = 1; r < o.k; ++r)
                        if (std::gcd(r, o.k) == 1) units_mod_k.insert(r);
                    t.expect(residues == units_mod_k, "certificate misses a residue class");
                    std::set<Int> prime_divisors, covered;
                    for (Int q = 2; q <= o.k; ++q)
                        if (o.k % q == 0 && is_prime(q)) prime_divisors.insert(q);
                    for (const auto& w : all->certificate->primes_dividing_k) covered.insert(w.p);
                    t.expect(prime_divisors == covered, "certificate misses a prime dividing k");
                }
            t.expect(found > 0, "no point of exact order k in an exceptional kernel");
        }
        t.note(std::to_string(bundles) + " bundles scanned to 10^4");
    });
}

ClaimResult claim_necessity_grid()
{
    return guarded(3, "necessity_grid",
                   "for k in 4..8 every other torsion bundle misses a prime <= 13",
                   [](Tally& t) {
        int missing_cases = 0, exceptional_cases = 0;
        for (const auto& curve : test_curves())
            for (Int k = 4; k <= 8; ++k)
                for (const auto& L : unit_orbit_representatives(curve, k)) {
                    const auto desc = EllipticBundleDescriptor::split_torsion(curve, L);
                    const auto v = admits_all_degrees(desc);
                    const std::string where = curve.name() + " L = " + str_point(L);
                    if (oracle_exceptional(curve, L)) {
                        ++exceptional_cases;
                        t.expect(std::holds_alternative<AllDegrees>(v), "exceptional not AllDegrees: " + where);
                        continue;
                    }
                    ++missing_cases;
                    const auto* mp = std::get_if<MissingPrimes>(&v);
                    t.expect(mp && !mp->examples.empty(), "not MissingPrimes: " + where);
                    if (!mp || mp->examples.empty()) continue;
                    const Int p = mp->examples.front();
                    t.expect(p <= 13, "smallest missing prime " + std::to_string(p) + " > 13: " + where);
                    t.expect(!prime_achievable(desc, p).achievable(), "named prime is achievable: " + where);
                }
        t.note(std::to_string(missing_cases) + " non-exceptional and " + std::to_string(exceptional_cases) +
               " exceptional orbit representatives");
    });
}

ClaimResult claim_small_k_universal()
{
    return guarded(4, "small_k_universal", "for k <= 3 every prime is a degree", [](Tally& t) {
        int bundles = 0;
        for (const auto& curve : test_curves())
            for (Int k = 1; k <= 3; ++k)
                for (const auto& L : unit_orbit_representatives(curve, k)) {
                    ++bundles;
                    const auto desc = EllipticBundleDescriptor::split_torsion(curve, L);
                    t.expect(scan_primes(desc, 10000).missing().empty(),
                             "missing primes on " + curve.name() + " L = " + str_point(L));
                }
        t.note(std::to_string(bundles) + " bundles scanned to 10^4");
    });
}

ClaimResult claim_atiyah_obstructions()
{
    return guarded(5, "atiyah_obstructions",
                   "no degree-two map on the odd Atiyah bundle; inert primes missing on the even one",
                   [](Tally& t) {
        t.expect(atiyah_deg2_search().empty(), "integral class of square 2 found");
        const auto desc = EllipticBundleDescriptor::of(CurveModel::with_cm({0, 1}), AtiyahA0{});
        const auto v = nonsplit_verdict(desc, 1000);
        const auto* inf = std::get_if<InfinitelyManyMissing>(&v);
        t.expect(inf != nullptr, "verdict is not InfinitelyManyMissing");
        std::vector<Int> oracle;
        for (Int p = 3; p <= 1000; p += 4)
            if (is_prime(p)) oracle.push_back(p);
        if (inf) t.expect(inf->listed_missing == oracle, "listed missing primes differ from p = 3 mod 4");
        const auto a1 = nonsplit_verdict(EllipticBundleDescriptor::of(CurveModel::no_cm(), AtiyahA1{}));
        const auto* mp = std::get_if<MissingPrimes>(&a1);
        t.expect(mp && std::count(mp->examples.begin(), mp->examples.end(), 2) == 1, "2 not missing on A1");
        t.note(std::to_string(oracle.size()) + " primes = 3 mod 4 below 1000");
    });
}

ClaimResult claim_toric_verdicts()
{
    return guarded(6, "toric_verdicts", "only P1 x P1 among toric surfaces has every degree", [](Tally& t) {
        t.expect(std::holds_alternative<AllDegrees>(toric_verdict(hirzebruch(0))), "P1xP1 not AllDegrees");
        t.expect(std::holds_alternative<SquaresOnly>(toric_verdict(projective_plane())), "P2 not SquaresOnly");
        for (Int n = 1; n <= 5; ++n)
            t.expect(std::holds_alternative<SquaresOnly>(toric_verdict(hirzebruch(n))),
                     "F_" + std::to_string(n) + " not SquaresOnly");

        std::mt19937_64 rng(0x5eed'70c1ULL);
        const auto noether = [&](const Fan& f) {
            const auto d = self_intersections(f);
            const Int sum = std::accumulate(d.begin(), d.end(), Int{0});
            t.expect(sum == 12 - 3 * static_cast<Int>(f.rays.size()), "sum of D_i^2 != 12 - 3 r");
        };
        for (int s = 0; s < 50; ++s) {
            const int start = std::uniform_int_distribution<int>(-1, 5)(rng);
            Fan fan = start < 0 ? projective_plane() : hirzebruch(start);
            const int depth = std::uniform_int_distribution<int>(2, 8)(rng);
            noether(fan);
            for (int d = 0; d < depth; ++d) {
                const auto i = std::uniform_int_distribution<std::size_t>(0, fan.rays.size() - 1)(rng);
                fan = blow_up(fan, i);
                noether(fan);
            }
            const auto v = toric_verdict(fan);
            const auto* fc = std::get_if<FiniteCandidatePrimes>(&v);
            t.expect(fc != nullptr, "blow-up sequence " + std::to_string(s) + " is " + verdict_name(v));
            if (!fc) continue;
            const auto d = self_intersections(fan);
            for (Int p : fc->candidates)
                t.expect(std::find(d.begin(), d.end(), -p) != d.end(), "candidate is not -D_i^2");
        }
    });
}

ClaimResult claim_splitting_oracles()
{
    return guarded(7, "splitting_oracles",
                   "primes are norms exactly when not inert; split density near 1/2; two Legendre routes agree",
                   [](Tally& t) {
        const auto primes = primes_up_to(100000);
        for (const auto& order : {OrderParams{1, 1}, OrderParams{0, 1}, OrderParams{1, 2}, OrderParams{0, 2}}) {
            Int split = 0;
            for (Int p : primes) {
                const auto s = split_type(order, p);
                if (s == SplitType::Split) ++split;
                const bool is_norm = is_norm_of_prime(order, p).has_value();
                if (is_norm != (s != SplitType::Inert)) {
                    std::ostringstream os;
                    os << "disc " << order.discriminant() << " p = " << p;
                    t.expect(false, os.str());
                } else {
                    t.expect(true, "");
                }
            }
            const double frac = static_cast<double>(split) / static_cast<double>(primes.size());
            t.expect(std::abs(frac - 0.5) <= 0.02, "split fraction " + std::to_string(frac));
        }
        for (Int p : primes_up_to(10000)) {
            if (p == 2) continue;
            for (Int a = -100; a <= 100; ++a)
                if (legendre_euler(a, p) != legendre_reciprocity(a, p))
                    t.expect(false, "legendre mismatch a=" + std::to_string(a) + " p=" + std::to_string(p));
            t.expect(true, "");
        }
    });
}

ClaimResult claim_group_condition()
{
    return guarded(8, "group_condition",
                   "Z/p x| (Z/p)^* realizes every residue by conjugation up to sign; Z/p only for p <= 3",
                   [](Tally& t) {
        std::vector<std::pair<std::string, CayleyGroup>> groups;
        for (Int p : {3, 5, 7, 11, 13}) {
            auto g = build_semidirect(p);
            t.expect(rho_bar_surjective(g, p).holds, "semidirect p=" + std::to_string(p) + " fails");
            groups.emplace_back("semidirect " + std::to_string(p), std::move(g));
        }
        for (Int p : {2, 3, 5, 7, 11, 13}) {
            auto g = cyclic_group(static_cast<int>(p));
            t.expect(rho_bar_surjective(g, p).holds == (p <= 3), "Z/" + std::to_string(p) + " wrong");
            groups.emplace_back("Z/" + std::to_string(p), std::move(g));
        }
        groups.emplace_back("A4", permutation_group({{1, 2, 0, 3}, {1, 0, 3, 2}}));
        groups.emplace_back("S4", permutation_group({{1, 0, 2, 3}, {1, 2, 3, 0}}));
        for (const auto& [name, g] : groups)
            for (Int p : {2, 3, 5, 7, 11, 13})
                for (const auto& c : find_cyclic_subgroups(g, p))
                    t.expect(rho_is_homomorphism(g, c, conjugation_rho(g, c)),
                             "rho not a homomorphism on " + name);
    });
}

ClaimResult claim_ns_bookkeeping()
{
    return guarded(9, "ns_bookkeeping", "f_* f^* = deg(f) Id on NS of a P1-bundle", [](Tally& t) {
        std::mt19937_64 rng(0xab0d'e9ULL);
        std::uniform_int_distribution<Int> deg(1, 30), ee(-50, 50);
        int realizable = 0;
        for (int i = 0; i < 1000; ++i) {
            const Int db = deg(rng), df = deg(rng), e = ee(rng);
            const auto f = EndoOnNS::from_degrees(db, df, e);
            const bool parity_ok = (e * (db - df)) % 2 == 0;
            t.expect(f.has_value() == parity_ok, "realizability does not match the parity of e(d_B - d_F)");
            if (!f) continue;
            ++realizable;
            const auto composite = f->pushforward() * f->pullback();
            t.expect(composite == NSMatrix{f->degree(), 0, 0, f->degree()}, "f_* f^* != deg Id");
            const NSClass F{0, 1, e}, H{1, 0, e};
            t.expect(f->pull(F) == db * F, "f^*F != d_B F");
            // f^*x . f^*y = deg(f) x.y
            for (const auto& [a, b] : {std::pair{H, H}, std::pair{H, F}, std::pair{F, F}})
                t.expect(intersect(f->pull(a), f->pull(b)) == f->degree() * intersect(a, b),
                         "pullback does not scale the intersection form");
        }
        t.note(std::to_string(realizable) + " of 1000 triples realizable");
    });
}

std::vector<ClaimResult> run_claims(const VerifyOptions& opts)
{
    return {claim_degree_two_table(),   claim_exceptional_triples(opts.inject_fault),
            claim_necessity_grid(),     claim_small_k_universal(),
            claim_atiyah_obstructions(), claim_toric_verdicts(),
            claim_splitting_oracles(),  claim_group_condition(),
            claim_ns_bookkeeping()};
}

}  // namespace selfmaps
