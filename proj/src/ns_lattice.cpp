#include "selfmaps/ns_lattice.hpp"

#include <stdexcept>

namespace selfmaps {

NSClass operator+(const NSClass& a, const NSClass& b)
{
    if (a.e != b.e) throw std::invalid_argument("NS classes on different bundles");
    return {a.h + b.h, a.f + b.f, a.e};
}

NSClass operator*(Int s, const NSClass& c) { return {s * c.h, s * c.f, c.e}; }

Int intersect(const NSClass& c1, const NSClass& c2)
{
    if (c1.e != c2.e) throw std::invalid_argument("intersect: mismatched bundle degree e");
    return c1.h * c2.h * c1.e + c1.h * c2.f + c1.f * c2.h;
}

NSClass relative_canonical(Int e) { return {-2, e, e}; }

NSClass isotropic_section_class(Int e) { return {2, -e, e}; }

RamificationClass ramification_class(Int degree, Int e)
{
    if (degree < 2) throw std::invalid_argument("ramification_class: degree must be at least 2");
    RamificationClass r;
    r.cls = (1 - degree) * relative_canonical(e);
    r.r2_zero = intersect(r.cls, r.cls) == 0;
    return r;
}

NSMatrix operator*(const NSMatrix& a, const NSMatrix& b)
{
    return {a.a11 * b.a11 + a.a12 * b.a21, a.a11 * b.a12 + a.a12 * b.a22,
            a.a21 * b.a11 + a.a22 * b.a21, a.a21 * b.a12 + a.a22 * b.a22};
}

std::optional<EndoOnNS> EndoOnNS::from_degrees(Int base_degree, Int fiber_degree, Int e)
{
    if (base_degree < 1 || fiber_degree < 1)
        throw std::invalid_argument("EndoOnNS: degrees must be positive");
    // (d_F H + b F)^2 = d_F^2 e + 2 d_F b = d_B d_F e
    const Int twice_b = e * (base_degree - fiber_degree);
    if (twice_b % 2 != 0) return std::nullopt;
    const NSMatrix m{fiber_degree, 0, twice_b / 2, base_degree};
    return EndoOnNS(base_degree, fiber_degree, e, m);
}

NSMatrix EndoOnNS::pushforward() const
{
    const Int d = degree();
    const Int det = pullback_.det();
    if (det == 0) throw std::logic_error("pullback is singular");
    const NSMatrix adj{pullback_.a22, -pullback_.a12, -pullback_.a21, pullback_.a11};
    NSMatrix out{};
    Int* dst[] = {&out.a11, &out.a12, &out.a21, &out.a22};
    const Int src[] = {adj.a11, adj.a12, adj.a21, adj.a22};
    for (int i = 0; i < 4; ++i) {
        if ((d * src[i]) % det != 0) throw std::logic_error("pushforward is not integral");
        *dst[i] = d * src[i] / det;
    }
    return out;
}

SquareDegreeCertificate square_degree_certificate(Int c2, Int search)
{
    if (c2 >= 0)
        throw std::invalid_argument("square_degree_certificate: self-intersection must be negative");
    SquareDegreeCertificate cert;
    cert.self_intersection = c2;
    for (Int a1 = 1; a1 <= search; ++a1)
        for (Int a2 = 1; a2 <= search; ++a2) {
            ++cert.pairs_checked;
            if (a1 != a2 && a1 * c2 == a2 * c2) ++cert.off_diagonal_solutions;
        }
    // (a1 - a2) C^2 = 0 with C^2 != 0
    cert.a1_equals_a2 = cert.off_diagonal_solutions == 0;
    return cert;
}

std::vector<AtiyahSolution> atiyah_deg2_search(Int radius)
{
    constexpr Int e = 1;  // S^2 = 1
    std::vector<AtiyahSolution> out;
    for (Int a : {Int{1}, Int{2}})
        for (Int b = -radius; b <= radius; ++b) {
            const NSClass c{a, b, e};
            const Int sq = intersect(c, c);
            if (sq == 2) out.push_back({a, b, sq});
        }
    return out;
}

std::set<Int> toric_prime_candidates(const std::vector<Int>& negatives)
{
    if (negatives.empty()) throw std::invalid_argument("toric_prime_candidates: empty list");
    std::set<Int> out;
    for (Int c2 : negatives) {
        if (c2 >= 0) throw std::invalid_argument("toric_prime_candidates: entries must be negative");
        if (is_prime(-c2)) out.insert(-c2);
    }
    return out;
}

}  // namespace selfmaps
