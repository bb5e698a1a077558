#ifndef SELFMAPS_NS_LATTICE_HPP
#define SELFMAPS_NS_LATTICE_HPP

// Neron-Severi bookkeeping on a P^1-bundle X = P(E) over a curve, E of
// degree e. NS(X) = Z H + Z F with H^2 = e, H.F = 1, F^2 = 0.
// With this pairing K_{X/B} = -2H + eF, which has square zero.

#include <optional>
#include <set>
#include <vector>

#include "selfmaps/qorders.hpp"

namespace selfmaps {

struct NSClass {
    Int h = 0;  // coefficient of H
    Int f = 0;  // coefficient of F
    Int e = 0;  // degree of the bundle

    friend bool operator==(const NSClass&, const NSClass&) = default;
};

NSClass operator+(const NSClass& a, const NSClass& b);
NSClass operator*(Int s, const NSClass& c);

/// (aH + bF).(cH + dF) = ac e + ad + bc. Throws if the bundle degrees differ.
Int intersect(const NSClass& c1, const NSClass& c2);

NSClass relative_canonical(Int e);

/// Primitive integral class of square zero that is not a multiple of F.
NSClass isotropic_section_class(Int e);

struct RamificationClass {
    NSClass cls;
    bool r2_zero = false;
};

/// (1 - degree) K_{X/B} for a self-map inducing an automorphism of the base.
/// Throws for degree < 2.
RamificationClass ramification_class(Int degree, Int e);

/// Integer 2x2 matrix acting on coordinates (h, f); columns are the images of
/// H and F.
struct NSMatrix {
    Int a11 = 1, a12 = 0, a21 = 0, a22 = 1;

    Int det() const { return a11 * a22 - a12 * a21; }
    NSClass apply(const NSClass& c) const
    {
        return {a11 * c.h + a12 * c.f, a21 * c.h + a22 * c.f, c.e};
    }
    friend bool operator==(const NSMatrix&, const NSMatrix&) = default;
};

NSMatrix operator*(const NSMatrix& a, const NSMatrix& b);

/// Action on NS(X) of a self-map with the given base and fibre degrees.
class EndoOnNS {
public:
    /// f^*F = d_B F and f^*H = d_F H + b F, where b is fixed by
    /// (f^*H)^2 = deg(f) H^2. Returns nullopt when b = e(d_B - d_F)/2 is not
    /// an integer: no self-map with these numerical data exists.
    static std::optional<EndoOnNS> from_degrees(Int base_degree, Int fiber_degree, Int e);

    Int degree() const { return base_degree_ * fiber_degree_; }
    Int base_degree() const { return base_degree_; }
    Int fiber_degree() const { return fiber_degree_; }
    Int e() const { return e_; }

    const NSMatrix& pullback() const { return pullback_; }
    /// degree * pullback^{-1}; throws std::logic_error if not integral.
    NSMatrix pushforward() const;

    NSClass pull(const NSClass& c) const { return pullback_.apply(c); }
    NSClass push(const NSClass& c) const { return pushforward().apply(c); }

private:
    EndoOnNS(Int db, Int df, Int e, NSMatrix m)
        : base_degree_(db), fiber_degree_(df), e_(e), pullback_(m)
    {
    }

    Int base_degree_;
    Int fiber_degree_;
    Int e_;
    NSMatrix pullback_;
};

/// Record of the projection-formula argument for a surface with a unique
/// negative curve C: f^*C = a1 C and f_*C = a2 C give a1 C^2 = a2 C^2.
struct SquareDegreeCertificate {
    Int self_intersection = 0;
    bool a1_equals_a2 = false;
    Int pairs_checked = 0;       // pairs (a1, a2) in [1, search]^2 examined
    Int off_diagonal_solutions = 0;
};

/// Throws std::invalid_argument unless negative_self_intersection < 0.
SquareDegreeCertificate square_degree_certificate(Int negative_self_intersection, Int search = 64);

struct AtiyahSolution {
    Int a = 0;
    Int b = 0;
    Int square = 0;
};

/// Integral classes f^*S = aH + bF on the e = 1 bundle with a in {1, 2}
/// (the possible values of F.f^*S) and |b| <= radius whose square equals 2.
std::vector<AtiyahSolution> atiyah_deg2_search(Int radius = 100);

/// Primes p = -C^2 over the listed negative self-intersections.
std::set<Int> toric_prime_candidates(const std::vector<Int>& negatives);

}  // namespace selfmaps

#endif
