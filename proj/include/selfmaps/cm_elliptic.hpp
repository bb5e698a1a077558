#ifndef SELFMAPS_CM_ELLIPTIC_HPP
#define SELFMAPS_CM_ELLIPTIC_HPP

// Lattice model of elliptic curves C/<1, w>: endomorphisms act on the basis
// {1, w} by integer matrices, and E[k] = (Z/k)^2 in the basis {1/k, w/k}.
// Degree-zero line bundles are identified with points via Pic^0(E) = E, so
// the pullback by an endomorphism acts on them through its dual (the
// complex conjugate).

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "selfmaps/qorders.hpp"

namespace selfmaps {

/// Either a curve with complex multiplication by an order, or a curve whose
/// endomorphisms are the rational integers.
class CurveModel {
public:
    static CurveModel no_cm() { return CurveModel{}; }
    static CurveModel with_cm(const OrderParams& order) { return CurveModel{order}; }

    bool has_cm() const { return cm_.has_value(); }
    const OrderParams& cm_order() const;  // throws for NoCM

    /// Ring in which endomorphisms are written. For NoCM only elements
    /// (x, 0) ever occur and the matrix of (x, 0) is x*Id in any order, so
    /// Z[i] serves as the host.
    OrderParams arithmetic_order() const;

    std::string name() const;

    friend bool operator==(const CurveModel&, const CurveModel&) = default;

private:
    CurveModel() = default;
    explicit CurveModel(const OrderParams& o) : cm_(o) {}
    std::optional<OrderParams> cm_;
};

/// Row-major 2x2 integer matrix.
struct EndoMatrix {
    Int m11 = 1, m12 = 0, m21 = 0, m22 = 1;

    Int det() const { return m11 * m22 - m12 * m21; }
    EndoMatrix adjugate() const { return {m22, -m12, -m21, m11}; }
    EndoMatrix reduced(Int k) const;
    std::array<Int, 2> apply(Int v1, Int v2) const
    {
        return {m11 * v1 + m12 * v2, m21 * v1 + m22 * v2};
    }

    friend bool operator==(const EndoMatrix&, const EndoMatrix&) = default;
};

EndoMatrix operator*(const EndoMatrix& a, const EndoMatrix& b);

/// A class v in (Z/k)^2, coordinates kept reduced to [0, k).
struct TorsionPoint {
    Int k = 1;
    Int v1 = 0;
    Int v2 = 0;

    static TorsionPoint make(Int k, Int v1, Int v2);

    friend bool operator==(const TorsionPoint&, const TorsionPoint&) = default;
};

/// Matrix of multiplication by alpha on the basis {1, w}:
/// [[x, -n y], [y, x + t y]].
EndoMatrix rational_rep(const QuadElem& alpha);

std::vector<QuadElem> aut_group(const CurveModel& curve);

/// Endomorphisms of the given degree: elements_of_norm for CM curves,
/// (+-sqrt(m), 0) for NoCM curves.
std::vector<QuadElem> endomorphisms_of_degree(const CurveModel& curve, Int m);

EndoMatrix torsion_action(const QuadElem& alpha, Int k);

/// Exhaustive search of the k^2 classes.
std::vector<TorsionPoint> kernel_on_torsion(const QuadElem& alpha, Int k);

bool in_kernel(const QuadElem& alpha, const TorsionPoint& L);

QuadElem dual(const QuadElem& alpha);

Int exact_order(const TorsionPoint& L);

/// The m in Z/k with phi^* L = L^m, i.e. dual(phi) v = m v (mod k), if v is an
/// eigenvector. Throws std::invalid_argument if L does not have exact order k.
std::optional<Int> pullback_exponent(const QuadElem& phi, const TorsionPoint& L);

/// As above with phi itself acting instead of its dual. Exposed for tests.
std::optional<Int> pushforward_exponent(const QuadElem& phi, const TorsionPoint& L);

/// All points of (Z/k)^2 of exact order k, lexicographic by (v1, v2).
std::vector<TorsionPoint> points_of_exact_order(Int k);

/// One representative per orbit of the automorphism group acting on the
/// points of exact order k (the lexicographically smallest in each orbit).
std::vector<TorsionPoint> unit_orbit_representatives(const CurveModel& curve, Int k);

}  // namespace selfmaps

#endif
