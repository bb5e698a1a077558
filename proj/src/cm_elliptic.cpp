#include "selfmaps/cm_elliptic.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace selfmaps {

namespace {

void require_modulus(Int k)
{
    if (k < 1) throw std::invalid_argument("torsion modulus k must be positive");
}

std::optional<Int> scalar_on(const EndoMatrix& action, const TorsionPoint& L)
{
    const auto image = action.reduced(L.k).apply(L.v1, L.v2);
    for (Int m = 0; m < L.k; ++m)
        if (mod_floor(image[0] - m * L.v1, L.k) == 0 && mod_floor(image[1] - m * L.v2, L.k) == 0)
            return m;
    return std::nullopt;
}

void require_exact_order(const TorsionPoint& L)
{
    if (exact_order(L) != L.k) {
        std::ostringstream msg;
        msg << "torsion point (" << L.v1 << "," << L.v2 << ") has exact order "
            << exact_order(L) << ", not k=" << L.k;
        throw std::invalid_argument(msg.str());
    }
}

}  // namespace

const OrderParams& CurveModel::cm_order() const
{
    if (!cm_) throw std::logic_error("curve has no complex multiplication");
    return *cm_;
}

OrderParams CurveModel::arithmetic_order() const
{
    return cm_ ? *cm_ : OrderParams{0, 1};
}

std::string CurveModel::name() const
{
    if (!cm_) return "nocm";
    std::ostringstream os;
    os << "cm(t=" << cm_->t << ",n=" << cm_->n << ")";
    return os.str();
}

EndoMatrix EndoMatrix::reduced(Int k) const
{
    require_modulus(k);
    return {mod_floor(m11, k), mod_floor(m12, k), mod_floor(m21, k), mod_floor(m22, k)};
}

EndoMatrix operator*(const EndoMatrix& a, const EndoMatrix& b)
{
    return {a.m11 * b.m11 + a.m12 * b.m21, a.m11 * b.m12 + a.m12 * b.m22,
            a.m21 * b.m11 + a.m22 * b.m21, a.m21 * b.m12 + a.m22 * b.m22};
}

TorsionPoint TorsionPoint::make(Int k, Int v1, Int v2)
{
    require_modulus(k);
    return {k, mod_floor(v1, k), mod_floor(v2, k)};
}

EndoMatrix rational_rep(const QuadElem& a)
{
    // columns: alpha*1 = x + y w,  alpha*w = -n y + (x + t y) w
    return {a.x, -a.order.n * a.y, a.y, a.x + a.order.t * a.y};
}

std::vector<QuadElem> aut_group(const CurveModel& curve)
{
    const auto order = curve.arithmetic_order();
    if (!curve.has_cm()) return {QuadElem::rational(order, -1), QuadElem::rational(order, 1)};
    return units(order);
}

std::vector<QuadElem> endomorphisms_of_degree(const CurveModel& curve, Int m)
{
    if (curve.has_cm()) return elements_of_norm(curve.cm_order(), m);
    std::vector<QuadElem> out;
    const auto order = curve.arithmetic_order();
    for (Int x = 0; x * x <= m; ++x)
        if (x * x == m) {
            if (x == 0) return {QuadElem::rational(order, 0)};
            out = {QuadElem::rational(order, -x), QuadElem::rational(order, x)};
        }
    return out;
}

EndoMatrix torsion_action(const QuadElem& alpha, Int k)
{
    return rational_rep(alpha).reduced(k);
}

std::vector<TorsionPoint> kernel_on_torsion(const QuadElem& alpha, Int k)
{
    const auto action = torsion_action(alpha, k);
    std::vector<TorsionPoint> out;
    for (Int v1 = 0; v1 < k; ++v1)
        for (Int v2 = 0; v2 < k; ++v2) {
            const auto w = action.apply(v1, v2);
            if (w[0] % k == 0 && w[1] % k == 0) out.push_back({k, v1, v2});
        }
    return out;
}

bool in_kernel(const QuadElem& alpha, const TorsionPoint& L)
{
    const auto w = torsion_action(alpha, L.k).apply(L.v1, L.v2);
    return w[0] % L.k == 0 && w[1] % L.k == 0;
}

QuadElem dual(const QuadElem& alpha) { return conjugate(alpha); }

Int exact_order(const TorsionPoint& L)
{
    require_modulus(L.k);
    return L.k / std::gcd(L.k, std::gcd(L.v1, L.v2));
}

std::optional<Int> pullback_exponent(const QuadElem& phi, const TorsionPoint& L)
{
    require_exact_order(L);
    return scalar_on(rational_rep(dual(phi)), L);
}

std::optional<Int> pushforward_exponent(const QuadElem& phi, const TorsionPoint& L)
{
    require_exact_order(L);
    return scalar_on(rational_rep(phi), L);
}

std::vector<TorsionPoint> points_of_exact_order(Int k)
{
    require_modulus(k);
    std::vector<TorsionPoint> out;
    for (Int v1 = 0; v1 < k; ++v1)
        for (Int v2 = 0; v2 < k; ++v2) {
            TorsionPoint L{k, v1, v2};
            if (exact_order(L) == k) out.push_back(L);
        }
    return out;
}

std::vector<TorsionPoint> unit_orbit_representatives(const CurveModel& curve, Int k)
{
    const auto auts = aut_group(curve);
    std::set<std::pair<Int, Int>> seen;
    std::vector<TorsionPoint> reps;
    for (const auto& L : points_of_exact_order(k)) {
        if (seen.count({L.v1, L.v2})) continue;
        reps.push_back(L);
        for (const auto& u : auts) {
            const auto w = torsion_action(u, k).apply(L.v1, L.v2);
            seen.insert({mod_floor(w[0], k), mod_floor(w[1], k)});
        }
    }
    return reps;
}

}  // namespace selfmaps
