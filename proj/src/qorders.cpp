#include "selfmaps/qorders.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace selfmaps {

namespace {

Int isqrt(Int v)
{
    if (v < 0) return -1;
    auto r = static_cast<Int>(std::sqrt(static_cast<long double>(v)));
    while (r * r > v) --r;
    while ((r + 1) * (r + 1) <= v) ++r;
    return r;
}

void require_same_order(const QuadElem& a, const QuadElem& b)
{
    if (!(a.order == b.order))
        throw std::invalid_argument("quadratic elements from different orders");
}

void require_odd_prime(Int p)
{
    if (p < 3 || p % 2 == 0)
        throw std::invalid_argument("legendre: modulus must be an odd prime");
    assert(is_prime(p));
}

// (q/p) for distinct odd primes q < p, by reciprocity.
int odd_prime_symbol(Int q, Int p)
{
    const int flip = (p % 4 == 3 && q % 4 == 3) ? -1 : 1;
    return flip * legendre_reciprocity(p % q, q);
}

}  // namespace

OrderParams OrderParams::make(int t, Int n)
{
    if (t != 0 && t != 1)
        throw std::invalid_argument("order parameter t must be 0 or 1");
    if (n < 1)
        throw std::invalid_argument("order parameter n must be positive");
    return OrderParams{t, n};
}

QuadElem operator+(const QuadElem& a, const QuadElem& b)
{
    require_same_order(a, b);
    return {a.order, a.x + b.x, a.y + b.y};
}

QuadElem operator-(const QuadElem& a, const QuadElem& b)
{
    require_same_order(a, b);
    return {a.order, a.x - b.x, a.y - b.y};
}

QuadElem operator-(const QuadElem& a) { return {a.order, -a.x, -a.y}; }

QuadElem operator*(const QuadElem& a, const QuadElem& b)
{
    require_same_order(a, b);
    const Int t = a.order.t;
    const Int n = a.order.n;
    // (x1 + y1 w)(x2 + y2 w) with w^2 = t w - n
    const Int ww = a.y * b.y;
    return {a.order, a.x * b.x - n * ww, a.x * b.y + a.y * b.x + t * ww};
}

std::ostream& operator<<(std::ostream& os, const QuadElem& e)
{
    return os << "(" << e.x << "," << e.y << ")";
}

std::ostream& operator<<(std::ostream& os, const OrderParams& o)
{
    return os << "(t=" << o.t << ",n=" << o.n << ")";
}

bool lex_less(const QuadElem& a, const QuadElem& b)
{
    if (a.y != b.y) return a.y < b.y;
    return a.x < b.x;
}

Int norm(const QuadElem& e)
{
    return e.x * e.x + e.order.t * e.x * e.y + e.order.n * e.y * e.y;
}

QuadElem conjugate(const QuadElem& e)
{
    return {e.order, e.x + e.order.t * e.y, -e.y};
}

std::vector<QuadElem> units(const OrderParams& order)
{
    return elements_of_norm(order, 1);
}

std::vector<QuadElem> elements_of_norm(const OrderParams& order, Int m)
{
    std::vector<QuadElem> out;
    if (m < 0) return out;
    if (m == 0) {
        out.push_back({order, 0, 0});
        return out;
    }
    const Int abs_d = -order.discriminant();
    // 4m = (2x + t y)^2 + |D| y^2
    const Int y_max = isqrt(4 * m / abs_d);
    for (Int y = -y_max; y <= y_max; ++y) {
        const Int disc = 4 * m - abs_d * y * y;
        const Int s = isqrt(disc);
        if (s < 0 || s * s != disc) continue;
        for (Int root : {-s, s}) {
            const Int twice_x = root - order.t * y;
            if (twice_x % 2 != 0) continue;
            QuadElem e{order, twice_x / 2, y};
            if (norm(e) == m) out.push_back(e);
            if (s == 0) break;
        }
    }
    std::sort(out.begin(), out.end(), lex_less);
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<DegreeTwoRow> degree_two_table(Int n_max)
{
    if (n_max < 2)
        throw std::invalid_argument("degree_two_table: n_max must be at least 2");
    std::vector<DegreeTwoRow> rows;
    for (Int n = 1; n <= n_max; ++n)
        for (int t = 0; t <= 1; ++t) {
            const auto order = OrderParams::make(t, n);
            rows.push_back({order, elements_of_norm(order, 2)});
        }
    return rows;
}

bool is_prime(Int n)
{
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0 || n % 3 == 0) return false;
    for (Int d = 5; d * d <= n; d += 6)
        if (n % d == 0 || n % (d + 2) == 0) return false;
    return true;
}

std::vector<Int> primes_up_to(Int bound)
{
    std::vector<Int> primes;
    if (bound < 2) return primes;
    std::vector<bool> composite(static_cast<std::size_t>(bound) + 1, false);
    for (Int i = 2; i <= bound; ++i) {
        if (composite[i]) continue;
        primes.push_back(i);
        for (Int j = i * i; j <= bound; j += i) composite[j] = true;
    }
    return primes;
}

Int mod_floor(Int a, Int m)
{
    const Int r = a % m;
    return r < 0 ? r + m : r;
}

Int pow_mod(Int base, Int exp, Int mod)
{
    __extension__ using Wide = __int128;
    Wide result = 1 % mod;
    Wide b = mod_floor(base, mod);
    while (exp > 0) {
        if (exp & 1) result = result * b % mod;
        b = b * b % mod;
        exp >>= 1;
    }
    return static_cast<Int>(result);
}

Int euler_totient(Int k)
{
    if (k < 1) throw std::invalid_argument("euler_totient: k must be positive");
    Int result = k;
    Int rest = k;
    for (Int q = 2; q * q <= rest; ++q) {
        if (rest % q != 0) continue;
        while (rest % q == 0) rest /= q;
        result -= result / q;
    }
    if (rest > 1) result -= result / rest;
    return result;
}

int legendre(Int a, Int p) { return legendre_euler(a, p); }

int legendre_euler(Int a, Int p)
{
    require_odd_prime(p);
    const Int r = pow_mod(a, (p - 1) / 2, p);
    if (r == 0) return 0;
    return r == 1 ? 1 : -1;
}

int legendre_reciprocity(Int a, Int p)
{
    require_odd_prime(p);
    int sign = 1;
    if (a < 0) {
        a = -a;
        if (p % 4 == 3) sign = -sign;  // (-1/p)
    }
    a %= p;
    if (a == 0) return 0;
    while (a % 2 == 0) {
        a /= 2;
        if (p % 8 == 3 || p % 8 == 5) sign = -sign;  // (2/p)
    }
    for (Int q = 3; q * q <= a; q += 2)
        while (a % q == 0) {
            a /= q;
            sign *= odd_prime_symbol(q, p);
        }
    if (a > 1) sign *= odd_prime_symbol(a, p);
    return sign;
}

std::string to_string(SplitType s)
{
    switch (s) {
    case SplitType::Split: return "split";
    case SplitType::Inert: return "inert";
    case SplitType::Ramified: return "ramified";
    }
    return "?";
}

SplitType split_type(const OrderParams& order, Int p)
{
    if (p < 2) throw std::invalid_argument("split_type: p must be prime");
    const Int d = order.discriminant();
    if (d % p == 0) return SplitType::Ramified;
    if (p == 2)
        return mod_floor(d, 8) == 1 ? SplitType::Split : SplitType::Inert;
    return legendre(d, p) == 1 ? SplitType::Split : SplitType::Inert;
}

std::optional<QuadElem> is_norm_of_prime(const OrderParams& order, Int p)
{
    const auto found = elements_of_norm(order, p);
    if (found.empty()) return std::nullopt;
    const auto up = std::find_if(found.begin(), found.end(), [](const QuadElem& e) { return e.y > 0; });
    return up != found.end() ? *up : found.front();
}

SplitDensityReport split_density_report(const OrderParams& order, Int bound)
{
    if (bound < 100)
        throw std::invalid_argument("split_density_report: bound must be at least 100");
    SplitDensityReport r;
    for (Int p : primes_up_to(bound)) {
        switch (split_type(order, p)) {
        case SplitType::Split: ++r.split_count; break;
        case SplitType::Inert: ++r.inert_count; break;
        case SplitType::Ramified: ++r.ramified_count; break;
        }
    }
    const Int total = r.split_count + r.inert_count + r.ramified_count;
    r.split_fraction = static_cast<double>(r.split_count) / static_cast<double>(total);
    return r;
}

Int count_primes_in_class(Int bound, Int modulus, Int residue)
{
    if (modulus < 1) throw std::invalid_argument("modulus must be positive");
    const Int target = mod_floor(residue, modulus);
    Int count = 0;
    for (Int p : primes_up_to(bound))
        if (p % modulus == target) ++count;
    return count;
}

}  // namespace selfmaps
