#ifndef SELFMAPS_QORDERS_HPP
#define SELFMAPS_QORDERS_HPP

// Exact arithmetic in imaginary quadratic orders Z[w], w^2 = t*w - n.

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace selfmaps {

using Int = std::int64_t;

/// The order Z[w] with w^2 = t*w - n, t in {0,1}, n >= 1.
///
/// Parameterizing by (t, n) keeps the basis {1, w} canonical, so matrices of
/// endomorphisms and coordinates of torsion points are unambiguous.
struct OrderParams {
    int t = 0;
    Int n = 1;

    /// Throws std::invalid_argument unless t in {0,1} and n >= 1.
    static OrderParams make(int t, Int n);

    Int discriminant() const { return Int(t) * t - 4 * n; }

    friend bool operator==(const OrderParams&, const OrderParams&) = default;
};

/// Element x + y*w of an order.
struct QuadElem {
    OrderParams order;
    Int x = 0;
    Int y = 0;

    static QuadElem rational(const OrderParams& o, Int x) { return {o, x, 0}; }

    friend bool operator==(const QuadElem&, const QuadElem&) = default;
};

QuadElem operator+(const QuadElem& a, const QuadElem& b);
QuadElem operator-(const QuadElem& a, const QuadElem& b);
QuadElem operator-(const QuadElem& a);
QuadElem operator*(const QuadElem& a, const QuadElem& b);
std::ostream& operator<<(std::ostream& os, const QuadElem& e);
std::ostream& operator<<(std::ostream& os, const OrderParams& o);

/// Lexicographic by (y, x); the order used for every list of elements.
bool lex_less(const QuadElem& a, const QuadElem& b);

/// x^2 + t*x*y + n*y^2.
Int norm(const QuadElem& e);

/// x + y*w  ->  (x + t*y) - y*w.
QuadElem conjugate(const QuadElem& e);

std::vector<QuadElem> units(const OrderParams& order);

/// All elements of norm m, sorted by (y, x). Exhaustive search over
/// |y| <= sqrt(4m/|D|).
std::vector<QuadElem> elements_of_norm(const OrderParams& order, Int m);

struct DegreeTwoRow {
    OrderParams order;
    std::vector<QuadElem> elements;
};

/// For every order with t in {0,1}, n <= n_max, the elements of norm 2.
std::vector<DegreeTwoRow> degree_two_table(Int n_max);

// -- primes and residues ----------------------------------------------------

bool is_prime(Int n);
std::vector<Int> primes_up_to(Int bound);
Int pow_mod(Int base, Int exp, Int mod);
Int mod_floor(Int a, Int m);
Int euler_totient(Int k);

/// Legendre symbol (a/p) for an odd prime p. Computed by Euler's criterion.
int legendre(Int a, Int p);
int legendre_euler(Int a, Int p);
/// Same symbol through factorization of a, reciprocity and the supplementary
/// laws for -1 and 2. Kept independent of legendre_euler.
int legendre_reciprocity(Int a, Int p);

enum class SplitType { Split, Inert, Ramified };
std::string to_string(SplitType s);

SplitType split_type(const OrderParams& order, Int p);

/// A witness of norm p, if one exists: the first in (y, x) order with y > 0.
std::optional<QuadElem> is_norm_of_prime(const OrderParams& order, Int p);

struct SplitDensityReport {
    Int split_count = 0;
    Int inert_count = 0;
    Int ramified_count = 0;
    double split_fraction = 0.0;
};

/// Requires bound >= 100.
SplitDensityReport split_density_report(const OrderParams& order, Int bound);

/// Number of primes p <= bound with p = residue (mod modulus).
Int count_primes_in_class(Int bound, Int modulus, Int residue);

}  // namespace selfmaps

#endif
