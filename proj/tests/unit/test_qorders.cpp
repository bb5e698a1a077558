#include <doctest.h>

#include <numeric>
#include <random>
#include <set>

#include "selfmaps/qorders.hpp"

using namespace selfmaps;

namespace {

const OrderParams gauss{0, 1};
const OrderParams eis{1, 1};
const OrderParams sqrt2{0, 2};
const OrderParams disc7{1, 2};

std::set<std::pair<Int, Int>> coords(const std::vector<QuadElem>& xs)
{
    std::set<std::pair<Int, Int>> s;
    for (const auto& e : xs) s.insert({e.x, e.y});
    return s;
}

}  // namespace

TEST_CASE("order parameters are validated")
{
    CHECK(OrderParams::make(1, 2).discriminant() == -7);
    CHECK(OrderParams::make(0, 1).discriminant() == -4);
    CHECK_THROWS_AS(OrderParams::make(2, 1), std::invalid_argument);
    CHECK_THROWS_AS(OrderParams::make(0, 0), std::invalid_argument);
    CHECK_THROWS_AS(OrderParams::make(1, -3), std::invalid_argument);
}

TEST_CASE("norm")
{
    CHECK(norm({gauss, 1, 1}) == 2);
    CHECK(norm({eis, 1, 0}) == 1);
    CHECK(norm({disc7, 1, 1}) == 4);
    CHECK(norm({disc7, 0, 0}) == 0);
}

TEST_CASE("conjugate")
{
    CHECK(conjugate({gauss, 0, 1}) == QuadElem{gauss, 0, -1});
    CHECK(conjugate({disc7, -1, 1}) == QuadElem{disc7, 0, -1});
    CHECK(conjugate({eis, 5, 0}) == QuadElem{eis, 5, 0});
}

TEST_CASE("units")
{
    CHECK(coords(units(gauss)) == std::set<std::pair<Int, Int>>{{1, 0}, {-1, 0}, {0, 1}, {0, -1}});
    CHECK(units(eis).size() == 6);
    CHECK(coords(units(sqrt2)) == std::set<std::pair<Int, Int>>{{1, 0}, {-1, 0}});
    for (const auto& u : units(eis)) CHECK(norm(u) == 1);
}

TEST_CASE("elements of a given norm")
{
    CHECK(coords(elements_of_norm(gauss, 2)) ==
          std::set<std::pair<Int, Int>>{{1, 1}, {1, -1}, {-1, 1}, {-1, -1}});
    CHECK(elements_of_norm(eis, 2).empty());
    const auto seven = elements_of_norm(disc7, 7);
    CHECK(coords(seven).count({-1, 2}) == 1);

    SUBCASE("sorted by (y, x)")
    {
        const auto xs = elements_of_norm(gauss, 25);
        CHECK(std::is_sorted(xs.begin(), xs.end(), lex_less));
        CHECK(xs.size() == 12);
    }
    SUBCASE("matches brute force")
    {
        for (const auto& o : {gauss, eis, sqrt2, disc7, OrderParams{1, 5}})
            for (Int m = 1; m <= 60; ++m) {
                std::set<std::pair<Int, Int>> brute;
                for (Int x = -20; x <= 20; ++x)
                    for (Int y = -20; y <= 20; ++y)
                        if (norm({o, x, y}) == m) brute.insert({x, y});
                CHECK(coords(elements_of_norm(o, m)) == brute);
            }
    }
}

TEST_CASE("degree two table")
{
    const auto rows = degree_two_table(10);
    CHECK(rows.size() == 20);
    std::set<Int> nonempty;
    for (const auto& r : rows)
        if (!r.elements.empty()) nonempty.insert(r.order.discriminant());
    CHECK(nonempty == std::set<Int>{-8, -7, -4});

    for (const auto& r : rows) {
        if (r.order == eis) CHECK(r.elements.empty());
        if (r.order == disc7)
            CHECK(coords(r.elements) == std::set<std::pair<Int, Int>>{{0, 1}, {-1, 1}, {0, -1}, {1, -1}});
        if (r.order == sqrt2) CHECK(coords(r.elements) == std::set<std::pair<Int, Int>>{{0, 1}, {0, -1}});
    }

    std::set<Int> small;
    for (const auto& r : degree_two_table(2))
        if (!r.elements.empty()) small.insert(r.order.discriminant());
    CHECK(small == nonempty);
    CHECK_THROWS(degree_two_table(1));
}

TEST_CASE("legendre symbol")
{
    CHECK(legendre(-1, 5) == 1);
    CHECK(legendre(2, 7) == 1);
    CHECK(legendre(14, 7) == 0);
    CHECK(legendre(0, 11) == 0);

    for (Int p : primes_up_to(200)) {
        if (p == 2) continue;
        std::set<Int> squares;
        for (Int x = 1; x < p; ++x) squares.insert(x * x % p);
        for (Int a = -50; a <= 50; ++a) {
            const Int r = mod_floor(a, p);
            const int expected = r == 0 ? 0 : (squares.count(r) ? 1 : -1);
            CHECK(legendre_euler(a, p) == expected);
            CHECK(legendre_reciprocity(a, p) == expected);
        }
    }
}

TEST_CASE("splitting")
{
    CHECK(split_type(gauss, 5) == SplitType::Split);
    CHECK(split_type(gauss, 2) == SplitType::Ramified);
    CHECK(split_type(gauss, 3) == SplitType::Inert);
    CHECK(split_type(disc7, 2) == SplitType::Split);
    CHECK(split_type(sqrt2, 3) == SplitType::Split);
    CHECK(split_type(eis, 2) == SplitType::Inert);

    const auto w5 = is_norm_of_prime(gauss, 5);
    REQUIRE(w5);
    CHECK(norm(*w5) == 5);
    CHECK_FALSE(is_norm_of_prime(gauss, 3));
    const auto w7 = is_norm_of_prime(disc7, 7);
    REQUIRE(w7);
    CHECK(*w7 == QuadElem{disc7, -1, 2});
}

TEST_CASE("split density")
{
    const auto r = split_density_report(gauss, 100000);
    CHECK(std::abs(r.split_fraction - 0.5) <= 0.02);
    CHECK(std::abs(split_density_report(disc7, 100000).split_fraction - 0.5) <= 0.02);
    for (const auto& o : {gauss, eis, sqrt2, disc7}) {
        const auto s = split_density_report(o, 100);
        CHECK(s.split_count + s.inert_count + s.ramified_count == 25);
    }
    CHECK_THROWS(split_density_report(gauss, 99));
    CHECK(count_primes_in_class(100000, 40, 1) > 0);
}

TEST_CASE("euler totient")
{
    CHECK(euler_totient(4) == 2);
    CHECK(euler_totient(7) == 6);
    CHECK(euler_totient(1) == 1);
    for (Int k = 1; k <= 300; ++k) {
        Int brute = 0;
        for (Int j = 1; j <= k; ++j) brute += std::gcd(j, k) == 1;
        CHECK(euler_totient(k) == brute);
    }
}

TEST_CASE("primes")
{
    CHECK(primes_up_to(1).empty());
    CHECK(primes_up_to(100).size() == 25);
    CHECK(primes_up_to(10000).size() == 1229);
    CHECK(pow_mod(3, 100, 7) == 4);
    CHECK(pow_mod(2, 62, 1000000007) == 145586002);
}

TEST_CASE("norm is multiplicative and conjugation is a ring map")
{
    std::mt19937_64 rng(42);
    std::uniform_int_distribution<Int> c(-60, 60);
    for (const auto& o : {gauss, eis, sqrt2, disc7, OrderParams{1, 17}}) {
        for (int i = 0; i < 300; ++i) {
            const QuadElem a{o, c(rng), c(rng)}, b{o, c(rng), c(rng)};
            CHECK(norm(a * b) == norm(a) * norm(b));
            CHECK(conjugate(a * b) == conjugate(a) * conjugate(b));
            CHECK(conjugate(a + b) == conjugate(a) + conjugate(b));
            CHECK(conjugate(conjugate(a)) == a);
            const auto aa = a * conjugate(a);
            CHECK(aa == QuadElem::rational(o, norm(a)));
        }
    }
}
