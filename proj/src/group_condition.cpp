#include "selfmaps/group_condition.hpp"

#include <algorithm>
#include <istream>
#include <set>
#include <sstream>
#include <string>

namespace selfmaps {

namespace {

[[noreturn]] void fail(const std::string& what) { throw GroupError("invalid group table: " + what); }

void require_prime(Int p)
{
    if (!is_prime(p)) throw std::invalid_argument("p must be prime");
}

// Right-multiplication closure of {identity} under gens; every element it
// reaches lies in the submagma generated by gens.
std::vector<bool> closure(const std::vector<std::vector<int>>& t, const std::vector<int>& gens)
{
    std::vector<bool> seen(t.size(), false);
    std::vector<int> stack{0};
    seen[0] = true;
    while (!stack.empty()) {
        const int x = stack.back();
        stack.pop_back();
        for (int s : gens) {
            const int y = t[x][s];
            if (!seen[y]) {
                seen[y] = true;
                stack.push_back(y);
            }
        }
    }
    return seen;
}

}  // namespace

CayleyGroup::CayleyGroup(std::vector<std::vector<int>> table) : table_(std::move(table))
{
    const int n = static_cast<int>(table_.size());
    if (n == 0) fail("empty");
    if (n > kMaxOrder) fail("order exceeds " + std::to_string(kMaxOrder));
    for (const auto& row : table_) {
        if (static_cast<int>(row.size()) != n) fail("table is not square");
        for (int v : row)
            if (v < 0 || v >= n) fail("entry out of range");
    }
    for (int i = 0; i < n; ++i)
        if (table_[0][i] != i || table_[i][0] != i) fail("element 0 is not the identity");

    inverse_.assign(n, -1);
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b)
            if (table_[a][b] == 0) {
                if (table_[b][a] != 0) fail("left and right inverses differ");
                inverse_[a] = b;
                break;
            }
        if (inverse_[a] < 0) fail("element " + std::to_string(a) + " has no inverse");
    }
    // Latin square: each row and column is a permutation.
    for (int a = 0; a < n; ++a) {
        std::vector<bool> row_seen(n, false), col_seen(n, false);
        for (int b = 0; b < n; ++b) {
            if (row_seen[table_[a][b]] || col_seen[table_[b][a]]) fail("not a Latin square");
            row_seen[table_[a][b]] = col_seen[table_[b][a]] = true;
        }
    }

    std::vector<int> gens;
    auto reached = closure(table_, gens);
    for (int g = 1; g < n; ++g)
        if (!reached[g]) {
            gens.push_back(g);
            reached = closure(table_, gens);
        }
    // Light's test: (x a) y = x (a y) for a in a generating set.
    for (int a : gens)
        for (int x = 0; x < n; ++x) {
            const auto& row_x = table_[x];
            const auto& row_xa = table_[row_x[a]];
            const auto& row_a = table_[a];
            for (int y = 0; y < n; ++y)
                if (row_xa[y] != row_x[row_a[y]]) fail("multiplication is not associative");
        }
}

int CayleyGroup::power(int a, Int e) const
{
    int result = 0;
    if (e < 0) {
        a = inverse(a);
        e = -e;
    }
    for (Int i = 0; i < e; ++i) result = mul(result, a);
    return result;
}

int CayleyGroup::element_order(int a) const
{
    int x = a;
    int ord = 1;
    while (x != 0) {
        x = mul(x, a);
        ++ord;
    }
    return ord;
}

bool CayleyGroup::is_abelian() const
{
    for (int a = 0; a < order(); ++a)
        for (int b = a + 1; b < order(); ++b)
            if (mul(a, b) != mul(b, a)) return false;
    return true;
}

CayleyGroup parse_group(std::istream& in)
{
    int n = 0;
    if (!(in >> n) || n <= 0) throw GroupError("group file: missing or invalid order on line 1");
    if (n > CayleyGroup::kMaxOrder) throw GroupError("group file: order exceeds cap");
    std::vector<std::vector<int>> table(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (!(in >> table[i][j])) {
                std::ostringstream msg;
                msg << "group file: row " << i << " (line " << i + 2 << ") is short";
                throw GroupError(msg.str());
            }
    std::string extra;
    if (in >> extra) throw GroupError("group file: trailing data after table");
    return CayleyGroup(std::move(table));
}

CayleyGroup cyclic_group(int n)
{
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) t[i][j] = (i + j) % n;
    return CayleyGroup(std::move(t));
}

std::vector<CyclicSubgroup> find_cyclic_subgroups(const CayleyGroup& G, Int p)
{
    require_prime(p);
    std::vector<CyclicSubgroup> out;
    std::set<int> covered;
    for (int a = 1; a < G.order(); ++a) {
        if (covered.count(a) || G.element_order(a) != p) continue;
        CyclicSubgroup c{a, p, {}};
        int x = 0;
        for (Int j = 0; j < p; ++j) {
            c.elements.push_back(x);
            if (x != 0) covered.insert(x);
            x = G.mul(x, a);
        }
        out.push_back(std::move(c));
    }
    return out;
}

std::vector<int> normalizer(const CayleyGroup& G, const CyclicSubgroup& C)
{
    std::vector<bool> member(G.order(), false);
    for (int x : C.elements) member[x] = true;
    std::vector<int> out;
    for (int g = 0; g < G.order(); ++g)
        if (member[G.mul(G.mul(g, C.generator), G.inverse(g))]) out.push_back(g);
    return out;
}

std::map<int, Int> conjugation_rho(const CayleyGroup& G, const CyclicSubgroup& C)
{
    std::map<int, Int> rho;
    for (int g : normalizer(G, C)) {
        const int c = G.mul(G.mul(g, C.generator), G.inverse(g));
        const auto it = std::find(C.elements.begin(), C.elements.end(), c);
        rho[g] = static_cast<Int>(it - C.elements.begin());
    }
    return rho;
}

bool rho_is_homomorphism(const CayleyGroup& G, const CyclicSubgroup& C,
                         const std::map<int, Int>& rho)
{
    for (const auto& [a, ra] : rho)
        for (const auto& [b, rb] : rho) {
            const auto it = rho.find(G.mul(a, b));
            if (it == rho.end() || it->second != (ra * rb) % C.p) return false;
        }
    return true;
}

RhoBarReport rho_bar_surjective(const CayleyGroup& G, Int p)
{
    RhoBarReport report;
    report.p = p;
    for (const auto& C : find_cyclic_subgroups(G, p)) {
        SubgroupSurjectivity s;
        s.generator = C.generator;
        std::map<Int, int> first_with;  // delta -> smallest element realizing it
        for (const auto& [g, delta] : conjugation_rho(G, C)) first_with.emplace(delta, g);
        for (const auto& [delta, g] : first_with) s.image.push_back(delta);
        s.holds = true;
        for (Int delta = 1; delta < p; ++delta) {
            if (auto it = first_with.find(delta); it != first_with.end())
                s.witnesses[delta] = {it->second, 1};
            else if (auto jt = first_with.find(p - delta); jt != first_with.end())
                s.witnesses[delta] = {jt->second, -1};
            else
                s.holds = false;
        }
        if (s.holds && !report.holds) {
            report.holds = true;
            report.witnesses = s.witnesses;
        }
        report.subgroups.push_back(std::move(s));
    }
    return report;
}

CayleyGroup build_semidirect(Int p)
{
    require_prime(p);
    if (p * (p - 1) > CayleyGroup::kMaxOrder)
        throw std::invalid_argument("build_semidirect: p(p-1) exceeds the group order cap");
    const Int n = p * (p - 1);
    const auto index = [p](Int a, Int u) { return static_cast<int>(a * (p - 1) + (u - 1)); };
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (Int a = 0; a < p; ++a)
        for (Int u = 1; u < p; ++u)
            for (Int b = 0; b < p; ++b)
                for (Int v = 1; v < p; ++v)
                    t[index(a, u)][index(b, v)] = index((a + u * b) % p, (u * v) % p);
    return CayleyGroup(std::move(t));
}

}  // namespace selfmaps
