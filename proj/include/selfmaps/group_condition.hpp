#ifndef SELFMAPS_GROUP_CONDITION_HPP
#define SELFMAPS_GROUP_CONDITION_HPP

// Conjugation bookkeeping for a cyclic subgroup of prime order p inside a
// finite group given by its Cayley table.
//
// Reduction used throughout: for a cyclic group G = <g> of prime order, a map
// phi satisfies phi g' = g'^{+-delta} phi for every g' in G as soon as it does
// so for the generator g, since g' = g^j gives phi g^j = (phi g phi^-1)^j phi.
// Hence checking the generator is enough.

#include <cstddef>
#include <iosfwd>
#include <map>
#include <stdexcept>
#include <vector>

#include "selfmaps/qorders.hpp"

namespace selfmaps {

class GroupError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Finite group with elements 0..order-1, element 0 the identity.
class CayleyGroup {
public:
    static constexpr int kMaxOrder = 10000;

    /// Validates closure, identity, inverses and associativity (Light's test
    /// against a generating set). Throws GroupError.
    explicit CayleyGroup(std::vector<std::vector<int>> table);

    int order() const { return static_cast<int>(table_.size()); }
    int identity() const { return 0; }
    int mul(int a, int b) const { return table_[a][b]; }
    int inverse(int a) const { return inverse_[a]; }
    int power(int a, Int e) const;
    int element_order(int a) const;
    bool is_abelian() const;
    const std::vector<std::vector<int>>& table() const { return table_; }

private:
    std::vector<std::vector<int>> table_;
    std::vector<int> inverse_;
};

/// First line N, then N rows of N indices; identity must be index 0.
CayleyGroup parse_group(std::istream& in);
CayleyGroup cyclic_group(int n);

struct CyclicSubgroup {
    int generator = 0;
    Int p = 0;
    std::vector<int> elements;  // generator^0 .. generator^(p-1)
};

/// One subgroup per distinct subgroup of order p; generator is its smallest
/// non-identity element.
std::vector<CyclicSubgroup> find_cyclic_subgroups(const CayleyGroup& G, Int p);

std::vector<int> normalizer(const CayleyGroup& G, const CyclicSubgroup& C);

/// n -> delta with n g n^-1 = g^delta, over the normalizer of C.
std::map<int, Int> conjugation_rho(const CayleyGroup& G, const CyclicSubgroup& C);

bool rho_is_homomorphism(const CayleyGroup& G, const CyclicSubgroup& C,
                         const std::map<int, Int>& rho);

struct SubgroupSurjectivity {
    int generator = 0;
    bool holds = false;
    std::vector<Int> image;  // image of rho, sorted
    std::map<Int, std::pair<int, int>> witnesses;
};

struct RhoBarReport {
    bool holds = false;
    Int p = 0;
    std::map<Int, std::pair<int, int>> witnesses;  // residue -> (element, sign)
    std::vector<SubgroupSurjectivity> subgroups;
};

/// Holds iff some cyclic subgroup C of order p has image(rho) u -image(rho)
/// equal to (Z/p)^*.
RhoBarReport rho_bar_surjective(const CayleyGroup& G, Int p);

/// Z/p x| (Z/p)^* with (a,u)(b,v) = (a + u b, u v); element (a, u) has index
/// a (p-1) + (u-1). Requires p (p-1) <= kMaxOrder.
CayleyGroup build_semidirect(Int p);

}  // namespace selfmaps

#endif
