#ifndef SELFMAPS_TORIC_HPP
#define SELFMAPS_TORIC_HPP

// Smooth complete toric surfaces from their fans. Torus-invariant curves D_i
// correspond to rays v_i; the wall relation v_{i-1} + v_{i+1} = -(D_i^2) v_i
// gives their self-intersections.

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "selfmaps/verdict.hpp"

namespace selfmaps {

struct Ray {
    Int x = 0;
    Int y = 0;
    friend bool operator==(const Ray&, const Ray&) = default;
    friend auto operator<=>(const Ray&, const Ray&) = default;
};

class FanError : public std::invalid_argument {
public:
    enum class Kind { TooFewRays, NonPrimitive, NotUnimodular, MixedOrientation, BadWinding, Parse };

    FanError(Kind kind, const std::string& what) : std::invalid_argument(what), kind_(kind) {}
    Kind kind() const { return kind_; }

private:
    Kind kind_;
};

/// Rays in counterclockwise order, lexicographically smallest first.
struct Fan {
    std::vector<Ray> rays;
    /// Set when the input was given clockwise and was reversed.
    bool orientation_reversed = false;
};

/// Accepts counterclockwise or clockwise input (the latter is reversed and
/// flagged). Throws FanError.
Fan validate_fan(const std::vector<Ray>& rays);

std::vector<Int> self_intersections(const Fan& fan);

Verdict toric_verdict(const Fan& fan);

/// Inserts v_i + v_{i+1}; the result is renormalized.
Fan blow_up(const Fan& fan, std::size_t i);

Fan projective_plane();
/// Rays (1,0), (0,1), (-1,n), (0,-1).
Fan hirzebruch(Int n);

/// One ray per line as "x y"; blank lines and '#' comments ignored.
std::vector<Ray> parse_fan(std::istream& in);

}  // namespace selfmaps

#endif
