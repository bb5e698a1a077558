#include "selfmaps/toric.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <numeric>
#include <sstream>

#include "selfmaps/ns_lattice.hpp"

namespace selfmaps {

namespace {

Int det(const Ray& a, const Ray& b) { return a.x * b.y - a.y * b.x; }

std::string show(const Ray& r)
{
    std::ostringstream os;
    os << "(" << r.x << "," << r.y << ")";
    return os.str();
}

bool all_consecutive_det(const std::vector<Ray>& rays, Int value)
{
    for (std::size_t i = 0; i < rays.size(); ++i)
        if (det(rays[i], rays[(i + 1) % rays.size()]) != value) return false;
    return true;
}

}  // namespace

Fan validate_fan(const std::vector<Ray>& input)
{
    using K = FanError::Kind;
    if (input.size() < 3) throw FanError(K::TooFewRays, "fan needs at least 3 rays");
    for (const auto& r : input)
        if (std::gcd(r.x, r.y) != 1)
            throw FanError(K::NonPrimitive, "ray " + show(r) + " is not primitive");

    Fan fan;
    fan.rays = input;
    if (!all_consecutive_det(fan.rays, 1)) {
        std::reverse(fan.rays.begin(), fan.rays.end());
        if (!all_consecutive_det(fan.rays, 1)) {
            for (std::size_t i = 0; i < input.size(); ++i) {
                const auto& a = input[i];
                const auto& b = input[(i + 1) % input.size()];
                if (std::abs(det(a, b)) != 1)
                    throw FanError(K::NotUnimodular, "cone " + show(a) + " " + show(b) +
                                                         " has determinant " + std::to_string(det(a, b)));
            }
            throw FanError(K::MixedOrientation, "consecutive cones have mixed orientation");
        }
        fan.orientation_reversed = true;
    }
    // Each step turns by an angle in (0, pi); a complete fan turns exactly once.
    double turn = 0.0;
    for (std::size_t i = 0; i < fan.rays.size(); ++i) {
        const auto& a = fan.rays[i];
        const auto& b = fan.rays[(i + 1) % fan.rays.size()];
        turn += std::atan2(static_cast<double>(det(a, b)),
                           static_cast<double>(a.x * b.x + a.y * b.y));
    }
    const double turns = turn / (2.0 * M_PI);
    if (std::abs(turns - 1.0) > 1e-6)
        throw FanError(K::BadWinding, "rays wind " + std::to_string(std::lround(turns)) +
                                          " times around the origin");
    std::rotate(fan.rays.begin(), std::min_element(fan.rays.begin(), fan.rays.end()), fan.rays.end());
    return fan;
}

std::vector<Int> self_intersections(const Fan& fan)
{
    const auto& v = fan.rays;
    const std::size_t r = v.size();
    std::vector<Int> out;
    out.reserve(r);
    for (std::size_t i = 0; i < r; ++i) {
        const auto& prev = v[(i + r - 1) % r];
        const auto& next = v[(i + 1) % r];
        const Ray sum{prev.x + next.x, prev.y + next.y};
        // sum = -c v_i
        if (det(sum, v[i]) != 0)
            throw FanError(FanError::Kind::NotUnimodular, "wall relation fails at " + show(v[i]));
        const Int c = v[i].x != 0 ? -sum.x / v[i].x : -sum.y / v[i].y;
        out.push_back(c);
    }
    return out;
}

Verdict toric_verdict(const Fan& fan)
{
    std::vector<Int> negatives;
    for (Int c : self_intersections(fan))
        if (c < 0) negatives.push_back(c);
    if (negatives.empty()) {
        if (fan.rays.size() == 3) return SquaresOnly{"projective plane: degrees are squares"};
        if (fan.rays.size() == 4) return AllDegrees{std::nullopt, "P1 x P1: every degree occurs"};
        throw std::logic_error("smooth complete fan without negative curves has 3 or 4 rays");
    }
    if (negatives.size() == 1) return SquaresOnly{"unique curve of negative self-intersection"};
    const auto cands = toric_prime_candidates(negatives);
    return FiniteCandidatePrimes{{cands.begin(), cands.end()},
                                 "prime degree p forces p = -C^2 for a negative curve C"};
}

Fan blow_up(const Fan& fan, std::size_t i)
{
    if (i >= fan.rays.size()) throw std::out_of_range("blow_up: ray index out of range");
    auto rays = fan.rays;
    const auto& a = rays[i];
    const auto& b = rays[(i + 1) % rays.size()];
    const Ray mid{a.x + b.x, a.y + b.y};
    rays.insert(rays.begin() + static_cast<std::ptrdiff_t>(i) + 1, mid);
    return validate_fan(rays);
}

Fan projective_plane() { return validate_fan({{1, 0}, {0, 1}, {-1, -1}}); }

Fan hirzebruch(Int n) { return validate_fan({{1, 0}, {0, 1}, {-1, n}, {0, -1}}); }

std::vector<Ray> parse_fan(std::istream& in)
{
    std::vector<Ray> rays;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        Ray r;
        std::string extra;
        if (!(ls >> r.x)) {
            if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
            throw FanError(FanError::Kind::Parse, "line " + std::to_string(lineno) + ": expected \"x y\"");
        }
        if (!(ls >> r.y) || (ls >> extra))
            throw FanError(FanError::Kind::Parse, "line " + std::to_string(lineno) + ": expected \"x y\"");
        rays.push_back(r);
    }
    return rays;
}

}  // namespace selfmaps
