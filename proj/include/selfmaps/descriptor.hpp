#ifndef SELFMAPS_DESCRIPTOR_HPP
#define SELFMAPS_DESCRIPTOR_HPP

// Surface descriptors: flat "key = value" text, one key per line, '#'
// comments. Example:
//
//   family = elliptic_bundle
//   curve  = cm
//   t = 0
//   n = 1
//   bundle = split_torsion
//   k = 5
//   L = 1 2

#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <variant>

#include "selfmaps/elliptic_pbundle.hpp"
#include "selfmaps/group_condition.hpp"
#include "selfmaps/toric.hpp"

namespace selfmaps {

/// Input error with the offending line (0 when not tied to a line).
class DescriptorError : public std::invalid_argument {
public:
    DescriptorError(int line, const std::string& what);
    int line() const { return line_; }

private:
    int line_;
};

struct AbelianSurface {};
struct HyperellipticSurface {};
struct KodairaOneSurface {};

struct ToricSurface {
    std::string fan_file;
    Fan fan;
};

/// P(O + L) over a curve of genus >= 2 with L of prime order p, seen
/// through the finite group acting on the base.
struct HighGenusBundle {
    std::string group_file;
    Int p = 0;
    CayleyGroup group;
};

using SurfaceDescriptor = std::variant<AbelianSurface, HyperellipticSurface, KodairaOneSurface,
                                       ToricSurface, EllipticBundleDescriptor, HighGenusBundle>;

/// Relative fan_file / group_file paths resolve against base_dir.
SurfaceDescriptor parse_descriptor(std::istream& in, const std::filesystem::path& base_dir = ".");
SurfaceDescriptor load_descriptor(const std::filesystem::path& file);

std::string describe(const SurfaceDescriptor& d);

/// Verdict for any family; elliptic bundles and toric surfaces are computed,
/// the Kodaira dimension >= 0 families return their known answer.
Verdict classify(const SurfaceDescriptor& d);

/// Verdict for the genus >= 2 bundle from the group condition.
Verdict high_genus_verdict(const HighGenusBundle& b, Int bound = kMissingScanBound);

}  // namespace selfmaps

#endif
