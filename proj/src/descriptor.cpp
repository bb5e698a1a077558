#include "selfmaps/descriptor.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace selfmaps {

namespace {

struct Entry {
    std::string value;
    int line = 0;
};

using Entries = std::map<std::string, Entry>;

std::string trim(const std::string& s)
{
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

const Entry& require(const Entries& kv, const std::string& key, const std::string& family)
{
    const auto it = kv.find(key);
    if (it == kv.end()) throw DescriptorError(0, "family '" + family + "' requires key '" + key + "'");
    return it->second;
}

Int parse_int(const Entry& e, const std::string& key)
{
    std::istringstream is(e.value);
    Int v = 0;
    std::string rest;
    if (!(is >> v) || (is >> rest)) throw DescriptorError(e.line, "key '" + key + "' expects an integer");
    return v;
}

void only_keys(const Entries& kv, std::initializer_list<const char*> allowed)
{
    const std::set<std::string> ok(allowed.begin(), allowed.end());
    for (const auto& [key, e] : kv)
        if (key != "family" && !ok.count(key)) throw DescriptorError(e.line, "unexpected key '" + key + "'");
}

std::filesystem::path resolve(const std::filesystem::path& base, const std::string& file)
{
    std::filesystem::path p(file);
    return p.is_absolute() ? p : base / p;
}

CurveModel parse_curve(const Entries& kv)
{
    const auto& c = require(kv, "curve", "elliptic_bundle");
    if (c.value == "nocm") {
        if (kv.count("t") || kv.count("n"))
            throw DescriptorError(kv.count("t") ? kv.at("t").line : kv.at("n").line,
                                  "order parameters given for a nocm curve");
        return CurveModel::no_cm();
    }
    if (c.value != "cm") throw DescriptorError(c.line, "curve must be 'cm' or 'nocm'");
    const auto& t = require(kv, "t", "elliptic_bundle");
    const auto& n = require(kv, "n", "elliptic_bundle");
    try {
        return CurveModel::with_cm(OrderParams::make(static_cast<int>(parse_int(t, "t")), parse_int(n, "n")));
    } catch (const std::invalid_argument& ex) {
        if (dynamic_cast<const DescriptorError*>(&ex)) throw;
        throw DescriptorError(t.line, ex.what());
    }
}

EllipticBundleDescriptor parse_elliptic(const Entries& kv)
{
    only_keys(kv, {"curve", "t", "n", "bundle", "k", "L", "degree"});
    const auto curve = parse_curve(kv);
    const auto& b = require(kv, "bundle", "elliptic_bundle");
    const auto forbid = [&](std::initializer_list<const char*> keys) {
        for (const char* key : keys)
            if (auto it = kv.find(key); it != kv.end())
                throw DescriptorError(it->second.line, "key '" + std::string(key) +
                                                           "' does not apply to bundle '" + b.value + "'");
    };
    if (b.value == "split_torsion") {
        forbid({"degree"});
        const Int k = parse_int(require(kv, "k", "elliptic_bundle"), "k");
        if (k < 1) throw DescriptorError(kv.at("k").line, "k must be positive");
        const auto& le = require(kv, "L", "elliptic_bundle");
        std::string coords = le.value;
        std::replace(coords.begin(), coords.end(), ',', ' ');
        std::istringstream is(coords);
        Int v1 = 0, v2 = 0;
        std::string rest;
        if (!(is >> v1 >> v2) || (is >> rest)) throw DescriptorError(le.line, "L expects two integers \"v1 v2\"");
        return EllipticBundleDescriptor::split_torsion(curve, TorsionPoint::make(k, v1, v2));
    }
    forbid({"k", "L"});
    if (b.value == "split_degree") {
        const auto& de = require(kv, "degree", "elliptic_bundle");
        const Int deg = parse_int(de, "degree");
        if (deg == 0) throw DescriptorError(de.line, "degree must be nonzero (use split_nontorsion)");
        return EllipticBundleDescriptor::split_degree(curve, deg);
    }
    forbid({"degree"});
    if (b.value == "split_nontorsion") return EllipticBundleDescriptor::of(curve, SplitNonTorsion{});
    if (b.value == "atiyah_a0") return EllipticBundleDescriptor::of(curve, AtiyahA0{});
    if (b.value == "atiyah_a1") return EllipticBundleDescriptor::of(curve, AtiyahA1{});
    throw DescriptorError(b.line, "unknown bundle '" + b.value + "'");
}

}  // namespace

DescriptorError::DescriptorError(int line, const std::string& what)
    : std::invalid_argument(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line)
{
}

SurfaceDescriptor parse_descriptor(std::istream& in, const std::filesystem::path& base_dir)
{
    Entries kv;
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        if (const auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
        const auto line = trim(raw);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) throw DescriptorError(lineno, "expected key = value");
        const auto key = trim(line.substr(0, eq));
        const auto value = trim(line.substr(eq + 1));
        if (key.empty()) throw DescriptorError(lineno, "empty key");
        if (kv.count(key)) throw DescriptorError(lineno, "duplicate key '" + key + "'");
        kv[key] = {value, lineno};
    }

    const auto& fam = require(kv, "family", "any");
    const auto& family = fam.value;
    if (family == "abelian" || family == "hyperelliptic" || family == "kodaira_one") {
        only_keys(kv, {});
        if (family == "abelian") return AbelianSurface{};
        if (family == "hyperelliptic") return HyperellipticSurface{};
        return KodairaOneSurface{};
    }
    if (family == "toric") {
        only_keys(kv, {"fan_file"});
        const auto& f = require(kv, "fan_file", family);
        const auto path = resolve(base_dir, f.value);
        std::ifstream file(path);
        if (!file) throw DescriptorError(f.line, "cannot open fan file '" + path.string() + "'");
        try {
            return ToricSurface{f.value, validate_fan(parse_fan(file))};
        } catch (const FanError& ex) {
            throw DescriptorError(f.line, std::string("fan file: ") + ex.what());
        }
    }
    if (family == "elliptic_bundle") return parse_elliptic(kv);
    if (family == "high_genus_bundle") {
        only_keys(kv, {"group_file", "p"});
        const auto& g = require(kv, "group_file", family);
        const auto& pe = require(kv, "p", family);
        const Int p = parse_int(pe, "p");
        if (!is_prime(p)) throw DescriptorError(pe.line, "p must be prime");
        const auto path = resolve(base_dir, g.value);
        std::ifstream file(path);
        if (!file) throw DescriptorError(g.line, "cannot open group file '" + path.string() + "'");
        try {
            return HighGenusBundle{g.value, p, parse_group(file)};
        } catch (const GroupError& ex) {
            throw DescriptorError(g.line, ex.what());
        }
    }
    throw DescriptorError(fam.line, "unknown family '" + family + "'");
}

SurfaceDescriptor load_descriptor(const std::filesystem::path& file)
{
    std::ifstream in(file);
    if (!in) throw DescriptorError(0, "cannot open descriptor '" + file.string() + "'");
    return parse_descriptor(in, file.parent_path().empty() ? std::filesystem::path(".") : file.parent_path());
}

std::string describe(const SurfaceDescriptor& d)
{
    std::ostringstream os;
    std::visit(
        [&](const auto& s) {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, AbelianSurface>) {
                os << "abelian surface";
            } else if constexpr (std::is_same_v<T, HyperellipticSurface>) {
                os << "hyperelliptic surface";
            } else if constexpr (std::is_same_v<T, KodairaOneSurface>) {
                os << "minimal surface of Kodaira dimension one";
            } else if constexpr (std::is_same_v<T, ToricSurface>) {
                os << "toric surface with " << s.fan.rays.size() << " rays";
            } else if constexpr (std::is_same_v<T, EllipticBundleDescriptor>) {
                os << "P1-bundle over " << s.curve.name() << ": ";
                std::visit(
                    [&](const auto& b) {
                        using B = std::decay_t<decltype(b)>;
                        if constexpr (std::is_same_v<B, SplitTorsion>)
                            os << "O + L, L = (" << b.L.v1 << "," << b.L.v2 << ") of exact order " << b.L.k;
                        else if constexpr (std::is_same_v<B, SplitNonTorsion>)
                            os << "O + L, L of degree 0 and infinite order";
                        else if constexpr (std::is_same_v<B, SplitDegree>)
                            os << "O + L, deg L = " << b.degree;
                        else if constexpr (std::is_same_v<B, AtiyahA0>)
                            os << "nontrivial extension of O by O";
                        else
                            os << "nontrivial extension of O(q) by O";
                    },
                    s.bundle);
            } else {
                os << "P1-bundle over a curve of genus >= 2, group of order " << s.group.order()
                   << ", p = " << s.p;
            }
        },
        d);
    return os.str();
}

Verdict high_genus_verdict(const HighGenusBundle& b, Int bound)
{
    const auto report = rho_bar_surjective(b.group, b.p);
    if (report.subgroups.empty())
        throw DescriptorError(0, "group has no cyclic subgroup of order " + std::to_string(b.p));
    if (report.holds) return GroupConditionHolds{b.p, report.witnesses};
    // Residues left uncovered by every subgroup.
    std::set<Int> covered;
    for (const auto& s : report.subgroups)
        for (const auto& [delta, w] : s.witnesses) covered.insert(delta);
    std::vector<Int> listed;
    for (Int q : primes_up_to(bound))
        if (q % b.p != 0 && !covered.count(q % b.p)) listed.push_back(q);
    return InfinitelyManyMissing{"residues mod p outside +-image of conjugation are missing degrees",
                                 std::move(listed), bound};
}

Verdict classify(const SurfaceDescriptor& d)
{
    return std::visit(
        [](const auto& s) -> Verdict {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, AbelianSurface>)
                return InfinitelyManyMissing{"abelian varieties miss infinitely many prime degrees", {}, 0};
            else if constexpr (std::is_same_v<T, HyperellipticSurface>)
                return InfinitelyManyMissing{"hyperelliptic surfaces miss infinitely many prime degrees", {}, 0};
            else if constexpr (std::is_same_v<T, KodairaOneSurface>)
                return InfinitelyManyMissing{
                    "minimal surfaces with Kodaira dimension one miss infinitely many prime degrees", {}, 0};
            else if constexpr (std::is_same_v<T, ToricSurface>)
                return toric_verdict(s.fan);
            else if constexpr (std::is_same_v<T, EllipticBundleDescriptor>)
                return classify_bundle(s);
            else
                return high_genus_verdict(s);
        },
        d);
}

}  // namespace selfmaps
