// selfmaps: classify surfaces by the degrees of their self-maps.

#include <chrono>
#include <functional>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "selfmaps/descriptor.hpp"
#include "selfmaps/report.hpp"
#include "selfmaps/verify.hpp"

using namespace selfmaps;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitInput = 2;

struct Options {
    bool json = false;
    bool timing = false;
    Int bound = 10000;
};

class Stopwatch {
public:
    double ms() const
    {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

Report make_report(const std::string& command, const std::string& subject)
{
    Report r;
    r.tool_version = tool_version();
    r.command = command;
    r.subject = subject;
    return r;
}

void emit(Report& r, const Options& o, const Stopwatch& sw, const std::function<void()>& human)
{
    if (o.timing) r.timing_ms = sw.ms();
    if (o.json) {
        std::cout << json(r).dump(2) << "\n";
        return;
    }
    human();
    if (r.timing_ms) std::cout << "time: " << std::fixed << std::setprecision(1) << *r.timing_ms << " ms\n";
}

std::string witness_text(const PrimeDecision& d)
{
    if (d.witness) return format_route(*d.witness);
    return "no route (" + to_string(d.reason) + ")";
}

int cmd_classify(const std::string& file, const Options& o)
{
    Stopwatch sw;
    const auto desc = load_descriptor(file);
    auto r = make_report("classify", describe(desc));
    r.verdict = classify(desc);
    emit(r, o, sw, [&] {
        std::cout << r.subject << "\n" << format_verdict(*r.verdict) << "\n";
        if (const auto* all = std::get_if<AllDegrees>(&*r.verdict); all && all->certificate) {
            for (const auto& w : all->certificate->residues)
                std::cout << "  p = " << w.residue << " mod " << all->certificate->k << ": "
                          << format_route(w.route) << "\n";
            for (const auto& w : all->certificate->primes_dividing_k)
                std::cout << "  p = " << w.p << ": " << format_route(w.route) << "\n";
        }
    });
    return kExitOk;
}

int cmd_scan(const std::string& file, const Options& o)
{
    Stopwatch sw;
    const auto desc = load_descriptor(file);
    const auto* bundle = std::get_if<EllipticBundleDescriptor>(&desc);
    if (!bundle || !bundle->torsion())
        throw DescriptorError(0, "scan needs an elliptic_bundle descriptor with bundle = split_torsion");
    const auto scan = scan_primes(*bundle, o.bound);
    auto r = make_report("scan", describe(desc));
    r.scan = scan.decisions;
    const auto missing = scan.missing();
    r.details = {{"bound", o.bound},
                 {"primes", scan.decisions.size()},
                 {"achievable", scan.decisions.size() - missing.size()},
                 {"missing", missing.size()}};
    emit(r, o, sw, [&] {
        std::cout << r.subject << "\n";
        for (const auto& d : scan.decisions)
            std::cout << std::setw(7) << d.p << "  " << (d.achievable() ? "yes" : "NO ") << "  "
                      << witness_text(d) << "\n";
        std::cout << scan.decisions.size() << " primes up to " << o.bound << ", " << missing.size()
                  << " missing\n";
    });
    return kExitOk;
}

int cmd_density(const std::vector<Int>& order, Int modulus, const Options& o)
{
    Stopwatch sw;
    const auto ord = OrderParams::make(static_cast<int>(order.at(0)), order.at(1));
    const auto rep = split_density_report(ord, o.bound);
    std::ostringstream subject;
    subject << ord << ", discriminant " << ord.discriminant();
    auto r = make_report("density", subject.str());
    r.details = {{"t", ord.t},
                 {"n", ord.n},
                 {"discriminant", ord.discriminant()},
                 {"bound", o.bound},
                 {"split", rep.split_count},
                 {"inert", rep.inert_count},
                 {"ramified", rep.ramified_count},
                 {"split_fraction", rep.split_fraction}};
    Int in_class = 0;
    if (modulus > 0) {
        in_class = count_primes_in_class(o.bound, modulus, 1);
        r.details["modulus"] = modulus;
        r.details["primes_1_mod_modulus"] = in_class;
    }
    emit(r, o, sw, [&] {
        std::cout << r.subject << ", primes up to " << o.bound << "\n"
                  << "  split    " << rep.split_count << "\n"
                  << "  inert    " << rep.inert_count << "\n"
                  << "  ramified " << rep.ramified_count << "\n"
                  << "  split fraction " << std::setprecision(4) << rep.split_fraction << "\n";
        if (modulus > 0) std::cout << "  p = 1 mod " << modulus << ": " << in_class << "\n";
    });
    return kExitOk;
}

int cmd_toric(const std::string& file, const Options& o)
{
    Stopwatch sw;
    std::ifstream in(file);
    if (!in) throw std::invalid_argument("cannot open fan file '" + file + "'");
    const auto fan = validate_fan(parse_fan(in));
    const auto d = self_intersections(fan);
    auto r = make_report("toric", "toric surface with " + std::to_string(fan.rays.size()) + " rays");
    r.verdict = toric_verdict(fan);
    json rays = json::array();
    for (std::size_t i = 0; i < fan.rays.size(); ++i)
        rays.push_back({{"x", fan.rays[i].x}, {"y", fan.rays[i].y}, {"self_intersection", d[i]}});
    r.details = {{"rays", rays}, {"orientation_reversed", fan.orientation_reversed}};
    emit(r, o, sw, [&] {
        std::cout << r.subject << (fan.orientation_reversed ? " (input was clockwise)" : "") << "\n";
        for (std::size_t i = 0; i < fan.rays.size(); ++i)
            std::cout << "  (" << fan.rays[i].x << ", " << fan.rays[i].y << ")  D^2 = " << d[i] << "\n";
        std::cout << format_verdict(*r.verdict) << "\n";
    });
    return kExitOk;
}

int cmd_group_check(const std::string& file, Int p, const Options& o)
{
    Stopwatch sw;
    if (!is_prime(p)) throw std::invalid_argument("--p must be prime");
    std::ifstream in(file);
    if (!in) throw std::invalid_argument("cannot open group file '" + file + "'");
    const auto g = parse_group(in);
    const auto rep = rho_bar_surjective(g, p);
    auto r = make_report("group-check", "group of order " + std::to_string(g.order()) + ", p = " +
                                            std::to_string(p));
    if (rep.holds) r.verdict = GroupConditionHolds{p, rep.witnesses};
    json subs = json::array();
    for (const auto& s : rep.subgroups) subs.push_back({{"generator", s.generator}, {"holds", s.holds}, {"image", s.image}});
    r.details = {{"order", g.order()}, {"holds", rep.holds}, {"subgroups", subs}};
    emit(r, o, sw, [&] {
        std::cout << r.subject << "\n";
        if (rep.subgroups.empty()) std::cout << "  no subgroup of order " << p << "\n";
        for (const auto& s : rep.subgroups) {
            std::cout << "  <" << s.generator << ">: image of rho {";
            for (std::size_t i = 0; i < s.image.size(); ++i) std::cout << (i ? ", " : "") << s.image[i];
            std::cout << "}" << (s.holds ? ", +-image covers (Z/p)^*" : "") << "\n";
        }
        std::cout << (rep.holds ? "condition holds" : "condition fails") << "\n";
    });
    return kExitOk;
}

int cmd_cm_table(Int n_max, const Options& o)
{
    Stopwatch sw;
    const auto rows = degree_two_table(n_max);
    auto r = make_report("cm-table", "orders Z[w], w^2 = t w - n, n <= " + std::to_string(n_max));
    json out = json::array();
    for (const auto& row : rows)
        out.push_back({{"order", row.order}, {"discriminant", row.order.discriminant()}, {"elements", row.elements}});
    r.details = {{"n_max", n_max}, {"rows", out}};
    emit(r, o, sw, [&] {
        for (const auto& row : rows) {
            if (row.elements.empty()) continue;
            std::cout << row.order << "  D = " << row.order.discriminant() << ":";
            for (const auto& e : row.elements) std::cout << " " << e;
            std::cout << "\n";
        }
    });
    return kExitOk;
}

int cmd_verify(bool inject_fault, const Options& o)
{
    Stopwatch sw;
    const auto results = run_claims({inject_fault});
    auto r = make_report("verify-paper", "acceptance claims");
    json claims = json::array();
    bool all = true;
    for (const auto& c : results) {
        all = all && c.passed;
        json item = {{"id", c.id}, {"name", c.name}, {"statement", c.statement}, {"passed", c.passed}, {"detail", c.detail}};
        if (o.timing) item["seconds"] = c.seconds;
        claims.push_back(item);
    }
    r.details = {{"claims", claims}, {"passed", all}, {"inject_fault", inject_fault}};
    emit(r, o, sw, [&] {
        for (const auto& c : results)
            std::cout << (c.passed ? "PASS" : "FAIL") << "  " << c.id << " " << c.name << ": " << c.statement
                      << "\n      " << c.detail << "\n";
        std::cout << (all ? "all claims pass" : "some claims FAILED") << "\n";
    });
    return all ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Degrees of self-maps of smooth projective surfaces"};
    app.set_version_flag("--version", tool_version());
    app.require_subcommand(1);

    Options opts;
    const auto common = [&](CLI::App* sub) {
        sub->add_flag("--json", opts.json, "Print a JSON report");
        sub->add_flag("--timing", opts.timing, "Include wall-clock time");
    };

    std::string file;
    auto* classify_cmd = app.add_subcommand("classify", "Classify the surface in a descriptor file");
    classify_cmd->add_option("descriptor", file, "Descriptor file")->required();
    common(classify_cmd);

    auto* scan_cmd = app.add_subcommand("scan", "Per-prime table for a torsion P1-bundle over an elliptic curve");
    scan_cmd->add_option("descriptor", file, "Descriptor file")->required();
    scan_cmd->add_option("--bound", opts.bound, "Scan primes up to N")->capture_default_str()->check(CLI::NonNegativeNumber);
    common(scan_cmd);

    std::vector<Int> order;
    Int modulus = 0;
    auto* density_cmd = app.add_subcommand("density", "Split/inert counts of primes in an imaginary quadratic order");
    density_cmd->add_option("--order", order, "Order parameters t n (w^2 = t w - n)")->expected(2)->required();
    density_cmd->add_option("--bound", opts.bound, "Count primes up to N")->capture_default_str();
    density_cmd->add_option("--modulus", modulus, "Also count primes = 1 mod M")->check(CLI::PositiveNumber);
    common(density_cmd);

    auto* toric_cmd = app.add_subcommand("toric", "Classify the toric surface of a fan file");
    toric_cmd->add_option("fan", file, "Fan file, one ray \"x y\" per line")->required();
    common(toric_cmd);

    Int p = 0;
    auto* group_cmd = app.add_subcommand("group-check", "Check the conjugation condition on a Cayley table");
    group_cmd->add_option("group", file, "Group file: order, then the Cayley table")->required();
    group_cmd->add_option("--p", p, "Prime order of the cyclic subgroup")->required();
    common(group_cmd);

    Int n_max = 10;
    auto* cm_cmd = app.add_subcommand("cm-table", "Degree-two elements of the orders Z[w] with n <= N");
    cm_cmd->add_option("--n-max", n_max, "Largest n")->capture_default_str();
    common(cm_cmd);

    bool inject = false;
    auto* verify_cmd = app.add_subcommand("verify-paper", "Run every acceptance claim");
    verify_cmd->add_flag("--inject-fault", inject, "Corrupt the k = 4 kernel element (the run must fail)");
    common(verify_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInput;
    }

    try {
        if (*classify_cmd) return cmd_classify(file, opts);
        if (*scan_cmd) return cmd_scan(file, opts);
        if (*density_cmd) return cmd_density(order, modulus, opts);
        if (*toric_cmd) return cmd_toric(file, opts);
        if (*group_cmd) return cmd_group_check(file, p, opts);
        if (*cm_cmd) return cmd_cm_table(n_max, opts);
        if (*verify_cmd) return cmd_verify(inject, opts);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
    return kExitInput;
}
