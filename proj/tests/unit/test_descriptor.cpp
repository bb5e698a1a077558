#include <doctest.h>

#include <sstream>

#include "selfmaps/descriptor.hpp"

using namespace selfmaps;

namespace {

const std::filesystem::path data_dir = SELFMAPS_TEST_DATA;

SurfaceDescriptor parse(const std::string& text)
{
    std::istringstream in(text);
    return parse_descriptor(in, data_dir);
}

int error_line(const std::string& text)
{
    try {
        parse(text);
    } catch (const DescriptorError& e) {
        return e.line();
    }
    FAIL("descriptor was accepted");
    return -1;
}

}  // namespace

TEST_CASE("classification of the simple families")
{
    for (const char* fam : {"abelian", "hyperelliptic", "kodaira_one"}) {
        const auto v = classify(parse(std::string("family = ") + fam + "\n"));
        CHECK(std::holds_alternative<InfinitelyManyMissing>(v));
    }
}

TEST_CASE("elliptic bundle descriptors")
{
    const auto d = parse("# E_i, k = 5\nfamily = elliptic_bundle\ncurve = cm\nt = 0\nn = 1\n"
                         "bundle = split_torsion\nk = 5\nL = 1 2\n");
    CHECK(std::holds_alternative<AllDegrees>(classify(d)));
    CHECK(describe(d).find("exact order 5") != std::string::npos);

    const auto comma = parse("family = elliptic_bundle\ncurve = nocm\nbundle = split_torsion\nk = 6\nL = 1,0\n");
    CHECK(std::holds_alternative<MissingPrimes>(classify(comma)));

    CHECK(std::holds_alternative<SquaresOnly>(
        classify(parse("family = elliptic_bundle\ncurve = nocm\nbundle = split_degree\ndegree = -3\n"))));
    CHECK(std::holds_alternative<MissingPrimes>(
        classify(parse("family = elliptic_bundle\ncurve = nocm\nbundle = atiyah_a1\n"))));
    CHECK(std::holds_alternative<InfinitelyManyMissing>(
        classify(parse("family = elliptic_bundle\ncurve = cm\nt=1\nn=1\nbundle = split_nontorsion\n"))));
}

TEST_CASE("descriptor files")
{
    CHECK(std::holds_alternative<AllDegrees>(classify(load_descriptor(data_dir / "gaussian_k5.desc"))));
    CHECK(std::holds_alternative<SquaresOnly>(classify(load_descriptor(data_dir / "p2.desc"))));
    CHECK(std::holds_alternative<InfinitelyManyMissing>(classify(load_descriptor(data_dir / "abelian.desc"))));
    CHECK(std::holds_alternative<GroupConditionHolds>(classify(load_descriptor(data_dir / "semidirect5.desc"))));
    CHECK_THROWS_AS(load_descriptor(data_dir / "missing.desc"), DescriptorError);
}

TEST_CASE("high genus bundles")
{
    const auto v = classify(parse("family = high_genus_bundle\ngroup_file = z5.group\np = 5\n"));
    const auto* inf = std::get_if<InfinitelyManyMissing>(&v);
    REQUIRE(inf);
    // residues 2 and 3 mod 5 are not covered
    for (Int q : inf->listed_missing) CHECK((q % 5 == 2 || q % 5 == 3));
    CHECK(inf->listed_missing.front() == 2);
    CHECK_THROWS_AS(classify(parse("family = high_genus_bundle\ngroup_file = z5.group\np = 3\n")),
                    DescriptorError);
}

TEST_CASE("errors carry line numbers")
{
    CHECK(error_line("family = elliptic_bundle\ncurve = cm\nbundle split_torsion\n") == 3);
    CHECK(error_line("family = abelian\nfamily = toric\n") == 2);
    CHECK(error_line("family = abelian\n\ncurve = cm\n") == 3);
    CHECK(error_line("family = surface\n") == 1);
    CHECK(error_line("family = elliptic_bundle\ncurve = nocm\nbundle = split_torsion\nk = x\nL = 1 0\n") == 4);
    CHECK(error_line("family = elliptic_bundle\ncurve = nocm\nbundle = split_torsion\nk = 5\nL = 1\n") == 5);
    CHECK(error_line("family = elliptic_bundle\ncurve = cm\nt = 3\nn = 1\nbundle = atiyah_a0\n") == 3);
    CHECK(error_line("family = elliptic_bundle\ncurve = nocm\nt = 0\nbundle = atiyah_a0\n") == 3);
    CHECK(error_line("family = elliptic_bundle\ncurve = nocm\nbundle = atiyah_a0\nk = 4\n") == 4);
    CHECK(error_line("family = elliptic_bundle\ncurve = nocm\nbundle = split_degree\ndegree = 0\n") == 4);
    CHECK(error_line("family = toric\nfan_file = nowhere.fan\n") == 2);
    CHECK(error_line("family = high_genus_bundle\ngroup_file = z5.group\np = 4\n") == 3);
    CHECK(error_line("family = elliptic_bundle\ncurve = nocm\nbundle = split_torsion\nk = 0\nL = 0 0\n") == 4);
    CHECK(error_line("= 3\n") == 1);
}

TEST_CASE("missing keys are reported")
{
    CHECK_THROWS_WITH_AS(parse("family = elliptic_bundle\ncurve = nocm\n"), doctest::Contains("bundle"),
                         DescriptorError);
    CHECK_THROWS_WITH_AS(parse("curve = nocm\n"), doctest::Contains("family"), DescriptorError);
}
