#ifndef SELFMAPS_VERIFY_HPP
#define SELFMAPS_VERIFY_HPP

// End-to-end checks of the classification, each against an oracle that does
// not share the code path it checks (hand-written matrices, congruences,
// complex-number evaluation, brute-force enumeration).

#include <string>
#include <vector>

namespace selfmaps {

struct ClaimResult {
    int id = 0;
    std::string name;
    std::string statement;
    bool passed = false;
    std::string detail;
    double seconds = 0.0;
};

struct VerifyOptions {
    /// Replaces the k = 4 kernel element by a wrong one; the exceptional
    /// triple check must then fail.
    bool inject_fault = false;
};

std::vector<ClaimResult> run_claims(const VerifyOptions& opts = {});

/// Individual claims, numbered as reported.
ClaimResult claim_degree_two_table();
ClaimResult claim_exceptional_triples(bool inject_fault);
ClaimResult claim_necessity_grid();
ClaimResult claim_small_k_universal();
ClaimResult claim_atiyah_obstructions();
ClaimResult claim_toric_verdicts();
ClaimResult claim_splitting_oracles();
ClaimResult claim_group_condition();
ClaimResult claim_ns_bookkeeping();

}  // namespace selfmaps

#endif
