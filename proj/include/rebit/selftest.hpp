#pragma once
// Acceptance suite: criteria 1..9 as pass/fail checks with a short detail line.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace rebit {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0;
};

struct SelftestOptions {
    std::uint64_t seed = 20240917;
    std::vector<int> only;  // empty: all criteria
    std::function<void(const CriterionResult&)> on_result;
};

CriterionResult criterion_structure();
CriterionResult criterion_restricted();
CriterionResult criterion_cohomology();
CriterionResult criterion_lifts();
CriterionResult criterion_semisimple_tables();
CriterionResult criterion_mixed_tables();
CriterionResult criterion_jordan(std::uint64_t seed, int count = 200);
CriterionResult criterion_invariants(std::uint64_t seed);
CriterionResult criterion_mu();

std::vector<CriterionResult> run_selftest(const SelftestOptions& opt = {});

}  // namespace rebit
