#pragma once
#include <string>
#include <vector>

namespace limtower {

/* The acceptance criteria, all exact (zero tolerance), each runnable at desk
 * scale. run_acceptance executes criteria 1..7 with fixed seeds, then re-runs
 * them and compares the serialized results byte for byte (criterion 8). */
struct CriterionResult {
    std::string name;
    bool pass;
    std::string details;
};

std::vector<CriterionResult> acceptance_criteria(std::uint64_t seed_base = 1);
std::string serialize_results(const std::vector<CriterionResult>& results);
std::vector<CriterionResult> run_acceptance();

} // namespace limtower
