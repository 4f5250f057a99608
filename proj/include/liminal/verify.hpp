#ifndef LIMINAL_VERIFY_HPP
#define LIMINAL_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace liminal {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    double seconds = 0;
    std::vector<std::string> details;
};

struct VerifyOptions {
    uint64_t seed = 20240911;
    std::vector<int> only;  // empty = run everything
    int threads = 1;
};

// Runs the acceptance criteria and returns one result per criterion.
std::vector<CriterionResult> run_acceptance(const VerifyOptions& opts);

std::string acceptance_report_text(const std::vector<CriterionResult>& results);
std::string acceptance_report_json(const std::vector<CriterionResult>& results);
bool acceptance_all_pass(const std::vector<CriterionResult>& results);

}  // namespace liminal

#endif
