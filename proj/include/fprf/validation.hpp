#ifndef FPRF_VALIDATION_HPP
#define FPRF_VALIDATION_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace fprf {
namespace validation {

struct CheckResult {
    std::string name;
    double statistic;
    double threshold;
    bool pass;
};

struct ScenarioReport {
    std::string scenario;
    std::vector<CheckResult> checks;
    double elapsed_seconds = 0.0;
    bool pass = true;
};

// Deterministic given (name, seed); unknown names throw std::out_of_range.
const std::vector<std::string>& scenario_names();
ScenarioReport run_scenario(const std::string& name, std::uint64_t seed);
std::vector<ScenarioReport> run_all(std::uint64_t seed);

}  // namespace validation
}  // namespace fprf

#endif
