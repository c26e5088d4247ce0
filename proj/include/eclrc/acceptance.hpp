#ifndef ECLRC_ACCEPTANCE_HPP
#define ECLRC_ACCEPTANCE_HPP

// The acceptance suite: ten exact checks over the fixtures, shared by the
// acceptance test binary and the `selftest` subcommand.

#include <cstdint>
#include <string>
#include <vector>

namespace eclrc {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0;
};

std::vector<CriterionResult> run_acceptance(std::uint64_t seed);

}  // namespace eclrc

#endif
