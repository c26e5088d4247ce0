// One line per acceptance criterion; exit status 1 when any criterion fails.

#include <cstdio>
#include <cstdlib>

#include "eclrc/acceptance.hpp"

int main() {
    std::uint64_t seed = 0;
    if (const char* s = std::getenv("ECLRC_SEED")) seed = std::strtoull(s, nullptr, 10);
    int failed = 0;
    double total = 0;
    for (const auto& r : eclrc::run_acceptance(seed)) {
        std::printf("criterion %2d: %s  %s (%.2fs) -- %s\n", r.id, r.pass ? "PASS" : "FAIL", r.name.c_str(), r.seconds,
                    r.detail.c_str());
        total += r.seconds;
        if (!r.pass) ++failed;
    }
    std::printf("acceptance: %d failed, total %.2fs\n", failed, total);
    return failed ? 1 : 0;
}
