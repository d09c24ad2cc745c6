#include <chrono>
#include <cstdio>

#include "ellgen/ellgen.hpp"

int main() {
    bool all = true;
    for (int id = 1; id <= static_cast<int>(ellgen::acceptance_criteria().size()); ++id) {
        const auto t0 = std::chrono::steady_clock::now();
        const auto r = ellgen::run_criterion(id);
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::printf("criterion %2d: %s  %s (%s, %.2fs)\n", r.id, r.pass ? "PASS" : "FAIL", r.title.c_str(), r.detail.c_str(), secs);
        all = all && r.pass;
    }
    return all ? 0 : 1;
}
