// Relations of the level-3 elliptic genus, their eliminant and the cusp values.
#include <iostream>

#include "ellgen/ellgen.hpp"

int main() {
    using namespace ellgen;
    for (int N = 2; N <= 4; ++N) {
        const auto& L = level_data(N);
        std::cout << "N = " << N << "\n  R_" << N - 1 << " = " << L.R_minus.str() << "\n  R_" << N + 1 << " = " << L.R_plus.str() << "\n";
        std::cout << "  eliminant = " << eliminate(L).str() << "\n  h0 = " << degree_h0(level_presentation(N)).str() << "\n";
        const auto cusps = cusp_points(N);
        for (std::size_t k = 0; k < cusps.type_i.size(); ++k) {
            const auto& p = cusps.type_i[k];
            std::cout << "  cusp k=" << k + 1 << ": (" << p.A.str() << ", " << p.B.str() << ", " << p.C.str() << ", " << p.D.str() << ")\n";
        }
    }
}
