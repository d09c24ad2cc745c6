// q-expansion of the elliptic genus of a K3 surface and a few SU manifolds.
#include <iostream>

#include "ellgen/ellgen.hpp"

int main() {
    using namespace ellgen;
    std::cout << "K3:\n" << laurent_qseries_str(chi_y_loop(catalog::lookup("W2").cv, 3));
    for (const char* w : {"W4", "W5"}) {
        const auto s = chi_y_loop(catalog::lookup(w).cv, 2);
        std::cout << w << ":\n" << laurent_qseries_str(s) << "  integral: " << (integrality_check(s).ok ? "yes" : "no") << "\n";
    }
    const auto e = extract_qi(cyclotomic_y(2), 4);
    std::cout << "level 2: B = " << e.abcd.B.str("q") << "\n         D = " << e.abcd.D.str("q") << "\n";
}
