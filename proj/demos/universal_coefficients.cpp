// Prints the characteristic series of the universal elliptic genus and its values on the generators.
#include <iostream>

#include "ellgen/ellgen.hpp"

int main() {
    using namespace ellgen;
    const auto& phi = phi_ell(6);
    for (int k = 1; k <= 5; ++k) std::cout << "a" << k << " = " << phi.a(k).str() << "\n";
    for (int k = 1; k <= 4; ++k) std::cout << "K" << k << " = " << chern_poly_to_poly(phi.K(k)).str() << "\n";
    for (const char* w : {"W1", "W2", "W3", "W4", "W5", "W6", "CP2"})
        std::cout << "phi_ell(" << w << ") = " << phi.evaluate(catalog::lookup(w).cv).str() << "\n";
    std::cout << "signature series: Q = " << specialize(phi, points::signature()).Q().str() << "\n";
}
