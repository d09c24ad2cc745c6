// Change of classical and level-N genera under blow-ups along various centers.
#include <iostream>

#include "ellgen/ellgen.hpp"

int main() {
    using namespace ellgen;
    for (const char* g : {"todd", "signature", "euler"}) {
        const auto spec = classical_genus(g, 6);
        for (int q = 2; q <= 4; ++q) {
            BlowupInput<Rational> in{cp_model(2), {}, spec};
            for (int i = 0; i < q; ++i) in.roots.push_back(hyperplane_multiple(in.center, 1));
            std::cout << g << ", center CP2, codim " << q << ": defect " << genus_defect(in).str() << "\n";
        }
    }
    for (auto& c : verify_blowup_invariance(2))
        std::cout << "level " << c.N << ", " << c.label << ": " << (c.defect_zero ? "0" : c.defect) << "\n";
}
