// Zigzag algebra with two vertices: pseudotrace against phi_W on e1*A.
#include <iostream>

#include "fdalg/fdalg.hpp"

int main() {
    using namespace fdalg;
    ZooEntry n2 = zigzag_2();
    AlgebraPtr alg = n2.algebra();
    SymmetricContext ctx = build_context(alg, *n2.canonical_phi);
    OmegaBasis omega = build_omega(ctx);
    std::cout << "Omega basis full: " << (omega.full ? "yes" : "no") << "\n";

    Submodule e1a = right_ideal_module(alg, ctx.idempotents[0]);
    std::vector<Matrix> endos = hom_space(e1a.module, e1a.module);
    for (std::size_t k = 0; k < endos.size(); ++k) {
        EqualityCheck eq = check_equality_theorem(ctx, omega, e1a.module, endos[k]);
        std::cout << "End basis " << k << ": pseudotrace " << eq.pseudo << ", phi_W " << eq.phi_w
                  << (eq.agree() ? "" : "  MISMATCH") << "\n";
    }
}
