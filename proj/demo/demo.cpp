/*
   Copyright 2026 The seedrel Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

// Walks GL2 with mu = (1,0) through the pipeline. Scalars print in v, v^2 = q.

#include <iostream>
#include <memory>

#include "seedrel/affine_hecke.hpp"
#include "seedrel/coset_oracle.hpp"
#include "seedrel/satake.hpp"
#include "seedrel/spectral.hpp"

using namespace seedrel;

int main() {
    const auto gl2 = std::make_shared<const RootDatum>(RootDatum::builtin("GL2"));
    const ConjugacyClass cc = ConjugacyClass::make(gl2, {1, 0});

    SatakeEngine satake(gl2);
    const HeckePolynomial h = hecke_polynomial(satake, cc);
    std::cout << "Hecke polynomial, degree " << h.degree() << "\n";
    for (int k = h.degree(); k >= 0; --k)
        std::cout << "  X^" << k << ": " << h.coeffs[static_cast<std::size_t>(k)].str() << "\n";

    std::cout << "dotted Satake image of f_(2,0): " << satake.basis_image({2, 0}).str() << "\n";
    std::cout << "f_(1,0) * f_(1,0) = "
              << satake.multiply(SphericalElement::basis({1, 0}), SphericalElement::basis({1, 0})).str() << "\n";

    std::cout << "annihilation: " << (check_annihilation(cc).pass ? "zero" : "nonzero") << "\n";

    HeckeAlgebra H(gl2);
    const SeedReport seed = check_seed_relation(H, cc);
    std::cout << "seed relation: " << (seed.pass ? "zero" : "nonzero") << " after " << seed.term_count << " T-terms\n";
    const SeedReport broken = check_seed_relation(H, cc, Perturbation{0, 1});
    std::cout << "with q times the constant term: " << (broken.pass ? "zero" : "nonzero") << "\n";

    const NumericReport numeric = verify_numeric(OracleConfig{2, 3, 2}, cc);
    std::cout << "coset oracle at p = 3: " << numeric.cosets_tested << " cosets, " << numeric.failures << " nonzero\n";
    return seed.pass && !broken.pass && numeric.pass ? 0 : 1;
}
