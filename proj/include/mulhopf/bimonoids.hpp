#pragma once

#include <optional>

#include "mulhopf/multipliers.hpp"

namespace mulhopf {

// A multiplier bimonoid: fusion maps t1, t2: A⊗A → A⊗A and a counit
// e: A → I, subject to the fusion equations, counit conditions and the
// compatibility law. The multiplication is induced: m = (e⊗1)∘t1.
struct MultiplierBimonoid {
    SpaceSignature space;
    LinMap t1;
    LinMap t2;
    LinMap e;

    Field field() const { return t1.field(); }
};

// Extra fusion maps t3, t4 making the bimonoid regular.
struct RegularStructure {
    LinMap t3;
    LinMap t4;
};

// Every axiom, the derived identities, and the standing assumptions
// (m non-degenerate and surjective; e, d1, d2 surjective).
CheckReport check_bimonoid(const MultiplierBimonoid& b);

Semigroup induced_multiplication(const MultiplierBimonoid& b);

// First and second comultiplication components d1: A⊗A² → A², d2: A²⊗A → A².
LinMap comultiplication_d1(const MultiplierBimonoid& b);
LinMap comultiplication_d2(const MultiplierBimonoid& b);
// d as a morphism A ⇸ A⊗A into the tensor semigroup.
MMorphism comultiplication(const MultiplierBimonoid& b);

// (A, c∘t2∘c⁻¹, c∘t1∘c⁻¹, e): the bimonoid on the opposite semigroup.
MultiplierBimonoid twist(const MultiplierBimonoid& b);

// t1 = (1⊗m)∘(h⊗1), t2 = (m⊗1)∘(1⊗h) from unital data with comultiplication
// morphism h: A → A⊗A.
MultiplierBimonoid from_unital(const Semigroup& a, const LinMap& unit, const LinMap& h,
                               const LinMap& e);

struct UnitalData {
    Semigroup base;
    LinMap unit;
    LinMap h;  // A → A⊗A
    LinMap e;
};
// Recovers unital data (h = t2∘(u⊗1)) when the induced multiplication has a
// unit; from_unital of the result reproduces t1, t2.
std::optional<UnitalData> to_unital(const MultiplierBimonoid& b);

// Solves the two mixed compatibility identities for t3 and t4, then verifies
// the full regular-structure law set; nullopt when either step fails.
std::optional<RegularStructure> infer_regular(const MultiplierBimonoid& b);

// The five regular-structure diagrams plus derived identities.
CheckReport check_regular(const MultiplierBimonoid& b, const RegularStructure& r);

// The four bimonoid-morphism diagrams for f: src ⇸ tgt (dense multiplicative
// assumed checked); with both regular structures supplied, also the mixed
// t3-t1 diagram.
CheckReport check_bimonoid_morphism(const MMorphism& f, const MultiplierBimonoid& src,
                                    const MultiplierBimonoid& tgt,
                                    const std::optional<RegularStructure>& src_reg = std::nullopt,
                                    const std::optional<RegularStructure>& tgt_reg = std::nullopt);

}  // namespace mulhopf
