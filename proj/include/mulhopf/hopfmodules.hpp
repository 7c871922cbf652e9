#pragma once

#include "mulhopf/comodules.hpp"
#include "mulhopf/modules.hpp"

namespace mulhopf {

// A Hopf module: a comodule and a lifted module on the same space whose
// structure maps satisfy the two exchange squares.
struct HopfModule {
    Comodule com;
    RegularModule mod;
};

CheckReport check_hopf_module(const MultiplierBimonoid& b, const RegularStructure& reg,
                              const HopfModule& h);

// The free Hopf module X⊗A with both structure families induced by the
// fusion maps.
HopfModule free_hopf_module(const MultiplierBimonoid& b, const RegularStructure& reg,
                            const SpaceSignature& x);

// Internal hom [A,V] in coordinates; eps is the evaluation A⊗[A,V] → V.
struct InternalHom {
    SpaceSignature hom;
    LinMap eps;
};
InternalHom internal_hom(Field k, const SpaceSignature& a, const SpaceSignature& v);
// The unit W → [A, A⊗W] of the tensor-hom adjunction.
LinMap hom_unit(Field k, const SpaceSignature& a, const SpaceSignature& w);
// Postcomposition [A,f]: [A,V] → [A,W] for f: V → W.
LinMap hom_post(Field k, const SpaceSignature& a, const LinMap& f);

// Coinvariants of a Hopf module, carved out as the image of the canonical
// map w: V → [A,V] built from the inverted coaction.
struct Coinvariants {
    SpaceSignature space;
    LinMap project;  // V -> coinvariants
    LinMap include;  // coinvariants -> [A,V]
    LinMap w;        // V -> [A,V]
};
Coinvariants coinvariants(const MultiplierBimonoid& b, const HopfModule& h);

// The mutually inverse pair between V and coinvariants⊗A, with morphism laws
// of the comparison in both structure families.
struct IsoPair {
    LinMap n;       // coinvariants⊗A -> V
    LinMap ntilde;  // V -> coinvariants⊗A
    CheckReport report;
};
IsoPair iso_pair(const MultiplierBimonoid& b, const RegularStructure& reg, const HopfModule& h,
                 const Coinvariants& coin);

// Full battery: free Hopf modules on fixed small spaces, the tensor-built
// Hopf module on A⊗A, coinvariant dimensions, the unit isomorphism with its
// uniqueness square, the counit isomorphism pair, and naturality of the
// comparison.
CheckReport fthm_check(const MultiplierBimonoid& b, const RegularStructure& reg);

}  // namespace mulhopf
