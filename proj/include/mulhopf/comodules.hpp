#pragma once

#include "mulhopf/hopf.hpp"

namespace mulhopf {

// A comodule (V, v1, v3) over a regular multiplier bimonoid: both structure
// maps act on V⊗A.
struct Comodule {
    SpaceSignature space;
    LinMap v1;
    LinMap v3;
};

// Fusion + counit laws for both legs, the mixed compatibility square, the
// module-map laws of v1/v3 over the plain multiplication, and the
// biconditional tying the two fusion/counit pairs together.
CheckReport check_comodule(const MultiplierBimonoid& b, const RegularStructure& reg,
                           const Comodule& c);

// Intertwining of a linear map with both structure maps.
CheckReport check_comodule_morphism(const MultiplierBimonoid& b, const LinMap& f,
                                    const Comodule& src, const Comodule& tgt);

Comodule regular_comodule(const MultiplierBimonoid& b, const RegularStructure& reg);
Comodule trivial_comodule(const MultiplierBimonoid& b, const SpaceSignature& v);

// Pushforward along f: A ⇸ B; each structure map is the unique solution of
// its defining square through an epimorphism. The report carries the
// non-degeneracy compatibility of the result.
struct ComodulePush {
    Comodule com;
    CheckReport report;
};
ComodulePush pushforward(const MMorphism& f, const Comodule& c);

// Pushforward along g: A^op ⇸ B; the two structure maps trade places.
ComodulePush pushforward_op(const MMorphism& g, const Comodule& c);

// (s_* v)¹ is a two-sided inverse of v¹.
struct CoactionInverse {
    LinMap inv;
    CheckReport report;
};
CoactionInverse coaction_inverse(const Antipode& s, const Comodule& c);

// Convolution-inverse laws for a pair f: A ⇸ B, g: A^op ⇸ B acting on the
// regular comodule, plus the equivalence of the one-sided formulations.
CheckReport check_conv_inverse(const MultiplierBimonoid& b, const RegularStructure& reg,
                               const MMorphism& f, const MMorphism& g);

// The functional form of a comodule: q: V̄⊗V ⇸ A together with the comonoid
// structure (γ, ζ) on V̄⊗V.
struct QMorphism {
    MMorphism q;
    LinMap gamma;
    LinMap zeta;
    Duality dual;
};
QMorphism to_q(const MultiplierBimonoid& b, const Comodule& c);
Comodule from_q(const QMorphism& qm);

// Counit/comultiplication exchange laws for q, its morphism laws, and the
// bullet characterizations against e and the comultiplication.
CheckReport check_q(const MultiplierBimonoid& b, const QMorphism& qm);

// Intertwining of f: V → W expressed through the functional forms.
CheckReport check_q_morphism(const LinMap& f, const QMorphism& qv, const QMorphism& qw);

// Tensor product comodule; the report verifies the functional form of the
// result against the composite built from the factors' functional forms.
struct TensorComodule {
    Comodule com;
    CheckReport report;
};
TensorComodule tensor_comodule(const MultiplierBimonoid& b, const Comodule& cv,
                               const Comodule& cw);

// Dual comodule via the antipode; the report verifies that the duality unit
// and counit are comodule morphisms and that the snake identities hold.
struct DualComodule {
    Comodule com;
    Duality duality;
    CheckReport report;
};
DualComodule dual_comodule(const MultiplierBimonoid& b, const Antipode& s, const Comodule& c);

}  // namespace mulhopf
