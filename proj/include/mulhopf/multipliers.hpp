#pragma once

#include <optional>

#include "mulhopf/check.hpp"
#include "mulhopf/semigroups.hpp"

namespace mulhopf {

// A multiplier-valued morphism f: A ⇸ B into a semigroup with non-degenerate
// surjective multiplication: a compatible pair f1: A⊗B → B, f2: B⊗A → B.
struct MMorphism {
    SpaceSignature source;
    Semigroup target;
    LinMap f1;
    LinMap f2;

    Field field() const { return f1.field(); }
};

// All three compatibility squares tying f1, f2 and the target multiplication.
CheckReport check_mmorphism(const MMorphism& f);

// Multiplicativity of both components against a semigroup structure on the
// source object.
CheckReport check_multiplicative(const MMorphism& f, const Semigroup& source);

// Both components surjective.
CheckReport check_dense(const MMorphism& f);

// Identity A ⇸ A: both components are the multiplication.
MMorphism identity_mmorphism(const Semigroup& a);

// Composition g • f of dense multiplicative morphisms via exact lifting
// through the epis 1⊗g1 and g2⊗1.
MMorphism bullet(const MMorphism& g, const MMorphism& f);

// Plain morphism z: Z → B promoted to z^#: Z ⇸ B by multiplying in.
MMorphism sharp(const LinMap& z, const Semigroup& b);

// Precomposition f ∘ z with a plain morphism z: Z → A.
MMorphism circ(const MMorphism& f, const LinMap& z);

// f^op: A ⇸ B^op, components swapped through the symmetry.
MMorphism op_mmorphism(const MMorphism& f);

// f⊗g: A⊗C ⇸ B⊗D into the tensor semigroup.
MMorphism tensor_mmorphism(const MMorphism& f, const MMorphism& g);

// Recovers the plain morphism h: A → B with f = h^#, when it exists. Uses
// the unit shortcut h = f1∘(1⊗u) when a unit is supplied or found; otherwise
// solves the defining linear system. Returns nullopt when f1 is not of the
// form m∘(h⊗1); throws Inconsistent when it is but f2 ≠ m∘(1⊗h).
std::optional<LinMap> extract_plain(const MMorphism& f,
                                    const std::optional<LinMap>& unit = std::nullopt);

}  // namespace mulhopf
