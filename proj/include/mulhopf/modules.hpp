#pragma once

#include "mulhopf/hopf.hpp"

namespace mulhopf {

// A right module (V, v) over the plain multiplication: v: V⊗A → V.
struct SemigroupModule {
    SpaceSignature space;
    LinMap action;
};

// A module together with the lifted structure maps v2: V⊗A → V⊗A and
// v3: A⊗V → A⊗V through the fusion maps.
struct RegularModule {
    SemigroupModule base;
    LinMap v2;
    LinMap v3;
};

// Associativity, surjectivity, non-degeneracy; when a unit is supplied, the
// biconditional "unital iff the action is surjective".
CheckReport check_semigroup_module(const Semigroup& a, const SemigroupModule& mod,
                                   const std::optional<LinMap>& unit = std::nullopt);

CheckReport check_module_morphism(const Semigroup& a, const LinMap& f,
                                  const SemigroupModule& src, const SemigroupModule& tgt);

// Unique lifts through the action epimorphism; each verifies its defining
// square and its counit round trip, throwing Inconsistent on failure.
LinMap lift_v2(const MultiplierBimonoid& b, const SemigroupModule& mod);
LinMap lift_v3(const MultiplierBimonoid& b, const RegularStructure& reg,
               const SemigroupModule& mod);
RegularModule lift_module(const MultiplierBimonoid& b, const RegularStructure& reg,
                          const SemigroupModule& mod);

// Fusion-compatibility laws of the lifted maps, the three mixed
// compatibility squares, counit round trips, and agreement with fresh lifts.
CheckReport check_regular_module(const MultiplierBimonoid& b, const RegularStructure& reg,
                                 const RegularModule& rm,
                                 const std::optional<LinMap>& unit = std::nullopt);

RegularModule regular_module(const MultiplierBimonoid& b, const RegularStructure& reg);

// Restriction along f: A ⇸ B of a module over B; the action is the unique
// solution through the epimorphism, and the report verifies the companion
// square and the module laws over the source.
struct RestrictedModule {
    SemigroupModule mod;
    CheckReport report;
};
RestrictedModule restrict_module(const MMorphism& f, const Semigroup& src,
                                 const SemigroupModule& mod);

// Tensor product of a module with a lifted module; the report verifies the
// two exchange squares for the combined action and its surjectivity.
struct TensorModule {
    SemigroupModule mod;
    CheckReport report;
};
TensorModule tensor_module(const MultiplierBimonoid& b, const SemigroupModule& mv,
                           const RegularModule& mw);

// Dual module via the antipode; throws NotSurjective when the dual action
// fails surjectivity. The report carries the module laws and the duality
// unit/counit morphism laws with the snake identities.
struct DualModule {
    SemigroupModule mod;
    CheckReport report;
};
DualModule dual_module(const MultiplierBimonoid& b, const RegularStructure& reg,
                       const Antipode& s, const SemigroupModule& mod);

}  // namespace mulhopf
