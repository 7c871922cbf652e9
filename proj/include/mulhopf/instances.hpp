#pragma once

#include "mulhopf/comodules.hpp"
#include "mulhopf/modules.hpp"

namespace mulhopf {

// A finite monoid given by its multiplication table. Inverses are present
// exactly when the monoid is a group.
struct FiniteMonoidTable {
    std::string name;
    std::size_t n = 0;
    std::vector<std::vector<std::size_t>> mul;
    std::size_t id = 0;
    std::optional<std::vector<std::size_t>> inverse;
    std::vector<std::string> element_names;
};

FiniteMonoidTable cyclic_table(std::size_t n);
FiniteMonoidTable symmetric_table(std::size_t n);
// The two-element monoid {1, z} with z·z = z; a bimonoid but not Hopf.
FiniteMonoidTable idempotent_table();

struct AlgebraInstance {
    std::string name;
    MultiplierBimonoid bim;
    std::optional<RegularStructure> regular;  // closed form when available
    std::optional<LinMap> unit;
    Semigroup semigroup() const { return induced_multiplication(bim); }
};

// Functions on a finite monoid: pointwise multiplication, comultiplication
// dual to the monoid law, counit = evaluation at the monoid identity.
AlgebraInstance function_algebra(const FiniteMonoidTable& t, Field k);

// The monoid algebra of a finite group: convolution product, diagonal
// comultiplication, counit summing coefficients. Requires inverses.
AlgebraInstance group_algebra(const FiniteMonoidTable& t, Field k);

// The regular comodule and regular module carried by an instance.
struct RegularStructures {
    Comodule comodule;
    RegularModule module;
};
RegularStructures regular_structures(const AlgebraInstance& inst);

}  // namespace mulhopf
