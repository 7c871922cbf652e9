#pragma once

#include <optional>

#include "mulhopf/check.hpp"
#include "mulhopf/linmap.hpp"

namespace mulhopf {

// A semigroup object: a space A with an associative m: A⊗A → A.
struct Semigroup {
    SpaceSignature space;
    LinMap m;

    Field field() const { return m.field(); }
};

struct Monoid {
    Semigroup base;
    LinMap unit;  // I → A
};

CheckReport check_associative(const Semigroup& s);

// Non-degeneracy of m: both multiplication embeddings a ↦ m(a⊗-) and
// a ↦ m(-⊗a) into Lin(A,A) have zero kernel. Testing at the base field
// suffices: every failure at a general object restricts to one here.
CheckReport check_nondegenerate(const Semigroup& s);

CheckReport check_surjective(const Semigroup& s);

// (A, m∘c⁻¹): multiply in reversed order.
Semigroup opposite(const Semigroup& s);

// (A⊗B, (m_A⊗m_B)∘(1⊗c⊗1)).
Semigroup tensor_semigroup(const Semigroup& a, const Semigroup& b);

// Solves the stacked linear system m∘(u⊗1) = id = m∘(1⊗u) exactly.
std::optional<LinMap> find_unit(const Semigroup& s);

// The matrix of a ↦ m(a⊗-) as a map A → Lin(A,A) (matrix-unit basis,
// codomain index major); right=false gives a ↦ m(-⊗a).
LinMap multiplication_embedding(const Semigroup& s, bool right_leg_free);

}  // namespace mulhopf
