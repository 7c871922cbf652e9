#pragma once

#include "mulhopf/bimonoids.hpp"

namespace mulhopf {

// The antipode of a multiplier Hopf monoid: a morphism s: A^op ⇸ A with
// components s1 = (e⊗1)∘t1⁻¹ and s2 = (1⊗e)∘t2⁻¹.
struct Antipode {
    MMorphism s;
    LinMap s1;
    LinMap s2;
};

struct HopfCheck {
    CheckReport report;
    std::optional<Antipode> antipode;  // absent iff t1 or t2 is singular
};

// Inverts the fusion maps and verifies the two antipode diagrams, the
// composite identities s1∘t1 = e⊗1 and s2∘t2 = 1⊗e, density of s, and the
// morphism laws of s against the opposite multiplication. On failure of
// invertibility the report carries a rendered kernel vector.
HopfCheck check_hopf(const MultiplierBimonoid& b);

// The surjectivity chain: e ⇒ m ⇔ s1 ⇔ s2 ⇒ d1 ⇔ d2. One law per link.
CheckReport check_remark_epi_chain(const MultiplierBimonoid& b, const Antipode& s);

// s as a bimonoid morphism twist(B) → B (plus density/multiplicativity of s
// itself, which the morphism notion presumes).
CheckReport check_antipode_is_morphism(const MultiplierBimonoid& b, const Antipode& s,
                                       const std::optional<RegularStructure>& reg = std::nullopt);

// The primed antipode s' = ((e⊗1)∘t3⁻¹, (1⊗e)∘t4⁻¹): A ⇸ A^op.
struct PrimedAntipode {
    MMorphism s_prime;
    LinMap s1p;
    LinMap s2p;
    CheckReport report;  // the three defining diagrams
};
// Throws NotInvertible when t3 or t4 is singular.
PrimedAntipode compute_s_prime(const MultiplierBimonoid& b, const RegularStructure& reg);

// s • s' = identity = s' • s, and the mixed t1/t3 fusion identity.
CheckReport check_s_inverse(const MultiplierBimonoid& b, const RegularStructure& reg,
                            const Antipode& s, const PrimedAntipode& sp);

// Plain antipodes: s = sbar^#, s' = sbar'^#; mutually inverse, counital,
// antimultiplicative.
struct PlainAntipode {
    LinMap sbar;
    LinMap sbar_prime;
    CheckReport report;
};
PlainAntipode extract_sbar(const MultiplierBimonoid& b, const Antipode& s,
                           const PrimedAntipode& sp,
                           const std::optional<LinMap>& unit = std::nullopt);

}  // namespace mulhopf
