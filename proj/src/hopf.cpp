#include "mulhopf/hopf.hpp"

#include "mulhopf/multipliers.hpp"

namespace mulhopf {

namespace {

std::string kernel_witness(const char* label, const LinMap& t) {
    auto kb = kernel_basis(t);
    if (kb.empty()) return std::string(label) + " kernel: (empty)";
    return std::string(label) + " kernel: " + render_vector(t.dom(), kb.front());
}

}  // namespace

HopfCheck check_hopf(const MultiplierBimonoid& b) {
    HopfCheck out;
    CheckReport& r = out.report;
    const auto k = b.field();
    const auto iA = identity(k, b.space);
    const LinMap m = induced_multiplication(b).m;
    const auto d1 = comultiplication_d1(b);
    const auto d2 = comultiplication_d2(b);

    std::optional<LinMap> t1inv, t2inv;
    try {
        t1inv = inverse(b.t1);
        r.law_true("hopf.t1_invertible", true);
    } catch (const NotInvertible&) {
        r.law_true("hopf.t1_invertible", false, kernel_witness("t1", b.t1));
    }
    try {
        t2inv = inverse(b.t2);
        r.law_true("hopf.t2_invertible", true);
    } catch (const NotInvertible&) {
        r.law_true("hopf.t2_invertible", false, kernel_witness("t2", b.t2));
    }
    if (!t1inv || !t2inv) return out;

    LinMap s1 = compose(tensor(b.e, iA), *t1inv);
    LinMap s2 = compose(tensor(iA, b.e), *t2inv);

    r.law_eq("hopf.thm.a", compose(b.t1, tensor(iA, s1), tensor(b.t2, iA)), d1);
    r.law_eq("hopf.thm.b", compose(b.t2, tensor(s2, iA), tensor(iA, b.t1)), d2);
    r.law_eq("hopf.s1t1e.s1", compose(s1, b.t1), tensor(b.e, iA));
    r.law_eq("hopf.s1t1e.s2", compose(s2, b.t2), tensor(iA, b.e));

    Semigroup sg{b.space, m};
    MMorphism s{b.space, sg, s1, s2};
    r.merge("hopf.s", check_mmorphism(s));
    r.merge("hopf.s", check_multiplicative(s, opposite(sg)));
    r.merge("hopf.s", check_dense(s));

    out.antipode = Antipode{std::move(s), std::move(s1), std::move(s2)};
    return out;
}

CheckReport check_remark_epi_chain(const MultiplierBimonoid& b, const Antipode& s) {
    CheckReport r;
    const LinMap m = induced_multiplication(b).m;
    const auto d1 = comultiplication_d1(b);
    const auto d2 = comultiplication_d2(b);
    const bool pe = is_surjective(b.e);
    const bool pm = is_surjective(m);
    const bool ps1 = is_surjective(s.s1);
    const bool ps2 = is_surjective(s.s2);
    const bool pd1 = is_surjective(d1);
    const bool pd2 = is_surjective(d2);

    r.law_true("who_is_reg_epi.e_implies_m", !pe || pm, "e surjective but m not");
    r.law_true("who_is_reg_epi.m_iff_s1", pm == ps1, pm ? "m surjective, s1 not" : "s1 surjective, m not");
    r.law_true("who_is_reg_epi.s1_iff_s2", ps1 == ps2, ps1 ? "s1 surjective, s2 not" : "s2 surjective, s1 not");
    r.law_true("who_is_reg_epi.s2_implies_d1", !ps2 || pd1, "s2 surjective but d1 not");
    r.law_true("who_is_reg_epi.d1_iff_d2", pd1 == pd2, pd1 ? "d1 surjective, d2 not" : "d2 surjective, d1 not");
    return r;
}

CheckReport check_antipode_is_morphism(const MultiplierBimonoid& b, const Antipode& s,
                                       const std::optional<RegularStructure>& reg) {
    MultiplierBimonoid tw = twist(b);
    std::optional<RegularStructure> tw_reg;
    if (reg) {
        const auto k = b.field();
        const auto c = braiding(k, b.space, b.space);
        tw_reg = RegularStructure{compose(c, reg->t4, c), compose(c, reg->t3, c)};
    }
    return check_bimonoid_morphism(s.s, tw, b, tw_reg, reg);
}

PrimedAntipode compute_s_prime(const MultiplierBimonoid& b, const RegularStructure& reg) {
    const auto k = b.field();
    const auto iA = identity(k, b.space);
    const LinMap m = induced_multiplication(b).m;
    const auto d1 = comultiplication_d1(b);
    const auto d2 = comultiplication_d2(b);
    const auto cAA = braiding(k, b.space, b.space);
    const auto AA = b.space * b.space;

    LinMap t3inv = inverse(reg.t3);
    LinMap t4inv = inverse(reg.t4);
    LinMap s1p = compose(tensor(b.e, iA), t3inv);
    LinMap s2p = compose(tensor(iA, b.e), t4inv);

    CheckReport r;
    r.law_eq("s_prime.1", compose(m, tensor(s1p, iA), tensor(cAA, iA)),
             compose(m, tensor(iA, s2p), tensor(iA, cAA)));
    r.law_eq("s_prime.2",
             compose(reg.t3, tensor(iA, s1p), tensor(reg.t4, iA), braiding(k, AA, b.space)), d2);
    r.law_eq("s_prime.3",
             compose(reg.t4, tensor(s2p, iA), tensor(iA, reg.t3), braiding(k, b.space, AA)), d1);

    Semigroup op = opposite(Semigroup{b.space, m});
    MMorphism sp{b.space, op, s1p, s2p};
    return PrimedAntipode{std::move(sp), std::move(s1p), std::move(s2p), std::move(r)};
}

CheckReport check_s_inverse(const MultiplierBimonoid& b, const RegularStructure& reg,
                            const Antipode& s, const PrimedAntipode& sp) {
    CheckReport r;
    const auto k = b.field();
    const auto iA = identity(k, b.space);
    const LinMap m = induced_multiplication(b).m;
    const auto cAA = braiding(k, b.space, b.space);
    const auto mop = compose(m, cAA);

    // s • s' lands in A with both components the plain multiplication.
    MMorphism ssp = bullet(s.s, sp.s_prime);
    r.law_eq("s_inverse.left.f1", ssp.f1, m);
    r.law_eq("s_inverse.left.f2", ssp.f2, m);

    // s' • s lands in A^op.
    MMorphism sps = bullet(sp.s_prime, s.s);
    r.law_eq("s_inverse.right.f1", sps.f1, mop);
    r.law_eq("s_inverse.right.f2", sps.f2, mop);

    // Mixed fusion identity relating t1 and t3.
    r.law_eq("s_inverse.t1t3",
             compose(tensor(reg.t3, iA), tensor(iA, b.t1), tensor(cAA, iA), tensor(iA, b.t1)),
             compose(tensor(iA, b.t1), tensor(reg.t3, iA), tensor(cAA, iA)));
    return r;
}

PlainAntipode extract_sbar(const MultiplierBimonoid& b, const Antipode& s,
                           const PrimedAntipode& sp, const std::optional<LinMap>& unit) {
    CheckReport r;
    const auto k = b.field();
    const LinMap m = induced_multiplication(b).m;
    const auto cAA = braiding(k, b.space, b.space);

    std::optional<LinMap> sbar = extract_plain(s.s, unit);
    r.law_true("reg_antipode.sbar_exists", sbar.has_value());
    std::optional<LinMap> sbarp = extract_plain(sp.s_prime, unit);
    r.law_true("reg_antipode.sbar_prime_exists", sbarp.has_value());
    if (!sbar || !sbarp) throw Inconsistent("antipode has no plain form");

    const auto idA = identity(k, b.space);
    r.law_eq("reg_antipode.inverse.left", compose(*sbar, *sbarp), idA);
    r.law_eq("reg_antipode.inverse.right", compose(*sbarp, *sbar), idA);
    r.law_eq("reg_antipode.counit", compose(b.e, *sbar), b.e);
    r.law_eq("reg_antipode.antimultiplicative", compose(*sbar, m, cAA),
             compose(m, tensor(*sbar, *sbar)));

    return PlainAntipode{std::move(*sbar), std::move(*sbarp), std::move(r)};
}

}  // namespace mulhopf
