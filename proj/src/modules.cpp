#include "mulhopf/modules.hpp"

#include "mulhopf/multipliers.hpp"

namespace mulhopf {

CheckReport check_semigroup_module(const Semigroup& a, const SemigroupModule& mod,
                                   const std::optional<LinMap>& unit) {
    CheckReport r;
    const auto k = a.field();
    const auto iA = identity(k, a.space);
    const auto iV = identity(k, mod.space);
    const auto& v = mod.action;
    const std::size_t dV = mod.space.total();
    const std::size_t dA = a.space.total();

    r.law_eq("module.associative", compose(v, tensor(v, iA)), compose(v, tensor(iV, a.m)));
    r.law_surjective("module.surjective", v);

    // x ↦ v(x⊗-) as a map V → Lin(A, V).
    LinMap n(k, mod.space, SpaceSignature::simple("LinAV", dV * dA));
    for (std::size_t j = 0; j < dV; ++j)
        for (std::size_t rr = 0; rr < dV; ++rr)
            for (std::size_t aa = 0; aa < dA; ++aa)
                n.at(rr * dA + aa, j) = v.at(rr, j * dA + aa);
    r.law_injective("module.nondegenerate", n);

    if (unit) {
        const bool unital = entries_equal(compose(v, tensor(iV, *unit)), iV);
        const bool epi = is_surjective(v);
        r.law_true("action_epi.biconditional", unital == epi,
                   unital ? "unital but action not surjective"
                          : "action surjective but not unital");
    }
    return r;
}

CheckReport check_module_morphism(const Semigroup& a, const LinMap& f,
                                  const SemigroupModule& src, const SemigroupModule& tgt) {
    CheckReport r;
    r.law_eq("module_morphism", compose(f, src.action),
             compose(tgt.action, tensor(f, identity(f.field(), a.space))));
    return r;
}

LinMap lift_v2(const MultiplierBimonoid& b, const SemigroupModule& mod) {
    const auto k = b.field();
    const auto iA = identity(k, b.space);
    const auto iV = identity(k, mod.space);
    const auto& v = mod.action;

    LinMap epi = tensor(v, iA);
    LinMap v2 = solve_through_epi(compose(epi, tensor(iV, b.t2)), epi);
    if (!entries_equal(compose(tensor(iV, b.e), v2), v))
        throw Inconsistent("lifted action v2 fails its counit round trip");
    return v2;
}

LinMap lift_v3(const MultiplierBimonoid& b, const RegularStructure& reg,
               const SemigroupModule& mod) {
    const auto k = b.field();
    const auto iA = identity(k, b.space);
    const auto iV = identity(k, mod.space);
    const auto& v = mod.action;
    const auto cAV = braiding(k, b.space, mod.space);
    const auto cVA = braiding(k, mod.space, b.space);

    LinMap epi = compose(tensor(iA, v), tensor(iA, cAV));
    LinMap v3 = solve_through_epi(compose(epi, tensor(reg.t3, iV)), epi);
    if (!entries_equal(compose(tensor(b.e, iV), v3, cVA), v))
        throw Inconsistent("lifted action v3 fails its counit round trip");
    return v3;
}

RegularModule lift_module(const MultiplierBimonoid& b, const RegularStructure& reg,
                          const SemigroupModule& mod) {
    return RegularModule{mod, lift_v2(b, mod), lift_v3(b, reg, mod)};
}

CheckReport check_regular_module(const MultiplierBimonoid& b, const RegularStructure& reg,
                                 const RegularModule& rm,
                                 const std::optional<LinMap>& unit) {
    CheckReport r;
    const auto k = b.field();
    const auto A = b.space;
    const auto V = rm.base.space;
    const auto iA = identity(k, A);
    const auto iV = identity(k, V);
    const auto cAA = braiding(k, A, A);
    const auto cVA = braiding(k, V, A);
    const auto& v = rm.base.action;
    const auto& v2 = rm.v2;
    const auto& v3 = rm.v3;

    Semigroup sg = induced_multiplication(b);
    r.merge("", check_semigroup_module(sg, rm.base, unit));

    r.law_eq("v_v2", compose(v2, tensor(v, iA)),
             compose(tensor(v, iA), tensor(iV, b.t2)));
    r.law_eq("v_v3", compose(v3, tensor(iA, v), tensor(iA, braiding(k, A, V))),
             compose(tensor(iA, v), tensor(iA, braiding(k, A, V)), tensor(reg.t3, iV)));
    r.law_eq("v2.counit", compose(tensor(iV, b.e), v2), v);
    r.law_eq("v3.counit", compose(tensor(b.e, iV), v3, cVA), v);

    r.law_eq("t_2_module",
             compose(tensor(iV, b.t2), tensor(iV, cAA), tensor(v2, iA), tensor(iV, cAA),
                     tensor(v2, iA)),
             compose(tensor(v2, iA), tensor(iV, b.t2)));
    r.law_eq("t_3_module",
             compose(tensor(reg.t3, iV), tensor(cAA, iV), tensor(iA, v3), tensor(cAA, iV),
                     tensor(iA, v3)),
             compose(tensor(iA, v3), tensor(reg.t3, iV)));

    r.law_eq("module_compatibility.1", compose(tensor(iV, reg.t3), tensor(v2, iA)),
             compose(tensor(v2, iA), tensor(iV, reg.t3)));
    r.law_eq("module_compatibility.2", compose(tensor(b.t2, iV), tensor(iA, v3)),
             compose(tensor(iA, v3), tensor(b.t2, iV)));
    r.law_eq("module_compatibility.3", compose(tensor(b.e, iV), v3, cVA),
             compose(tensor(iV, b.e), v2));

    r.law_eq("lift.v2", lift_v2(b, rm.base), v2);
    r.law_eq("lift.v3", lift_v3(b, reg, rm.base), v3);
    return r;
}

RegularModule regular_module(const MultiplierBimonoid& b, const RegularStructure& reg) {
    SemigroupModule base{b.space, induced_multiplication(b).m};
    RegularModule rm{base, b.t2, reg.t3};
    // The fusion maps themselves are the lifts of the regular action; fail
    // loudly if that breaks rather than returning a bogus structure.
    if (!entries_equal(lift_v2(b, base), b.t2) || !entries_equal(lift_v3(b, reg, base), reg.t3))
        throw Inconsistent("regular action lifts disagree with the fusion maps");
    return rm;
}

RestrictedModule restrict_module(const MMorphism& f, const Semigroup& src,
                                 const SemigroupModule& mod) {
    const auto k = f.field();
    const auto iV = identity(k, mod.space);
    const auto iA = identity(k, f.source);
    const auto iB = identity(k, f.target.space);
    const auto& v = mod.action;

    LinMap epi = tensor(v, iA);
    LinMap fv = solve_through_epi(compose(v, tensor(iV, f.f2)), epi);

    CheckReport r;
    r.law_eq("f_star.companion", compose(v, tensor(fv, iB)), compose(v, tensor(iV, f.f1)));
    SemigroupModule out{mod.space, std::move(fv)};
    r.merge("f_star", check_semigroup_module(src, out));
    return RestrictedModule{std::move(out), std::move(r)};
}

TensorModule tensor_module(const MultiplierBimonoid& b, const SemigroupModule& mv,
                           const RegularModule& mw) {
    const auto k = b.field();
    const auto A = b.space;
    const auto V = mv.space;
    const auto W = mw.base.space;
    const auto iA = identity(k, A);
    const auto iV = identity(k, V);
    const auto iW = identity(k, W);
    const auto cWA = braiding(k, W, A);
    const auto& v = mv.action;
    const auto& w = mw.base.action;
    const auto& w2 = mw.v2;

    LinMap psi = compose(tensor(v, iW), tensor(iV, cWA), tensor(iV, w2));

    CheckReport r;
    r.law_eq("psi_w", compose(psi, tensor(iV, w, iA)),
             compose(tensor(v, iW), tensor(iV, cWA), tensor(iV, w, iA),
                     tensor(iV, iW, b.t2)));
    r.law_eq("psi_v", compose(tensor(v, iW), tensor(iV, cWA), tensor(psi, iA)),
             compose(tensor(v, iW), tensor(iV, cWA), tensor(iV, w, iA),
                     tensor(iV, iW, b.t1)));
    r.law_surjective("psi.surjective", psi);
    return TensorModule{SemigroupModule{V * W, std::move(psi)}, std::move(r)};
}

DualModule dual_module(const MultiplierBimonoid& b, const RegularStructure& reg,
                       const Antipode& s, const SemigroupModule& mod) {
    const auto k = b.field();
    const auto A = b.space;
    const auto V = mod.space;
    const auto iA = identity(k, A);
    const auto iV = identity(k, V);

    Semigroup sg = induced_multiplication(b);
    Semigroup op = opposite(sg);
    RestrictedModule sv = restrict_module(s.s, op, mod);

    Duality d = make_duality(k, V);
    const auto iVb = identity(k, d.dual);
    LinMap vbar = compose(tensor(d.eps, iVb), tensor(iVb, sv.mod.action, iVb),
                          tensor(iVb, braiding(k, A, V), iVb), tensor(iVb, iA, d.eta));
    if (!is_surjective(vbar)) throw NotSurjective("dual action is not surjective");

    SemigroupModule dual{d.dual, std::move(vbar)};

    CheckReport r;
    r.merge("dual_module", check_semigroup_module(sg, dual));

    RegularModule dual_reg = lift_module(b, reg, dual);
    RegularModule base_reg = lift_module(b, reg, mod);
    TensorModule vvb = tensor_module(b, mod, dual_reg);
    TensorModule vbv = tensor_module(b, dual, base_reg);

    r.law_eq("dual_module.eta", compose(vvb.mod.action, tensor(d.eta, iA)),
             compose(d.eta, b.e));
    r.law_eq("dual_module.eps", compose(d.eps, vbv.mod.action),
             compose(b.e, tensor(d.eps, iA)));
    r.law_eq("dual_module.snake.v",
             compose(tensor(iV, d.eps), tensor(d.eta, iV)), iV);
    r.law_eq("dual_module.snake.dual",
             compose(tensor(d.eps, iVb), tensor(iVb, d.eta)), iVb);
    return DualModule{std::move(dual), std::move(r)};
}

}  // namespace mulhopf
