#include "mulhopf/comodules.hpp"

#include "mulhopf/multipliers.hpp"

namespace mulhopf {

CheckReport check_comodule(const MultiplierBimonoid& b, const RegularStructure& reg,
                           const Comodule& c) {
    CheckReport r;
    const auto k = b.field();
    const auto A = b.space;
    const auto V = c.space;
    const auto iA = identity(k, A);
    const auto iV = identity(k, V);
    const LinMap m = induced_multiplication(b).m;
    const auto cVA = braiding(k, V, A);
    const auto cAV = braiding(k, A, V);

    r.law_eq("t_1_comodule.fusion",
             compose(tensor(c.v1, iA), tensor(cAV, iA), tensor(iA, c.v1), tensor(cVA, iA),
                     tensor(iV, b.t1)),
             compose(tensor(iV, b.t1), tensor(c.v1, iA)));
    r.law_eq("t_1_comodule.counit", compose(tensor(iV, b.e), c.v1), tensor(iV, b.e));
    r.law_eq("t_3_comodule.fusion",
             compose(tensor(c.v3, iA), tensor(cAV, iA), tensor(iA, c.v3), tensor(cVA, iA),
                     tensor(iV, reg.t3)),
             compose(tensor(iV, reg.t3), tensor(c.v3, iA)));
    r.law_eq("t_3_comodule.counit", compose(tensor(iV, b.e), c.v3), tensor(iV, b.e));
    r.law_eq("comodule_compatibility",
             compose(tensor(iV, m), tensor(cAV, iA), tensor(iA, c.v1)),
             compose(tensor(iV, m), tensor(c.v3, iA), tensor(cAV, iA)));
    r.law_eq("v13_module_maps.v1", compose(c.v1, tensor(iV, m)),
             compose(tensor(iV, m), tensor(c.v1, iA)));
    r.law_eq("v13_module_maps.v3a", compose(c.v3, tensor(iV, m)),
             compose(tensor(iV, m), tensor(cAV, iA), tensor(iA, c.v3), tensor(cVA, iA)));
    r.law_eq("v13_module_maps.v3b", compose(c.v3, tensor(iV, m)),
             compose(tensor(iV, m), tensor(iV, braiding(k, A, A)), tensor(c.v3, iA),
                     tensor(iV, braiding(k, A, A))));

    // Given the compatibility square, the two fusion/counit pairs stand or
    // fall together.
    const bool compat = r.passed("comodule_compatibility");
    const bool side1 = r.passed("t_1_comodule.fusion") && r.passed("t_1_comodule.counit");
    const bool side3 = r.passed("t_3_comodule.fusion") && r.passed("t_3_comodule.counit");
    r.law_true("comodule_nd.biconditional", !compat || (side1 == side3),
               side1 ? "v1 laws hold, v3 laws fail" : "v3 laws hold, v1 laws fail");
    return r;
}

CheckReport check_comodule_morphism(const MultiplierBimonoid& b, const LinMap& f,
                                    const Comodule& src, const Comodule& tgt) {
    CheckReport r;
    const auto k = f.field();
    const auto iA = identity(k, b.space);
    r.law_eq("comodule_morphism.v1", compose(tgt.v1, tensor(f, iA)),
             compose(tensor(f, iA), src.v1));
    r.law_eq("comodule_morphism.v3", compose(tgt.v3, tensor(f, iA)),
             compose(tensor(f, iA), src.v3));
    return r;
}

Comodule regular_comodule(const MultiplierBimonoid& b, const RegularStructure& reg) {
    return Comodule{b.space, b.t1, reg.t3};
}

Comodule trivial_comodule(const MultiplierBimonoid& b, const SpaceSignature& v) {
    const auto id = identity(b.field(), v * b.space);
    return Comodule{v, id, id};
}

ComodulePush pushforward(const MMorphism& f, const Comodule& c) {
    ComodulePush out{Comodule{c.space, c.v1, c.v3}, {}};
    const auto k = f.field();
    const auto V = c.space;
    const auto A = f.source;
    const auto B = f.target.space;
    const auto iV = identity(k, V);
    const auto iA = identity(k, A);
    const auto iB = identity(k, B);
    const auto cAB = braiding(k, A, B);
    const auto cAV = braiding(k, A, V);

    LinMap epi1 = tensor(iV, f.f1);
    LinMap w1 = solve_through_epi(compose(epi1, tensor(c.v1, iB)), epi1);

    LinMap epi3 = compose(tensor(iV, f.f2), tensor(iV, cAB));
    LinMap w3 = solve_through_epi(compose(epi3, tensor(c.v3, iB)), epi3);

    out.report.law_eq("w1_nd",
                      compose(tensor(iV, f.f1), tensor(cAV, iB), tensor(iA, w1)),
                      compose(tensor(iV, f.f1), tensor(c.v3, iB), tensor(cAV, iB)));
    out.com = Comodule{V, std::move(w1), std::move(w3)};
    return out;
}

ComodulePush pushforward_op(const MMorphism& g, const Comodule& c) {
    ComodulePush out{Comodule{c.space, c.v1, c.v3}, {}};
    const auto k = g.field();
    const auto V = c.space;
    const auto A = g.source;
    const auto B = g.target.space;
    const auto iV = identity(k, V);
    const auto iB = identity(k, B);
    const auto cAB = braiding(k, A, B);

    LinMap epi1 = tensor(iV, g.f1);
    LinMap w1 = solve_through_epi(compose(epi1, tensor(c.v3, iB)), epi1);

    LinMap epi3 = compose(tensor(iV, g.f2), tensor(iV, cAB));
    LinMap w3 = solve_through_epi(compose(epi3, tensor(c.v1, iB)), epi3);

    out.com = Comodule{V, std::move(w1), std::move(w3)};
    return out;
}

CoactionInverse coaction_inverse(const Antipode& s, const Comodule& c) {
    ComodulePush push = pushforward_op(s.s, c);
    CheckReport r;
    const auto id = identity(c.v1.field(), c.v1.dom());
    r.law_eq("coaction_inverse.left", compose(push.com.v1, c.v1), id);
    r.law_eq("coaction_inverse.right", compose(c.v1, push.com.v1), id);
    return CoactionInverse{push.com.v1, std::move(r)};
}

CheckReport check_conv_inverse(const MultiplierBimonoid& b, const RegularStructure& reg,
                               const MMorphism& f, const MMorphism& g) {
    CheckReport r;
    const auto k = b.field();
    const auto A = b.space;
    const auto B = f.target.space;
    const auto iB = identity(k, B);
    Comodule rc = regular_comodule(b, reg);

    LinMap t1f = pushforward(f, rc).com.v1;
    ComodulePush pg = pushforward_op(g, rc);
    const LinMap& t1g = pg.com.v1;
    const LinMap& t3g = pg.com.v3;

    bool law_a = entries_equal(compose(t1g, t1f), identity(k, A * B)) &&
                 entries_equal(compose(t1f, t1g), identity(k, A * B));
    bool law_b = entries_equal(compose(g.f1, t1f), tensor(b.e, iB));
    bool law_bp = entries_equal(compose(f.f1, t3g), tensor(b.e, iB));

    r.law_true("conv_inv.a", law_a);
    r.law_true("conv_inv.b", law_b);
    r.law_true("conv_inv.b_prime", law_bp);
    r.law_true("conv_inv.equiv", law_a == law_b, "one-sided and two-sided laws disagree");
    r.law_true("conv_inv.equiv_prime", law_a == law_bp, "one-sided and two-sided laws disagree");
    return r;
}

QMorphism to_q(const MultiplierBimonoid& b, const Comodule& c) {
    const auto k = b.field();
    const auto A = b.space;
    const auto V = c.space;
    Duality d = make_duality(k, V);
    const auto iA = identity(k, A);
    const auto iV = identity(k, V);
    const auto iVb = identity(k, d.dual);

    LinMap q1 = compose(tensor(d.eps, iA), tensor(iVb, c.v1));
    LinMap q2 = compose(tensor(d.eps, iA), tensor(iVb, c.v3), tensor(iVb, braiding(k, A, V)),
                        tensor(braiding(k, A, d.dual), iV));
    LinMap gamma = tensor(iVb, d.eta, iV);
    LinMap zeta = d.eps;

    Semigroup sg = induced_multiplication(b);
    MMorphism q{d.dual * V, sg, std::move(q1), std::move(q2)};
    return QMorphism{std::move(q), std::move(gamma), std::move(zeta), std::move(d)};
}

Comodule from_q(const QMorphism& qm) {
    const auto k = qm.q.field();
    const auto V = qm.dual.space;
    const auto Q = qm.q.source;
    const auto iV = identity(k, V);
    SpaceSignature A = qm.q.target.space;
    const auto iA = identity(k, A);
    const auto id_VA = identity(k, V * A);

    LinMap v1 = compose(tensor(iV, qm.q.f1), tensor(qm.dual.eta, id_VA));
    LinMap v3 = compose(tensor(iV, qm.q.f2), tensor(iV, braiding(k, Q, A)),
                        tensor(qm.dual.eta, id_VA));
    return Comodule{V, std::move(v1), std::move(v3)};
}

CheckReport check_q(const MultiplierBimonoid& b, const QMorphism& qm) {
    CheckReport r;
    const auto k = b.field();
    const auto A = b.space;
    const auto Q = qm.q.source;
    const auto iA = identity(k, A);
    const auto iQ = identity(k, Q);

    r.merge("q", check_mmorphism(qm.q));

    r.law_eq("q_e.1", compose(b.e, qm.q.f1), compose(qm.zeta, tensor(iQ, b.e)));
    r.law_eq("q_e.2", compose(b.e, qm.q.f2), compose(qm.zeta, tensor(b.e, iQ)));

    r.law_eq("q_t_gamma.1", compose(b.t1, tensor(qm.q.f1, iA)),
             compose(tensor(qm.q.f1, qm.q.f1), tensor(iQ, braiding(k, Q, A), iA),
                     tensor(qm.gamma, b.t1)));
    r.law_eq("q_t_gamma.2", compose(b.t2, tensor(iA, qm.q.f2)),
             compose(tensor(qm.q.f2, qm.q.f2), tensor(iA, braiding(k, A, Q), iQ),
                     tensor(b.t2, qm.gamma)));

    // e • q is the sharp of the counit ζ of the comonoid Q.
    Semigroup unit_sg{SpaceSignature{}, identity(k, SpaceSignature{})};
    MMorphism e_mm{A, unit_sg, b.e, b.e};
    MMorphism eq = bullet(e_mm, qm.q);
    r.law_eq("q_counit_bullet.f1", eq.f1, qm.zeta);
    r.law_eq("q_counit_bullet.f2", eq.f2, qm.zeta);

    // (q ⊗ q) ∘ γ agrees with the comultiplication composed with q.
    MMorphism qq = tensor_mmorphism(qm.q, qm.q);
    MMorphism lhs = circ(qq, qm.gamma);
    MMorphism rhs = bullet(comultiplication(b), qm.q);
    r.law_eq("q_comult_bullet.f1", lhs.f1, rhs.f1);
    r.law_eq("q_comult_bullet.f2", lhs.f2, rhs.f2);
    return r;
}

CheckReport check_q_morphism(const LinMap& f, const QMorphism& qv, const QMorphism& qw) {
    CheckReport r;
    const auto k = f.field();
    const auto A = qv.q.target.space;
    const auto iA = identity(k, A);
    const auto iV = identity(k, qv.dual.space);
    const auto iWb = identity(k, qw.dual.dual);
    LinMap fbar = transpose(f, qw.dual.dual, qv.dual.dual);

    r.law_eq("q_morphism.f1", compose(qw.q.f1, tensor(iWb, f, iA)),
             compose(qv.q.f1, tensor(fbar, iV, iA)));
    r.law_eq("q_morphism.f2", compose(qw.q.f2, tensor(iA, iWb, f)),
             compose(qv.q.f2, tensor(iA, fbar, iV)));
    return r;
}

TensorComodule tensor_comodule(const MultiplierBimonoid& b, const Comodule& cv,
                               const Comodule& cw) {
    const auto k = b.field();
    const auto A = b.space;
    const auto V = cv.space;
    const auto W = cw.space;
    const auto iA = identity(k, A);
    const auto iV = identity(k, V);
    const auto iW = identity(k, W);

    // Inner coaction on the W leg, outer on the V leg.
    LinMap v1 = compose(tensor(iV, braiding(k, A, W)), tensor(cv.v1, iW),
                        tensor(iV, braiding(k, W, A)), tensor(iV, cw.v1));
    LinMap v3 = compose(tensor(iV, braiding(k, A, W)), tensor(cv.v3, iW),
                        tensor(iV, braiding(k, W, A)), tensor(iV, cw.v3));
    Comodule tc{V * W, std::move(v1), std::move(v3)};

    // Cross-check the functional form against the composite of the factors'.
    CheckReport r;
    QMorphism qv = to_q(b, cv);
    QMorphism qw = to_q(b, cw);
    QMorphism qt = to_q(b, tc);
    const auto iVb = identity(k, qv.dual.dual);
    LinMap q1_composite =
        compose(qv.q.f1, tensor(iVb, iV, qw.q.f1),
                tensor(iVb, braiding(k, qw.dual.dual, V), iW, iA),
                tensor(braiding(k, qw.dual.dual, qv.dual.dual), iV, iW, iA));
    r.law_eq("q_tensor", qt.q.f1, q1_composite);
    return TensorComodule{std::move(tc), std::move(r)};
}

DualComodule dual_comodule(const MultiplierBimonoid& b, const Antipode& s, const Comodule& c) {
    const auto k = b.field();
    const auto V = c.space;

    QMorphism qv = to_q(b, c);
    Duality dw = reverse_duality(qv.dual);

    // q' = s • (q^op ∘ c⁻¹) on V⊗V̄.
    MMorphism q_op = op_mmorphism(qv.q);
    LinMap z = braiding(k, qv.dual.space, qv.dual.dual);
    MMorphism q_flip = circ(q_op, z);
    MMorphism qp = bullet(s.s, q_flip);

    LinMap gammap = tensor(identity(k, dw.dual), dw.eta, identity(k, dw.space));
    QMorphism qprime{std::move(qp), std::move(gammap), dw.eps, dw};
    Comodule dual_com = from_q(qprime);

    CheckReport r;
    TensorComodule tvvb = tensor_comodule(b, c, dual_com);
    TensorComodule tvbv = tensor_comodule(b, dual_com, c);
    Comodule triv = trivial_comodule(b, SpaceSignature{});

    r.merge("dual_comodule.eta",
            check_comodule_morphism(b, qv.dual.eta, triv, tvvb.com));
    r.merge("dual_comodule.eps",
            check_comodule_morphism(b, qv.dual.eps, tvbv.com, triv));
    r.law_eq("dual_comodule.snake.v",
             compose(tensor(identity(k, V), qv.dual.eps),
                     tensor(qv.dual.eta, identity(k, V))),
             identity(k, V));
    r.law_eq("dual_comodule.snake.dual",
             compose(tensor(qv.dual.eps, identity(k, qv.dual.dual)),
                     tensor(identity(k, qv.dual.dual), qv.dual.eta)),
             identity(k, qv.dual.dual));
    return DualComodule{std::move(dual_com), std::move(dw), std::move(r)};
}

}  // namespace mulhopf
