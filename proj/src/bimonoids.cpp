#include "mulhopf/bimonoids.hpp"

namespace mulhopf {

namespace {

// Row index for an equation labelled by a basis triple.
inline std::size_t tri(std::size_t a, std::size_t b, std::size_t c, std::size_t d) {
    return (a * d + b) * d + c;
}

}  // namespace

Semigroup induced_multiplication(const MultiplierBimonoid& b) {
    const Field k = b.field();
    return Semigroup{b.space, compose(tensor(b.e, identity(k, b.space)), b.t1)};
}

LinMap comultiplication_d1(const MultiplierBimonoid& b) {
    const Field k = b.field();
    const LinMap iA = identity(k, b.space);
    const LinMap c = braiding(k, b.space, b.space);
    const LinMap m = induced_multiplication(b).m;
    return compose(tensor(m, iA), tensor(c, iA), tensor(iA, b.t1), tensor(c, iA));
}

LinMap comultiplication_d2(const MultiplierBimonoid& b) {
    const Field k = b.field();
    const LinMap iA = identity(k, b.space);
    const LinMap c = braiding(k, b.space, b.space);
    const LinMap m = induced_multiplication(b).m;
    return compose(tensor(iA, m), tensor(iA, c), tensor(b.t2, iA), tensor(iA, c));
}

MMorphism comultiplication(const MultiplierBimonoid& b) {
    const Semigroup a = induced_multiplication(b);
    return MMorphism{b.space, tensor_semigroup(a, a), comultiplication_d1(b),
                     comultiplication_d2(b)};
}

CheckReport check_bimonoid(const MultiplierBimonoid& b) {
    CheckReport r;
    const Field k = b.field();
    const SpaceSignature& A = b.space;
    const LinMap iA = identity(k, A);
    const LinMap c = braiding(k, A, A);  // self-inverse on equal factors
    const LinMap& t1 = b.t1;
    const LinMap& t2 = b.t2;
    const LinMap& e = b.e;

    r.law_eq("mbm_ax_1.fusion",
             compose(tensor(t1, iA), tensor(c, iA), tensor(iA, t1), tensor(c, iA),
                     tensor(iA, t1)),
             compose(tensor(iA, t1), tensor(t1, iA)));
    r.law_eq("mbm_ax_1.counit", compose(tensor(iA, e), t1), tensor(iA, e));
    r.law_eq("mbm_ax_2.fusion",
             compose(tensor(iA, t2), tensor(iA, c), tensor(t2, iA), tensor(iA, c),
                     tensor(t2, iA)),
             compose(tensor(t2, iA), tensor(iA, t2)));
    r.law_eq("mbm_ax_2.counit", compose(tensor(e, iA), t2), tensor(e, iA));
    r.law_eq("mbm_ax_compatibility.t", compose(tensor(iA, t1), tensor(t2, iA)),
             compose(tensor(t2, iA), tensor(iA, t1)));
    r.law_eq("mbm_ax_compatibility.e", compose(tensor(e, iA), t1),
             compose(tensor(iA, e), t2));

    const LinMap m = compose(tensor(e, iA), t1);
    r.law_eq("e_multiplicative", compose(e, m), tensor(e, e));
    r.law_eq("short_fusion.t1", compose(t1, tensor(m, iA)),
             compose(tensor(m, iA), tensor(c, iA), tensor(iA, t1), tensor(c, iA),
                     tensor(iA, t1)));
    r.law_eq("short_fusion.t2", compose(t2, tensor(iA, m)),
             compose(tensor(iA, m), tensor(iA, c), tensor(t2, iA), tensor(iA, c),
                     tensor(t2, iA)));
    r.law_eq("t_1_mod_map", compose(tensor(iA, m), tensor(t1, iA)),
             compose(t1, tensor(iA, m)));
    r.law_eq("short_compatibility", compose(tensor(iA, m), tensor(t2, iA)),
             compose(tensor(m, iA), tensor(iA, t1)));
    r.law_eq("m.associative", compose(m, tensor(m, iA)), compose(m, tensor(iA, m)));

    const Semigroup sg{A, m};
    r.merge("m", check_nondegenerate(sg));
    r.law_surjective("m.surjective", m);
    r.law_surjective("e.surjective", e);
    r.law_surjective("d1.surjective", comultiplication_d1(b));
    r.law_surjective("d2.surjective", comultiplication_d2(b));
    return r;
}

MultiplierBimonoid twist(const MultiplierBimonoid& b) {
    const Field k = b.field();
    const LinMap c = braiding(k, b.space, b.space);
    return MultiplierBimonoid{b.space, compose(c, b.t2, c), compose(c, b.t1, c), b.e};
}

MultiplierBimonoid from_unital(const Semigroup& a, const LinMap& unit, const LinMap& h,
                               const LinMap& e) {
    (void)unit;
    const Field k = a.field();
    const LinMap iA = identity(k, a.space);
    return MultiplierBimonoid{a.space, compose(tensor(iA, a.m), tensor(h, iA)),
                              compose(tensor(a.m, iA), tensor(iA, h)), e};
}

std::optional<UnitalData> to_unital(const MultiplierBimonoid& b) {
    const Field k = b.field();
    const Semigroup sg = induced_multiplication(b);
    auto u = find_unit(sg);
    if (!u) return std::nullopt;
    const LinMap iA = identity(k, b.space);
    LinMap h = compose(b.t2, tensor(*u, iA));
    if (!compose(b.t1, tensor(iA, *u)).entries_equal(h)) return std::nullopt;
    return UnitalData{sg, *u, std::move(h), b.e};
}

std::optional<RegularStructure> infer_regular(const MultiplierBimonoid& b) {
    const Field k = b.field();
    const SpaceSignature& A = b.space;
    const std::size_t d = A.total();
    const LinMap iA = identity(k, A);
    const LinMap c = braiding(k, A, A);
    const LinMap m = induced_multiplication(b).m;
    const SpaceSignature eq_sig = SpaceSignature::simple("eq", d * d * d);
    const SpaceSignature sq_sig = A * A;

    // (m⊗1)∘(1⊗t3) = (1⊗m)∘(1⊗c)∘(t2⊗1): one linear system in the entries
    // of t3, equations indexed by basis triples (a,r,s).
    const LinMap k3 = compose(tensor(iA, m), tensor(iA, c), tensor(b.t2, iA));
    LinMap phi3(k, sq_sig, eq_sig);
    LinMap rhs3(k, sq_sig, eq_sig);
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t r = 0; r < d; ++r) {
            for (std::size_t x = 0; x < d; ++x) {
                const Scalar& mv = m.at(r, a * d + x);
                if (mv.is_zero()) continue;
                for (std::size_t s = 0; s < d; ++s)
                    phi3.at(tri(a, r, s, d), x * d + s) = mv;
            }
            for (std::size_t s = 0; s < d; ++s)
                for (std::size_t bb = 0; bb < d; ++bb)
                    for (std::size_t cc = 0; cc < d; ++cc)
                        rhs3.at(tri(a, r, s, d), bb * d + cc) =
                            k3.at(r * d + s, tri(a, bb, cc, d));
        }
    auto t3 = solve_linear(phi3, rhs3);
    if (!t3) return std::nullopt;

    // (1⊗m)∘(t4⊗1) = (m⊗1)∘(c⊗1)∘(1⊗t1), equations indexed by (c,r,s).
    const LinMap k4 = compose(tensor(m, iA), tensor(c, iA), tensor(iA, b.t1));
    LinMap phi4(k, sq_sig, eq_sig);
    LinMap rhs4(k, sq_sig, eq_sig);
    for (std::size_t cc = 0; cc < d; ++cc)
        for (std::size_t s = 0; s < d; ++s) {
            for (std::size_t y = 0; y < d; ++y) {
                const Scalar& mv = m.at(s, y * d + cc);
                if (mv.is_zero()) continue;
                for (std::size_t r = 0; r < d; ++r)
                    phi4.at(tri(cc, r, s, d), r * d + y) = mv;
            }
            for (std::size_t r = 0; r < d; ++r)
                for (std::size_t a = 0; a < d; ++a)
                    for (std::size_t bb = 0; bb < d; ++bb)
                        rhs4.at(tri(cc, r, s, d), a * d + bb) =
                            k4.at(r * d + s, tri(a, bb, cc, d));
        }
    auto t4 = solve_linear(phi4, rhs4);
    if (!t4) return std::nullopt;

    LinMap t3m(k, sq_sig, sq_sig), t4m(k, sq_sig, sq_sig);
    for (std::size_t col = 0; col < d * d; ++col)
        for (std::size_t row = 0; row < d * d; ++row) {
            t3m.at(row, col) = t3->at(row, col);
            t4m.at(row, col) = t4->at(row, col);
        }
    RegularStructure reg{std::move(t3m), std::move(t4m)};
    if (!check_regular(b, reg).all_passed()) return std::nullopt;
    return reg;
}

CheckReport check_regular(const MultiplierBimonoid& b, const RegularStructure& reg) {
    CheckReport r;
    const Field k = b.field();
    const SpaceSignature& A = b.space;
    const LinMap iA = identity(k, A);
    const LinMap c = braiding(k, A, A);
    const LinMap m = induced_multiplication(b).m;
    const LinMap& t1 = b.t1;
    const LinMap& t2 = b.t2;
    const LinMap& t3 = reg.t3;
    const LinMap& t4 = reg.t4;

    r.law_eq("reg_mbm.1", compose(tensor(b.e, iA), t1), compose(tensor(b.e, iA), t3, c));
    r.law_eq("reg_mbm.2", compose(tensor(iA, m), tensor(t3, iA), tensor(c, iA)),
             compose(tensor(iA, m), tensor(c, iA), tensor(iA, t1)));
    r.law_eq("reg_mbm.3", compose(tensor(iA, t1), tensor(t4, iA)),
             compose(tensor(t4, iA), tensor(iA, t1)));
    r.law_eq("reg_mbm.4", compose(tensor(m, iA), tensor(iA, t4), tensor(iA, c)),
             compose(tensor(m, iA), tensor(iA, c), tensor(t2, iA)));
    r.law_eq("reg_mbm.5", compose(tensor(t2, iA), tensor(iA, t3)),
             compose(tensor(iA, t3), tensor(t2, iA)));
    r.law_eq("t_2-3_compatibility.t3", compose(tensor(iA, m), tensor(iA, c), tensor(t2, iA)),
             compose(tensor(m, iA), tensor(iA, t3)));
    r.law_eq("t_2-3_compatibility.t4", compose(tensor(m, iA), tensor(c, iA), tensor(iA, t1)),
             compose(tensor(iA, m), tensor(t4, iA)));
    r.law_eq("t_3_mod_map", compose(t3, tensor(iA, m), tensor(iA, c)),
             compose(tensor(iA, m), tensor(iA, c), tensor(t3, iA)));
    return r;
}

CheckReport check_bimonoid_morphism(const MMorphism& f, const MultiplierBimonoid& src,
                                    const MultiplierBimonoid& tgt,
                                    const std::optional<RegularStructure>& src_reg,
                                    const std::optional<RegularStructure>& tgt_reg) {
    CheckReport r;
    const Field k = f.field();
    const SpaceSignature& A = src.space;
    const SpaceSignature& B = tgt.space;
    const LinMap iA = identity(k, A), iB = identity(k, B);

    r.law_eq("mbm_morphism.1", compose(tgt.e, f.f1), tensor(src.e, tgt.e));
    r.law_eq("mbm_morphism.2",
             compose(tensor(f.f1, iB), tensor(iA, tgt.t1), tensor(iA, f.f1, iB)),
             compose(tensor(f.f1, f.f1), tensor(iA, braiding(k, A, B), iB),
                     tensor(src.t2, tgt.t1)));
    r.law_eq("mbm_morphism.3", compose(tgt.e, f.f2), tensor(tgt.e, src.e));
    r.law_eq("mbm_morphism.4",
             compose(tensor(iB, f.f2), tensor(tgt.t2, iA), tensor(iB, f.f2, iA)),
             compose(tensor(f.f2, f.f2), tensor(iB, braiding(k, B, A), iA),
                     tensor(tgt.t2, src.t1)));
    if (src_reg && tgt_reg) {
        r.law_eq("mbm_morphism.t3",
                 compose(tensor(f.f1, f.f1), tensor(iA, braiding(k, A, B), iB),
                         tensor(src_reg->t3, tgt.t1)),
                 compose(tensor(iB, f.f1), tensor(braiding(k, A, B), iB),
                         tensor(iA, tgt.t1), tensor(iA, f.f1, iB),
                         tensor(braiding(k, A, A), iB, iB)));
    }
    return r;
}

}  // namespace mulhopf
