#include "mulhopf/multipliers.hpp"

namespace mulhopf {

CheckReport check_mmorphism(const MMorphism& f) {
    CheckReport r;
    const Field k = f.field();
    const SpaceSignature& A = f.source;
    const SpaceSignature& B = f.target.space;
    const LinMap& m = f.target.m;
    const LinMap iA = identity(k, A), iB = identity(k, B);
    r.law_eq("mM.1", compose(m, tensor(iB, f.f1)), compose(m, tensor(f.f2, iB)));
    r.law_eq("mM.2", compose(f.f1, tensor(iA, m)), compose(m, tensor(f.f1, iB)));
    r.law_eq("mM.3", compose(f.f2, tensor(m, iA)), compose(m, tensor(iB, f.f2)));
    return r;
}

CheckReport check_multiplicative(const MMorphism& f, const Semigroup& source) {
    CheckReport r;
    const Field k = f.field();
    const SpaceSignature& A = f.source;
    const SpaceSignature& B = f.target.space;
    const LinMap iA = identity(k, A), iB = identity(k, B);
    r.law_eq("multiplicative.f1", compose(f.f1, tensor(source.m, iB)),
             compose(f.f1, tensor(iA, f.f1)));
    r.law_eq("multiplicative.f2", compose(f.f2, tensor(iB, source.m)),
             compose(f.f2, tensor(f.f2, iA)));
    return r;
}

CheckReport check_dense(const MMorphism& f) {
    CheckReport r;
    r.law_surjective("dense.f1", f.f1);
    r.law_surjective("dense.f2", f.f2);
    return r;
}

MMorphism identity_mmorphism(const Semigroup& a) {
    return MMorphism{a.space, a, a.m, a.m};
}

MMorphism bullet(const MMorphism& g, const MMorphism& f) {
    const Field k = f.field();
    if (f.target.space.total() != g.source.total())
        throw SignatureMismatch("bullet: target(f) vs source(g)");
    const SpaceSignature& A = f.source;
    const SpaceSignature& C = g.target.space;
    const LinMap iA = identity(k, A), iC = identity(k, C);
    LinMap h1 = solve_through_epi(compose(g.f1, tensor(f.f1, iC)), tensor(iA, g.f1));
    LinMap h2 = solve_through_epi(compose(g.f2, tensor(iC, f.f2)), tensor(g.f2, iA));
    return MMorphism{A, g.target, std::move(h1), std::move(h2)};
}

MMorphism sharp(const LinMap& z, const Semigroup& b) {
    const Field k = z.field();
    const LinMap iB = identity(k, b.space);
    return MMorphism{z.dom(), b, compose(b.m, tensor(z, iB)), compose(b.m, tensor(iB, z))};
}

MMorphism circ(const MMorphism& f, const LinMap& z) {
    const Field k = f.field();
    const LinMap iB = identity(k, f.target.space);
    return MMorphism{z.dom(), f.target, compose(f.f1, tensor(z, iB)),
                     compose(f.f2, tensor(iB, z))};
}

MMorphism op_mmorphism(const MMorphism& f) {
    const Field k = f.field();
    const SpaceSignature& A = f.source;
    const SpaceSignature& B = f.target.space;
    return MMorphism{A, opposite(f.target), compose(f.f2, braiding(k, A, B)),
                     compose(f.f1, braiding(k, B, A))};
}

MMorphism tensor_mmorphism(const MMorphism& f, const MMorphism& g) {
    const Field k = f.field();
    const SpaceSignature& A = f.source;
    const SpaceSignature& B = f.target.space;
    const SpaceSignature& C = g.source;
    const SpaceSignature& D = g.target.space;
    const LinMap h1 = compose(tensor(f.f1, g.f1),
                              tensor(identity(k, A), braiding(k, C, B), identity(k, D)));
    const LinMap h2 = compose(tensor(f.f2, g.f2),
                              tensor(identity(k, B), braiding(k, D, A), identity(k, C)));
    return MMorphism{A * C, tensor_semigroup(f.target, g.target), h1, h2};
}

std::optional<LinMap> extract_plain(const MMorphism& f, const std::optional<LinMap>& unit) {
    const Field k = f.field();
    const SpaceSignature& A = f.source;
    const SpaceSignature& B = f.target.space;
    const LinMap& m = f.target.m;
    const LinMap iA = identity(k, A), iB = identity(k, B);
    const std::size_t dA = A.total(), dB = B.total();

    LinMap h(k, A, B);
    std::optional<LinMap> u = unit ? unit : find_unit(f.target);
    if (u) {
        h = compose(f.f1, tensor(iA, *u));
        if (!compose(m, tensor(h, iB)).entries_equal(f.f1)) return std::nullopt;
    } else {
        // f1(a⊗b) = m(h(a)⊗b), one linear system per source basis column.
        LinMap sys = multiplication_embedding(f.target, true);
        LinMap rhs(k, A, sys.cod());
        for (std::size_t a = 0; a < dA; ++a)
            for (std::size_t b = 0; b < dB; ++b)
                for (std::size_t r = 0; r < dB; ++r) rhs.at(r * dB + b, a) = f.f1.at(r, a * dB + b);
        auto sol = solve_linear(sys, rhs);
        if (!sol) return std::nullopt;
        for (std::size_t a = 0; a < dA; ++a)
            for (std::size_t x = 0; x < dB; ++x) h.at(x, a) = sol->at(x, a);
    }
    if (!compose(m, tensor(iB, h)).entries_equal(f.f2))
        throw Inconsistent("extract_plain: f1 is inner but f2 disagrees");
    return h;
}

}  // namespace mulhopf
