#include "mulhopf/semigroups.hpp"

namespace mulhopf {

CheckReport check_associative(const Semigroup& s) {
    CheckReport r;
    const Field f = s.field();
    const LinMap one = identity(f, s.space);
    r.law_eq("associative", compose(s.m, tensor(s.m, one)), compose(s.m, tensor(one, s.m)));
    return r;
}

LinMap multiplication_embedding(const Semigroup& s, bool right_leg_free) {
    const std::size_t d = s.space.total();
    const SpaceSignature end_sig = SpaceSignature::simple("End(" + s.space.str() + ")", d * d);
    LinMap emb(s.field(), s.space, end_sig);
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b)
            for (std::size_t r = 0; r < d; ++r) {
                const Scalar& v =
                    right_leg_free ? s.m.at(r, a * d + b) : s.m.at(r, b * d + a);
                if (!v.is_zero()) emb.at(r * d + b, a) = v;
            }
    return emb;
}

CheckReport check_nondegenerate(const Semigroup& s) {
    CheckReport r;
    r.law_injective("nondegenerate.left", multiplication_embedding(s, true));
    r.law_injective("nondegenerate.right", multiplication_embedding(s, false));
    return r;
}

CheckReport check_surjective(const Semigroup& s) {
    CheckReport r;
    r.law_surjective("m.surjective", s.m);
    return r;
}

Semigroup opposite(const Semigroup& s) {
    return Semigroup{s.space, compose(s.m, braiding(s.field(), s.space, s.space))};
}

Semigroup tensor_semigroup(const Semigroup& a, const Semigroup& b) {
    const Field f = a.field();
    const LinMap mid = tensor(identity(f, a.space), braiding(f, b.space, a.space),
                              identity(f, b.space));
    return Semigroup{a.space * b.space, compose(tensor(a.m, b.m), mid)};
}

std::optional<LinMap> find_unit(const Semigroup& s) {
    const Field f = s.field();
    const std::size_t d = s.space.total();
    // Stack m∘(u⊗1) = id over m∘(1⊗u) = id as one linear system in u.
    LinMap sys(f, s.space, SpaceSignature::simple("eq", 2 * d * d));
    LinMap rhs(f, SpaceSignature::unit(), SpaceSignature::simple("eq", 2 * d * d));
    const Scalar one = Scalar::integer(f, 1);
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b)
            for (std::size_t r = 0; r < d; ++r) {
                const Scalar& left = s.m.at(r, a * d + b);
                if (!left.is_zero()) sys.at(r * d + b, a) = left;
                const Scalar& right = s.m.at(r, b * d + a);
                if (!right.is_zero()) sys.at(d * d + r * d + b, a) = right;
            }
    for (std::size_t b = 0; b < d; ++b) {
        rhs.at(b * d + b, 0) = one;
        rhs.at(d * d + b * d + b, 0) = one;
    }
    auto u = solve_linear(sys, rhs);
    if (!u) return std::nullopt;
    LinMap unit(f, SpaceSignature::unit(), s.space);
    for (std::size_t i = 0; i < d; ++i) unit.at(i, 0) = u->at(i, 0);
    return unit;
}

}  // namespace mulhopf
