#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "mulhopf/semigroups.hpp"

using namespace mulhopf;
using namespace mulhopf::testutil;

namespace {
const Field Q = Field::rationals();
const Field F7 = Field::prime(7);

Semigroup group_semigroup(const FiniteMonoidTable& t, Field k) {
    return group_algebra(t, k).semigroup();
}
}  // namespace

TEST_CASE("group algebra multiplication satisfies all semigroup laws") {
    for (Field k : {Q, F7}) {
        for (std::size_t n : {2, 3}) {
            Semigroup s = group_semigroup(cyclic_table(n), k);
            CHECK(check_associative(s).passed("associative"));
            CheckReport nd = check_nondegenerate(s);
            CHECK(nd.passed("nondegenerate.left"));
            CHECK(nd.passed("nondegenerate.right"));
            CHECK(check_surjective(s).passed("m.surjective"));
        }
    }
}

TEST_CASE("pointwise multiplication on functions is a nondegenerate semigroup") {
    Semigroup s = function_algebra(idempotent_table(), Q).semigroup();
    CHECK(check_associative(s).passed("associative"));
    CHECK(check_nondegenerate(s).all_passed());
    CHECK(check_surjective(s).passed("m.surjective"));
}

TEST_CASE("broken multiplications are reported, not asserted") {
    SpaceSignature A = SpaceSignature::simple("A", 2);
    // e0·e0 = e1, e0·e1 = e0, e1·anything = 0: (e0e0)e0 = 0 but e0(e0e0) = e0.
    Semigroup bad{A, from_rows(Q, A * A, A, {{0, 1, 0, 0}, {1, 0, 0, 0}})};
    CHECK_FALSE(check_associative(bad).passed("associative"));
    const LawResult* l = check_associative(bad).find("associative");
    REQUIRE(l != nullptr);
    CHECK_FALSE(l->witness.empty());

    Semigroup zero{A, zero_map(Q, A * A, A)};
    CHECK(check_associative(zero).passed("associative"));
    CHECK_FALSE(check_nondegenerate(zero).passed("nondegenerate.left"));
    CHECK_FALSE(check_surjective(zero).passed("m.surjective"));
}

TEST_CASE("opposite reverses the arguments of the multiplication") {
    FiniteMonoidTable t = symmetric_table(3);
    Semigroup s = group_semigroup(t, Q);
    Semigroup op = opposite(s);
    LinMap expected = zero_map(Q, s.space * s.space, s.space);
    for (std::size_t a = 0; a < t.n; ++a)
        for (std::size_t b = 0; b < t.n; ++b)
            expected.at(t.mul[b][a], a * t.n + b) = sc(Q, 1);
    CHECK(entries_equal(op.m, expected));
    // S3 is not abelian, Z3 is.
    CHECK_FALSE(entries_equal(op.m, s.m));
    Semigroup z3 = group_semigroup(cyclic_table(3), Q);
    CHECK(entries_equal(opposite(z3).m, z3.m));
    CHECK(check_associative(op).passed("associative"));
}

TEST_CASE("tensor product of semigroups multiplies componentwise") {
    Semigroup a = group_semigroup(cyclic_table(2), Q);
    Semigroup b = group_semigroup(cyclic_table(3), Q);
    Semigroup ab = tensor_semigroup(a, b);
    CHECK(ab.space.total() == 6);
    CHECK(check_associative(ab).passed("associative"));
    CHECK(check_nondegenerate(ab).all_passed());
    auto ua = find_unit(a);
    auto ub = find_unit(b);
    auto uab = find_unit(ab);
    REQUIRE(ua.has_value());
    REQUIRE(ub.has_value());
    REQUIRE(uab.has_value());
    CHECK(entries_equal(*uab, tensor(*ua, *ub)));
}

TEST_CASE("find_unit recovers the unit or reports its absence") {
    Semigroup z2 = group_semigroup(cyclic_table(2), Q);
    auto u = find_unit(z2);
    REQUIRE(u.has_value());
    CHECK(entries_equal(*u, column(Q, z2.space, {1, 0})));
    // The unit of pointwise multiplication is the constant function 1.
    Semigroup fz2 = function_algebra(cyclic_table(2), Q).semigroup();
    auto uf = find_unit(fz2);
    REQUIRE(uf.has_value());
    CHECK(entries_equal(*uf, column(Q, fz2.space, {1, 1})));
    SpaceSignature A = SpaceSignature::simple("A", 2);
    CHECK_FALSE(find_unit(Semigroup{A, zero_map(Q, A * A, A)}).has_value());
}

TEST_CASE("multiplication embeddings detect one-sided degeneracy") {
    // a·b = a: right multiplication is constant, left multiplication is faithful.
    SpaceSignature A = SpaceSignature::simple("A", 2);
    LinMap proj = zero_map(Q, A * A, A);
    for (std::size_t a = 0; a < 2; ++a)
        for (std::size_t b = 0; b < 2; ++b) proj.at(a, a * 2 + b) = sc(Q, 1);
    Semigroup s{A, proj};
    CHECK(check_associative(s).passed("associative"));
    CheckReport nd = check_nondegenerate(s);
    CHECK(nd.passed("nondegenerate.left"));
    CHECK_FALSE(nd.passed("nondegenerate.right"));
}
