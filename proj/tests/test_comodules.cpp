#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "mulhopf/comodules.hpp"
#include "mulhopf/hopf.hpp"

using namespace mulhopf;
using namespace mulhopf::testutil;

namespace {
const Field Q = Field::rationals();
const Field F7 = Field::prime(7);

struct Ctx {
    AlgebraInstance inst;
    RegularStructure reg;
    Antipode s;
    Semigroup sg;
};

Ctx make_ctx(AlgebraInstance inst) {
    RegularStructure reg = inst.regular ? *inst.regular : *infer_regular(inst.bim);
    HopfCheck hc = check_hopf(inst.bim);
    REQUIRE(hc.antipode.has_value());
    return Ctx{inst, reg, *hc.antipode, induced_multiplication(inst.bim)};
}
}  // namespace

TEST_CASE("the regular comodule satisfies every comodule law") {
    for (Field k : {Q, F7}) {
        for (std::size_t n : {2, 3}) {
            Ctx fn = make_ctx(function_algebra(cyclic_table(n), k));
            Comodule rc = regular_comodule(fn.inst.bim, fn.reg);
            CHECK(entries_equal(rc.v1, fn.inst.bim.t1));
            CHECK(entries_equal(rc.v3, fn.reg.t3));
            CHECK(check_comodule(fn.inst.bim, fn.reg, rc).all_passed());
            Ctx gp = make_ctx(group_algebra(cyclic_table(n), k));
            CHECK(check_comodule(gp.inst.bim, gp.reg,
                                 regular_comodule(gp.inst.bim, gp.reg)).all_passed());
        }
    }
}

TEST_CASE("the trivial comodule coacts by identity and satisfies the laws") {
    Ctx c = make_ctx(function_algebra(cyclic_table(3), Q));
    Comodule tc = trivial_comodule(c.inst.bim, SpaceSignature::simple("X", 2));
    CHECK(tc.v1.rows() == 6);
    CHECK(entries_equal(tc.v1, identity(Q, tc.space * c.inst.bim.space)));
    CHECK(check_comodule(c.inst.bim, c.reg, tc).all_passed());
}

TEST_CASE("comodule morphisms are detected and non-equivariant maps rejected") {
    Ctx c = make_ctx(function_algebra(cyclic_table(2), Q));
    Comodule rc = regular_comodule(c.inst.bim, c.reg);
    CHECK(check_comodule_morphism(c.inst.bim, identity(Q, rc.space), rc, rc).all_passed());
    // Killing δ_g commutes with the pointwise action but not with the coaction.
    LinMap kill = from_rows(Q, rc.space, rc.space, {{1, 0}, {0, 0}});
    CHECK_FALSE(check_comodule_morphism(c.inst.bim, kill, rc, rc).all_passed());
}

TEST_CASE("pushforward along the identity embedding fixes the regular coaction") {
    Ctx c = make_ctx(function_algebra(cyclic_table(3), Q));
    Comodule rc = regular_comodule(c.inst.bim, c.reg);
    ComodulePush p = pushforward(identity_mmorphism(c.sg), rc);
    CHECK(p.report.all_passed());
    CHECK(entries_equal(p.com.v1, c.inst.bim.t1));
    CHECK(entries_equal(p.com.v3, c.reg.t3));
    CHECK(check_comodule(c.inst.bim, c.reg, p.com).all_passed());
    // Pushing forward along a bimonoid automorphism keeps the laws intact.
    MMorphism sq = sharp(permutation_map(Q, c.sg.space, c.sg.space, {0, 2, 1}), c.sg);
    ComodulePush q = pushforward(sq, rc);
    CHECK(q.report.all_passed());
    CHECK(check_comodule(c.inst.bim, c.reg, q.com).all_passed());
}

TEST_CASE("coaction_inverse of the regular comodule is the inverse of t1") {
    for (Field k : {Q, F7}) {
        for (std::size_t n : {2, 3}) {
            Ctx c = make_ctx(function_algebra(cyclic_table(n), k));
            Comodule rc = regular_comodule(c.inst.bim, c.reg);
            CoactionInverse ci = coaction_inverse(c.s, rc);
            CHECK(ci.report.all_passed());
            CHECK(entries_equal(ci.inv, inverse(c.inst.bim.t1)));
        }
    }
}

TEST_CASE("the antipode is the convolution inverse of the identity embedding") {
    Ctx c = make_ctx(function_algebra(cyclic_table(3), Q));
    CheckReport good = check_conv_inverse(c.inst.bim, c.reg, identity_mmorphism(c.sg), c.s.s);
    CHECK(good.all_passed());
    CHECK(good.laws.size() == 5);
    // The identity is not its own convolution inverse on Z3.
    CheckReport bad = check_conv_inverse(c.inst.bim, c.reg, identity_mmorphism(c.sg),
                                         identity_mmorphism(c.sg));
    CHECK_FALSE(bad.passed("conv_inv.a"));
    CHECK_FALSE(bad.passed("conv_inv.b"));
    // The two equivalence biconditionals hold regardless of the candidate.
    CHECK(bad.passed("conv_inv.equiv"));
    CHECK(bad.passed("conv_inv.equiv_prime"));
}

TEST_CASE("to_q embeds a comodule as a morphism pair and from_q restores it") {
    for (std::size_t n : {2, 3}) {
        Ctx c = make_ctx(function_algebra(cyclic_table(n), Q));
        Comodule rc = regular_comodule(c.inst.bim, c.reg);
        QMorphism qm = to_q(c.inst.bim, rc);
        CHECK(check_q(c.inst.bim, qm).all_passed());
        Comodule back = from_q(qm);
        CHECK(entries_equal(back.v1, rc.v1));
        CHECK(entries_equal(back.v3, rc.v3));
        CHECK(check_q_morphism(identity(Q, rc.space), qm, qm).all_passed());
    }
}

TEST_CASE("tensoring with a trivial comodule extends the coaction by identity") {
    Ctx c = make_ctx(function_algebra(cyclic_table(2), Q));
    Comodule rc = regular_comodule(c.inst.bim, c.reg);
    SpaceSignature X = SpaceSignature::simple("X", 2);
    TensorComodule tc = tensor_comodule(c.inst.bim, trivial_comodule(c.inst.bim, X), rc);
    CHECK(tc.report.all_passed());
    CHECK(entries_equal(tc.com.v1, tensor(identity(Q, X), c.inst.bim.t1)));
    CHECK(entries_equal(tc.com.v3, tensor(identity(Q, X), c.reg.t3)));
    CHECK(check_comodule(c.inst.bim, c.reg, tc.com).all_passed());
}

TEST_CASE("the diagonal coaction on A⊗A matches the hand-computed permutation") {
    Ctx c = make_ctx(function_algebra(cyclic_table(2), Q));
    Comodule rc = regular_comodule(c.inst.bim, c.reg);
    TensorComodule tc = tensor_comodule(c.inst.bim, rc, rc);
    CHECK(tc.report.all_passed());
    // v1(δ_x⊗δ_y⊗δ_a) = δ_{xa⁻¹}⊗δ_{ya⁻¹}⊗δ_a; over Z2 every element is its
    // own inverse.
    const SpaceSignature dom = rc.space * rc.space * c.inst.bim.space;
    CHECK(entries_equal(tc.com.v1, permutation_map(Q, dom, dom, {0, 7, 2, 5, 4, 3, 6, 1})));
    // Z2 function algebras have t3 = t1, so the companion coaction agrees.
    CHECK(entries_equal(tc.com.v3, tc.com.v1));
    CHECK(check_comodule(c.inst.bim, c.reg, tc.com).all_passed());
}

TEST_CASE("dual comodules satisfy the comodule laws and the snake identities") {
    for (std::size_t n : {2, 3}) {
        Ctx c = make_ctx(function_algebra(cyclic_table(n), Q));
        Comodule rc = regular_comodule(c.inst.bim, c.reg);
        DualComodule dc = dual_comodule(c.inst.bim, c.s, rc);
        CHECK(dc.report.all_passed());
        CHECK(check_comodule(c.inst.bim, c.reg, dc.com).all_passed());
        CHECK(dc.com.space.total() == rc.space.total());
    }
}
