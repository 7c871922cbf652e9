#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "mulhopf/hopf.hpp"
#include "mulhopf/modules.hpp"

using namespace mulhopf;
using namespace mulhopf::testutil;

namespace {
const Field Q = Field::rationals();
const Field F7 = Field::prime(7);

struct Ctx {
    AlgebraInstance inst;
    RegularStructure reg;
    Semigroup sg;
};

Ctx make_ctx(AlgebraInstance inst) {
    RegularStructure reg = inst.regular ? *inst.regular : *infer_regular(inst.bim);
    return Ctx{inst, reg, induced_multiplication(inst.bim)};
}
}  // namespace

TEST_CASE("the algebra acting on itself is a nondegenerate surjective module") {
    for (Field k : {Q, F7}) {
        for (std::size_t n : {2, 3}) {
            for (bool grp : {false, true}) {
                Ctx c = make_ctx(grp ? group_algebra(cyclic_table(n), k)
                                     : function_algebra(cyclic_table(n), k));
                SemigroupModule self{c.sg.space, c.sg.m};
                CheckReport r = check_semigroup_module(c.sg, self, c.inst.unit);
                CAPTURE(c.inst.name);
                CHECK(r.all_passed());
                CHECK(r.passed("module.associative"));
                CHECK(r.passed("module.surjective"));
                CHECK(r.passed("module.nondegenerate"));
            }
        }
    }
}

TEST_CASE("module morphisms commute with the action") {
    Ctx c = make_ctx(group_algebra(cyclic_table(2), Q));
    SemigroupModule self{c.sg.space, c.sg.m};
    CHECK(check_module_morphism(c.sg, identity(Q, c.sg.space), self, self).all_passed());
    // Killing the basis vector g breaks right multiplication by g.
    LinMap kill = from_rows(Q, c.sg.space, c.sg.space, {{1, 0}, {0, 0}});
    CHECK_FALSE(check_module_morphism(c.sg, kill, self, self).all_passed());
    // Multiplication by the central element δ_1 is a module map over functions.
    Ctx fn = make_ctx(function_algebra(cyclic_table(2), Q));
    SemigroupModule fself{fn.sg.space, fn.sg.m};
    LinMap central = from_rows(Q, fn.sg.space, fn.sg.space, {{1, 0}, {0, 0}});
    CHECK(check_module_morphism(fn.sg, central, fself, fself).all_passed());
}

TEST_CASE("lifting the regular action reproduces the fusion maps") {
    for (std::size_t n : {2, 3}) {
        Ctx c = make_ctx(function_algebra(cyclic_table(n), Q));
        SemigroupModule self{c.sg.space, c.sg.m};
        CHECK(entries_equal(lift_v2(c.inst.bim, self), c.inst.bim.t2));
        CHECK(entries_equal(lift_v3(c.inst.bim, c.reg, self), c.reg.t3));
        RegularModule rm = lift_module(c.inst.bim, c.reg, self);
        CHECK(entries_equal(rm.v2, c.inst.bim.t2));
        CHECK(entries_equal(rm.v3, c.reg.t3));
    }
}

TEST_CASE("trivial actions lift with identity companions") {
    Ctx c = make_ctx(function_algebra(cyclic_table(3), Q));
    SpaceSignature X = SpaceSignature::simple("X", 2);
    SemigroupModule triv{X, tensor(identity(Q, X), c.inst.bim.e)};
    CHECK(check_semigroup_module(c.sg, triv, c.inst.unit).passed("module.associative"));
    CHECK(entries_equal(lift_v2(c.inst.bim, triv), identity(Q, X * c.inst.bim.space)));
}

TEST_CASE("actions that are not counital cannot be lifted") {
    Ctx c = make_ctx(group_algebra(cyclic_table(2), Q));
    // x⊗a ↦ x·φ(a) with φ the projection onto the unit's line: associative on
    // nothing useful, and its v2 equation has no solution.
    LinMap proj = from_rows(Q, c.sg.space, c.sg.space, {{1, 0}, {0, 0}});
    SemigroupModule bad{c.sg.space, compose(c.sg.m, tensor(identity(Q, c.sg.space), proj))};
    CHECK_THROWS_AS(lift_v2(c.inst.bim, bad), std::runtime_error);
}

TEST_CASE("the regular module satisfies the full lifted-law suite") {
    for (Field k : {Q, F7}) {
        for (std::size_t n : {2, 3}) {
            for (bool grp : {false, true}) {
                Ctx c = make_ctx(grp ? group_algebra(cyclic_table(n), k)
                                     : function_algebra(cyclic_table(n), k));
                RegularModule rm = regular_module(c.inst.bim, c.reg);
                CHECK(entries_equal(rm.v2, c.inst.bim.t2));
                CHECK(entries_equal(rm.v3, c.reg.t3));
                CheckReport r = check_regular_module(c.inst.bim, c.reg, rm, c.inst.unit);
                CAPTURE(c.inst.name);
                CHECK(r.all_passed());
            }
        }
    }
}

TEST_CASE("restriction along the identity embedding fixes the action") {
    Ctx c = make_ctx(function_algebra(cyclic_table(3), Q));
    SemigroupModule self{c.sg.space, c.sg.m};
    RestrictedModule rm = restrict_module(identity_mmorphism(c.sg), c.sg, self);
    CHECK(rm.report.all_passed());
    CHECK(entries_equal(rm.mod.action, c.sg.m));
    // Restriction along an automorphism still yields a module.
    MMorphism sq = sharp(permutation_map(Q, c.sg.space, c.sg.space, {0, 2, 1}), c.sg);
    RestrictedModule rs = restrict_module(sq, c.sg, self);
    CHECK(rs.report.all_passed());
    CHECK(check_semigroup_module(c.sg, rs.mod, c.inst.unit).passed("module.associative"));
}

TEST_CASE("tensoring a trivial leg with the regular module gives 1⊗m") {
    for (std::size_t n : {2, 3}) {
        Ctx c = make_ctx(function_algebra(cyclic_table(n), Q));
        RegularModule rm = regular_module(c.inst.bim, c.reg);
        const LinMap iA = identity(Q, c.inst.bim.space);
        TensorModule tm = tensor_module(c.inst.bim,
                                        SemigroupModule{c.inst.bim.space,
                                                        tensor(iA, c.inst.bim.e)},
                                        rm);
        CHECK(tm.report.all_passed());
        CHECK(entries_equal(tm.mod.action, tensor(iA, c.sg.m)));
    }
}

TEST_CASE("the diagonal tensor action satisfies the exchange laws") {
    Ctx c = make_ctx(function_algebra(cyclic_table(2), Q));
    RegularModule rm = regular_module(c.inst.bim, c.reg);
    TensorModule tm = tensor_module(c.inst.bim, rm.base, rm);
    CHECK(tm.report.all_passed());
    CHECK(check_semigroup_module(c.sg, tm.mod, c.inst.unit).passed("module.associative"));
}

TEST_CASE("dual modules exist and satisfy their snake-compatible law suite") {
    for (std::size_t n : {2, 3}) {
        for (bool grp : {false, true}) {
            Ctx c = make_ctx(grp ? group_algebra(cyclic_table(n), Q)
                                 : function_algebra(cyclic_table(n), Q));
            HopfCheck hc = check_hopf(c.inst.bim);
            REQUIRE(hc.antipode.has_value());
            RegularModule rm = regular_module(c.inst.bim, c.reg);
            DualModule dm = dual_module(c.inst.bim, c.reg, *hc.antipode, rm.base);
            CAPTURE(c.inst.name);
            CHECK(dm.report.all_passed());
            CHECK(dm.mod.space.total() == c.inst.bim.space.total());
        }
    }
}

TEST_CASE("degenerate actions fail the module laws") {
    Ctx c = make_ctx(group_algebra(cyclic_table(3), Q));
    SemigroupModule zero{c.sg.space, zero_map(Q, c.sg.space * c.sg.space, c.sg.space)};
    CheckReport r = check_semigroup_module(c.sg, zero, c.inst.unit);
    CHECK_FALSE(r.all_passed());
    CHECK(r.passed("module.associative"));
    CHECK_FALSE(r.passed("module.surjective"));
    CHECK_FALSE(r.passed("module.nondegenerate"));
}
