#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "mulhopf/linmap.hpp"

using namespace mulhopf;
using namespace mulhopf::testutil;

namespace {
const Field Q = Field::rationals();
const Field F7 = Field::prime(7);
}  // namespace

TEST_CASE("rational scalars are exact") {
    Scalar a = Scalar::parse(Q, "1/3");
    Scalar b = Scalar::parse(Q, "1/6");
    CHECK((a + b).str() == "1/2");
    CHECK(Scalar::parse(Q, "-2/4").str() == "-1/2");
    CHECK((a * Scalar::integer(Q, 3)).is_one());
    CHECK((a - a).is_zero());
    CHECK((Scalar::integer(Q, 2) / Scalar::integer(Q, -4)).str() == "-1/2");
    CHECK(Scalar::parse(Q, "1/3").inverse().str() == "3");
    CHECK_THROWS_AS(Scalar::parse(Q, "1/0"), std::invalid_argument);
    CHECK_THROWS_AS(Scalar::parse(Q, "x"), std::invalid_argument);
    CHECK_THROWS_AS(Scalar::integer(Q, 0).inverse(), std::domain_error);
}

TEST_CASE("prime field scalars reduce mod p") {
    CHECK(Scalar::parse(F7, "10").str() == "3");
    CHECK(Scalar::parse(F7, "-1").str() == "6");
    CHECK((sc(F7, 3) * sc(F7, 5)).is_one());
    CHECK(sc(F7, 3).inverse().str() == "5");
    CHECK((sc(F7, 4) / sc(F7, 2)).str() == "2");
    CHECK(Scalar::integer(F7, -9).str() == "5");
    CHECK_THROWS_AS(Field::prime(6), std::invalid_argument);
    CHECK_THROWS_AS(Field::prime(1), std::invalid_argument);
    CHECK_THROWS_AS(Scalar::residue(Q, 1), std::invalid_argument);
    CHECK_THROWS_AS(sc(Q, 1) + sc(F7, 1), std::invalid_argument);
}

TEST_CASE("space signatures order the leftmost factor most significantly") {
    SpaceSignature I;
    CHECK(I.total() == 1);
    CHECK(I.basis_name(0) == "1");
    SpaceSignature A = SpaceSignature::simple("A", 2, {"δ_1", "δ_g"});
    SpaceSignature B = SpaceSignature::simple("B", 3);
    SpaceSignature AB = A * B;
    CHECK(AB.total() == 6);
    CHECK(AB.basis_name(0) == "δ_1⊗B[0]");
    CHECK(AB.basis_name(5) == "δ_g⊗B[2]");
    CHECK((I * A).total() == 2);
}

TEST_CASE("identity, zero, addition") {
    SpaceSignature A = SpaceSignature::simple("A", 2);
    LinMap id = identity(Q, A);
    CHECK(id.at(0, 0).is_one());
    CHECK(id.at(1, 0).is_zero());
    CHECK(zero_map(Q, A, A).is_zero());
    CHECK((id - id).is_zero());
    CHECK(entries_equal(id + zero_map(Q, A, A), id));
}

TEST_CASE("compose is associative and unital") {
    SpaceSignature A = SpaceSignature::simple("A", 2);
    LinMap f = from_rows(Q, A, A, {{1, 2}, {3, 4}});
    LinMap g = from_rows(Q, A, A, {{0, 1}, {1, 1}});
    LinMap h = from_rows(Q, A, A, {{2, 0}, {1, 1}});
    CHECK(entries_equal(compose(h, g, f), compose(compose(h, g), f)));
    CHECK(entries_equal(compose(h, g, f), compose(h, compose(g, f))));
    CHECK(entries_equal(compose(identity(Q, A), f), f));
    CHECK(entries_equal(compose(f, identity(Q, A)), f));
    CHECK(entries_equal(compose(g, f), from_rows(Q, A, A, {{3, 4}, {4, 6}})));
}

TEST_CASE("tensor is functorial and matches the Kronecker oracle") {
    SpaceSignature A = SpaceSignature::simple("A", 2);
    LinMap f = from_rows(Q, A, A, {{1, 2}, {3, 4}});
    LinMap g = from_rows(Q, A, A, {{0, 1}, {1, 1}});
    LinMap fp = from_rows(Q, A, A, {{2, 0}, {1, 1}});
    LinMap gp = from_rows(Q, A, A, {{1, 1}, {0, 2}});
    CHECK(entries_equal(compose(tensor(f, g), tensor(fp, gp)),
                        tensor(compose(f, fp), compose(g, gp))));
    // Leftmost factor most significant: tensor(f, g) has block (i,j) = f[i][j]·g.
    LinMap fg = tensor(f, g);
    CHECK(fg.at(0, 1) == sc(Q, 1));
    CHECK(fg.at(0, 2) == sc(Q, 0));
    CHECK(fg.at(0, 3) == sc(Q, 2));
    CHECK(fg.at(2, 0) == sc(Q, 0));
    CHECK(fg.at(3, 1) == sc(Q, 3));
    // Unit factor is transparent.
    CHECK(entries_equal(tensor(identity(Q, SpaceSignature{}), f), f));
    CHECK(entries_equal(tensor(f, identity(Q, SpaceSignature{})), f));
    // Variadic form folds left.
    CHECK(entries_equal(tensor(f, g, fp), tensor(tensor(f, g), fp)));
}

TEST_CASE("braiding is the block swap, self-inverse across the swapped pair") {
    SpaceSignature A = SpaceSignature::simple("A", 2);
    SpaceSignature B = SpaceSignature::simple("B", 3);
    LinMap c = braiding(Q, A, B);
    // e_{a·3+b} ↦ e_{b·2+a}.
    CHECK(entries_equal(c, permutation_map(Q, A * B, B * A, {0, 2, 4, 1, 3, 5})));
    CHECK(entries_equal(compose(braiding(Q, B, A), c), identity(Q, A * B)));
    LinMap f = from_rows(Q, A, A, {{1, 2}, {3, 4}});
    LinMap g = from_rows(Q, B, B, {{1, 0, 0}, {0, 2, 0}, {1, 0, 3}});
    // Naturality: c ∘ (f⊗g) = (g⊗f) ∘ c.
    CHECK(entries_equal(compose(c, tensor(f, g)), compose(tensor(g, f), c)));
}

TEST_CASE("rank, kernel, injectivity, surjectivity") {
    SpaceSignature A = SpaceSignature::simple("A", 2, {"x", "y"});
    LinMap f = from_rows(Q, A, A, {{1, 2}, {2, 4}});
    CHECK(rank(f) == 1);
    CHECK_FALSE(is_injective(f));
    CHECK_FALSE(is_surjective(f));
    auto ker = kernel_basis(f);
    REQUIRE(ker.size() == 1);
    CHECK(render_vector(A, ker[0]) == "-2·x + y");
    CHECK(rank(identity(Q, A)) == 2);
    CHECK(is_injective(identity(Q, A)));
    CHECK(is_surjective(identity(Q, A)));
    CHECK(kernel_basis(identity(Q, A)).empty());
    // Rank depends on the field: the integer 7 vanishes in F7.
    SpaceSignature X = SpaceSignature::simple("X", 1);
    CHECK(rank(from_rows(Q, X, X, {{7}})) == 1);
    CHECK(rank(from_rows(F7, X, X, {{7}})) == 0);
}

TEST_CASE("solve_linear finds solutions and rejects inconsistent systems") {
    SpaceSignature A = SpaceSignature::simple("A", 2);
    SpaceSignature X = SpaceSignature::simple("X", 1);
    LinMap m = from_rows(Q, A, A, {{1, 1}, {0, 1}});
    LinMap b = from_rows(Q, X, A, {{3}, {1}});
    auto x = solve_linear(m, b);
    REQUIRE(x.has_value());
    CHECK(entries_equal(compose(m, *x), b));
    CHECK(x->at(0, 0) == sc(Q, 2));
    CHECK(x->at(1, 0) == sc(Q, 1));
    // Inconsistent system: the pivot sweep must reach the augmented block.
    LinMap sing = from_rows(Q, X, A, {{1}, {1}});
    CHECK_FALSE(solve_linear(sing, from_rows(Q, X, A, {{1}, {2}})).has_value());
    CHECK(solve_linear(sing, from_rows(Q, X, A, {{5}, {5}})).has_value());
    // Underdetermined system: free columns take value zero.
    LinMap wide = from_rows(Q, A, X, {{1, 1}});
    auto u = solve_linear(wide, from_rows(Q, X, X, {{4}}));
    REQUIRE(u.has_value());
    CHECK(u->at(0, 0) == sc(Q, 4));
    CHECK(u->at(1, 0) == sc(Q, 0));
}

TEST_CASE("inverse inverts or throws with a kernel witness") {
    SpaceSignature A = SpaceSignature::simple("A", 2, {"x", "y"});
    LinMap f = from_rows(Q, A, A, {{1, 1}, {0, 1}});
    CHECK(entries_equal(inverse(f), from_rows(Q, A, A, {{1, -1}, {0, 1}})));
    LinMap sing = from_rows(Q, A, A, {{1, 2}, {2, 4}});
    CHECK_THROWS_AS(inverse(sing), NotInvertible);
    try {
        inverse(sing);
    } catch (const NotInvertible& e) {
        CHECK(std::string(e.what()).find("-2·x + y") != std::string::npos);
    }
    SpaceSignature B = SpaceSignature::simple("B", 3);
    CHECK_THROWS_AS(inverse(zero_map(Q, A, B)), NotInvertible);
}

TEST_CASE("right_section splits epimorphisms") {
    SpaceSignature A = SpaceSignature::simple("A", 2);
    SpaceSignature B = SpaceSignature::simple("B", 3);
    LinMap f = from_rows(Q, B, A, {{1, 0, 2}, {0, 1, 5}});
    LinMap s = right_section(f);
    CHECK(entries_equal(compose(f, s), identity(Q, A)));
    CHECK_THROWS_AS(right_section(from_rows(Q, A, A, {{1, 2}, {2, 4}})), NotSurjective);
}

TEST_CASE("solve_through_epi factors maps through surjections") {
    SpaceSignature A = SpaceSignature::simple("A", 2);
    SpaceSignature B = SpaceSignature::simple("B", 3);
    LinMap epi = from_rows(Q, B, A, {{1, 0, 1}, {0, 1, 0}});
    LinMap target = from_rows(Q, B, A, {{2, 0, 2}, {1, 1, 1}});
    LinMap u = solve_through_epi(target, epi);
    CHECK(entries_equal(compose(u, epi), target));
    // x - z does not factor through (x + z, y).
    LinMap bad = from_rows(Q, B, A, {{1, 0, -1}, {0, 0, 0}});
    CHECK_THROWS_AS(solve_through_epi(bad, epi), NotWellDefined);
}

TEST_CASE("image factorization splits rank through the image") {
    SpaceSignature A = SpaceSignature::simple("A", 2);
    SpaceSignature B = SpaceSignature::simple("B", 3);
    LinMap f = from_rows(Q, B, A, {{1, 2, 3}, {2, 4, 6}});
    ImageFactorization im = image_factorization(f);
    CHECK(im.image.total() == 1);
    CHECK(entries_equal(compose(im.include, im.project), f));
    CHECK(is_surjective(im.project));
    CHECK(is_injective(im.include));
    REQUIRE(im.pivot_columns.size() == 1);
    CHECK(im.pivot_columns[0] == 0);
    ImageFactorization full = image_factorization(identity(Q, A), "copy");
    CHECK(full.image.total() == 2);
}

TEST_CASE("transpose relabels and reverses twice to the original") {
    SpaceSignature A = SpaceSignature::simple("A", 2);
    SpaceSignature B = SpaceSignature::simple("B", 3);
    SpaceSignature Ad = SpaceSignature::simple("A*", 2);
    SpaceSignature Bd = SpaceSignature::simple("B*", 3);
    LinMap f = from_rows(Q, B, A, {{1, 2, 3}, {4, 5, 6}});
    LinMap ft = transpose(f, Ad, Bd);
    CHECK(ft.rows() == 3);
    CHECK(ft.at(2, 0) == sc(Q, 3));
    CHECK(ft.at(0, 1) == sc(Q, 4));
    CHECK(entries_equal(transpose(ft, B, A), f));
}

TEST_CASE("render_vector names basis combinations") {
    SpaceSignature A = SpaceSignature::simple("A", 2, {"δ_1", "δ_g"});
    CHECK(render_vector(A, column(Q, A, {1, 0})) == "δ_1");
    CHECK(render_vector(A, column(Q, A, {1, -1})) == "δ_1 - δ_g");
    CHECK(render_vector(A, column(Q, A, {0, 3})) == "3·δ_g");
    CHECK(render_vector(A, column(Q, A, {0, 0})) == "0");
}

TEST_CASE("dualities satisfy both snake identities") {
    for (Field k : {Q, F7}) {
        SpaceSignature A = SpaceSignature::simple("A", 3);
        Duality d = make_duality(k, A);
        LinMap iV = identity(k, d.space);
        LinMap iD = identity(k, d.dual);
        CHECK(entries_equal(compose(tensor(d.eps, iV), tensor(iV, d.eta)), iV));
        CHECK(entries_equal(compose(tensor(iD, d.eps), tensor(d.eta, iD)), iD));
        Duality rd = reverse_duality(d);
        LinMap riV = identity(k, rd.space);
        LinMap riD = identity(k, rd.dual);
        CHECK(entries_equal(compose(tensor(rd.eps, riV), tensor(riV, rd.eta)), riV));
        CHECK(entries_equal(compose(tensor(riD, rd.eps), tensor(rd.eta, riD)), riD));
    }
}

TEST_CASE("tensor_duality pairs composite spaces with reversed factors") {
    SpaceSignature A = SpaceSignature::simple("A", 2);
    SpaceSignature B = SpaceSignature::simple("B", 3);
    Duality dt = tensor_duality(make_duality(Q, A), make_duality(Q, B));
    CHECK(dt.space.total() == 6);
    CHECK(dt.dual.total() == 6);
    LinMap iV = identity(Q, dt.space);
    LinMap iD = identity(Q, dt.dual);
    CHECK(entries_equal(compose(tensor(dt.eps, iV), tensor(iV, dt.eta)), iV));
    CHECK(entries_equal(compose(tensor(iD, dt.eps), tensor(dt.eta, iD)), iD));
}

TEST_CASE("shape mismatches are rejected") {
    SpaceSignature A = SpaceSignature::simple("A", 2);
    SpaceSignature B = SpaceSignature::simple("B", 3);
    CHECK_THROWS_AS(compose(identity(Q, A), identity(Q, B)), SignatureMismatch);
    CHECK_THROWS_AS(identity(Q, A) + identity(Q, B), SignatureMismatch);
    CHECK_THROWS_AS(compose(identity(Q, A), identity(F7, A)), SignatureMismatch);
}
