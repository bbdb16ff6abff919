#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cla/catalog.hpp"

using namespace cla;

TEST_CASE("matrix units compose like elementary matrices") {
    auto entry = build_qn(2);
    const GradedSpace& sp = entry.algebra.space();
    int G = 4;
    for (int a = 0; a < G; ++a)
        for (int b = 0; b < G; ++b)
            for (int c = 0; c < G; ++c) {
                auto left = GradedMatrix::unit(sp, a, b, 1, 2);
                auto right = GradedMatrix::unit(sp, b, c, 2, 1);
                CHECK(left * right == GradedMatrix::unit(sp, a, c, 1, 1));
                auto miss = GradedMatrix::unit(sp, b, c, 1, 1); // column/row mismatch
                CHECK((left * miss).is_zero());
            }
}

TEST_CASE("unit degree is the row degree minus the column degree") {
    auto entry = build_qn(1);
    const auto& ctx = entry.algebra.ctx();
    const GradedSpace& sp = entry.algebra.space();
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) {
            auto u = GradedMatrix::unit(sp, a, b, 1, 1);
            CHECK(u.homogeneous());
            CHECK(u.degree() == ctx.add_code(a, ctx.neg_code(b)));
        }
}

TEST_CASE("dense and graded representations agree") {
    auto entry = build_osp(2, 1);
    for (const auto& e : entry.algebra.basis()) {
        GradedMatrix back = GradedMatrix::from_dense(entry.algebra.space(), e.matrix.dense());
        CHECK(back == e.matrix);
        CHECK(back.homogeneous());
    }
}

TEST_CASE("color trace weighs blocks by the factor diagonal") {
    // On the q(n) space omega(alpha,alpha) is +1,-1,-1,+1 over the four
    // blocks, so the identity is color-traceless.
    auto entry = build_qn(3);
    CHECK(color_trace(GradedMatrix::identity(entry.algebra.space())).is_zero());
}

TEST_CASE("color trace of the odd commutant against the odd unit is 4") {
    auto entry = build_qn(1);
    const auto& ctx = entry.algebra.ctx();
    int d11 = ctx.code(ctx.parse_degree("11"));
    const GradedMatrix& m11 = entry.expected_commutants.at(d11);
    int theta = entry.algebra.find("E^11[1,1]");
    REQUIRE(theta >= 0);
    CHECK(color_trace(m11 * entry.algebra.basis(theta).matrix) == Cyc(12, Rational(4)));
}

TEST_CASE("color trace permutation law over whole catalog bases") {
    for (const auto& entry : {build_qn(1), build_qn(2), build_z32_sl2(), build_osp(1, 1)}) {
        const auto& alg = entry.algebra;
        for (size_t a = 0; a < alg.dim(); ++a)
            for (size_t b = 0; b < alg.dim(); ++b)
                CHECK(ctr_permutation_check(alg.basis(a).matrix, alg.basis(b).matrix));
        for (const auto& [d, m] : entry.expected_commutants)
            for (size_t a = 0; a < alg.dim(); ++a) {
                CHECK(ctr_permutation_check(m, alg.basis(a).matrix));
                CHECK(ctr_permutation_check(alg.basis(a).matrix, m));
            }
    }
}

TEST_CASE("color bracket is the twisted commutator") {
    auto entry = build_z32_sl2();
    const auto& alg = entry.algebra;
    const auto& ctx = alg.ctx();
    for (size_t a = 0; a < alg.dim(); ++a)
        for (size_t b = 0; b < alg.dim(); ++b) {
            const GradedMatrix &X = alg.basis(a).matrix, &Y = alg.basis(b).matrix;
            Cyc w = ctx.omega(alg.basis(a).degree, alg.basis(b).degree);
            CHECK(color_bracket(X, Y) == X * Y - (Y * X).scaled(w));
        }
}

TEST_CASE("defining-form membership for the orthosymplectic family") {
    auto entry = build_osp(1, 1);
    REQUIRE(entry.jform.has_value());
    std::string why;
    CHECK(entry.jform->well_formed(&why));
    for (const auto& e : entry.algebra.basis()) CHECK(j_member(e.matrix, *entry.jform));
    // the identity does not satisfy the membership condition
    CHECK(!j_member(GradedMatrix::identity(entry.algebra.space()), *entry.jform));
    // perturbing a generator breaks membership in its block only
    GradedMatrix bad = entry.algebra.basis(0).matrix +
                       GradedMatrix::unit(entry.algebra.space(), 0, 0, 1, 1);
    CHECK(!j_member(bad, *entry.jform));
}

TEST_CASE("members of the defining form are closed under the bracket") {
    auto entry = build_osp(2, 1);
    const auto& alg = entry.algebra;
    for (size_t a = 0; a < alg.dim(); ++a)
        for (size_t b = 0; b < alg.dim(); ++b)
            CHECK(j_member(color_bracket(alg.basis(a).matrix, alg.basis(b).matrix),
                           *entry.jform));
}
