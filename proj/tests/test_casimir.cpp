#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cla/catalog.hpp"

using namespace cla;

namespace {

QuadElement scaled_quad(const QuadElement& q, const Cyc& s) {
    QuadElement out = q;
    out.constant *= s;
    for (auto& [k, v] : out.linear) v *= s;
    for (auto& [k, v] : out.quadratic) v *= s;
    return out;
}

} // namespace

TEST_CASE("commutant dimensions per degree") {
    auto check_dims = [](const CatalogEntry& e) {
        const auto& ctx = e.algebra.ctx();
        for (size_t d = 0; d < ctx.group_size(); ++d) {
            Commutant c = solve_commutants(e.algebra, static_cast<int>(d));
            size_t expect = e.expected_commutants.count(static_cast<int>(d)) ? 1 : 0;
            CHECK(c.basis.size() == expect);
            if (expect == 1) {
                CHECK(proportional(e.expected_commutants.at(static_cast<int>(d)), c.basis[0]));
                // every kernel element graded-commutes with the whole realization
                for (size_t a = 0; a < e.algebra.dim(); ++a)
                    CHECK(color_bracket(c.basis[0], e.algebra.basis(a).matrix).is_zero());
            }
        }
    };
    check_dims(build_qn(1));
    check_dims(build_qn(2));
    check_dims(build_z32_sl2());
    check_dims(build_osp(1, 1));
    check_dims(build_osp(2, 1));
}

TEST_CASE("kernel normalization makes commutants deterministic") {
    auto e = build_qn(2);
    for (size_t d = 0; d < 4; ++d) {
        Commutant c1 = solve_commutants(e.algebra, static_cast<int>(d));
        Commutant c2 = solve_commutants(e.algebra, static_cast<int>(d));
        REQUIRE(c1.basis.size() == c2.basis.size());
        for (size_t k = 0; k < c1.basis.size(); ++k) CHECK(c1.basis[k] == c2.basis[k]);
    }
}

TEST_CASE("the even form of the doubled matrix family vanishes identically") {
    for (int n : {1, 2}) {
        auto e = build_qn(n);
        const auto& ctx = e.algebra.ctx();
        for (const char* t : {"00", "01", "10"}) {
            int d = ctx.code(ctx.parse_degree(t));
            GradedForm form =
                bilinear_form(e.algebra, e.expected_commutants.at(ctx.neg_code(d)),
                              e.normalization);
            CHECK(form.is_zero());
            auto inv = invert_form(form);
            CHECK(!inv.ok);
            CHECK(inv.rank == 0);
            bool witness_nonzero = false;
            for (const auto& v : inv.null_witness)
                if (!v.is_zero()) witness_nonzero = true;
            CHECK(witness_nonzero);
        }
    }
}

TEST_CASE("form laws hold and a perturbed entry is caught") {
    auto e = build_z32_sl2();
    const auto& ctx = e.algebra.ctx();
    int mu = ctx.code(ctx.parse_degree("11"));
    GradedForm form = bilinear_form(e.algebra, e.expected_commutants.at(ctx.neg_code(mu)),
                                    e.normalization);
    CHECK(check_form_properties(form).all_pass());

    GradedForm bad = form;
    int a = e.algebra.find("H^00"), b = e.algebra.find("H^11");
    bad.eta.at(a, b) += Cyc::one(12);
    auto rep = check_form_properties(bad);
    CHECK(!rep.all_pass());
    bool witnessed = false;
    for (const auto& c : rep.checks)
        if (!c.pass && !c.witness.empty()) witnessed = true;
    CHECK(witnessed);
}

TEST_CASE("support violations are caught") {
    auto e = build_qn(1);
    const auto& ctx = e.algebra.ctx();
    int mu = ctx.code(ctx.parse_degree("11"));
    GradedForm form = bilinear_form(e.algebra, e.expected_commutants.at(mu), e.normalization);
    GradedForm bad = form;
    bad.eta.at(0, 0) += Cyc::one(12); // degree 00 + 00 != 11
    auto rep = check_form_properties(bad);
    CHECK(!rep.all_pass());
}

TEST_CASE("a non-commutant seed is rejected") {
    auto e = build_qn(1);
    GradedMatrix not_comm = e.algebra.basis(1).matrix; // a generator, not a commutant
    CHECK_THROWS_AS(bilinear_form(e.algebra, not_comm, e.normalization),
                    std::invalid_argument);
}

TEST_CASE("inverse identities are two sided") {
    for (const auto& e : {build_z32_sl2(), build_osp(1, 1)}) {
        const auto& ctx = e.algebra.ctx();
        for (const auto& [d, M] : e.expected_commutants) {
            GradedForm form = bilinear_form(e.algebra, M, e.normalization);
            if (form.is_zero()) continue;
            auto inv = invert_form(form);
            REQUIRE(inv.ok);
            Mat id = Mat::identity(12, e.algebra.dim());
            CHECK(inv.inverse * form.eta == id);
            CHECK(form.eta * inv.inverse == id);
            CHECK(check_form_properties(form, &inv.inverse).all_pass());
        }
    }
}

TEST_CASE("every Casimir monomial carries the form degree") {
    auto e = build_z32_sl2();
    const auto& ctx = e.algebra.ctx();
    for (const auto& [d, M] : e.expected_commutants) {
        int mu = ctx.neg_code(d);
        GradedForm form = bilinear_form(e.algebra, M, e.normalization);
        auto inv = invert_form(form);
        REQUIRE(inv.ok);
        QuadElement cas = build_casimir(e.algebra, inv.inverse);
        for (const auto& [ab, v] : cas.quadratic)
            CHECK(ctx.add_code(e.algebra.basis(ab.first).degree,
                               e.algebra.basis(ab.second).degree) == mu);
        for (const auto& [a, v] : cas.linear) CHECK(e.algebra.basis(a).degree == mu);
        if (!cas.constant.is_zero()) CHECK(mu == ctx.zero_code());
    }
}

TEST_CASE("scaling the commutant scales the form and inverse covariantly") {
    auto e = build_osp(1, 1);
    const auto& ctx = e.algebra.ctx();
    int d11 = ctx.code(ctx.parse_degree("11"));
    const GradedMatrix& M = e.expected_commutants.at(d11);
    Cyc s = Cyc(12, Rational(3, 2)) * Cyc::root_of_unity(12, 4);

    GradedForm base = bilinear_form(e.algebra, M, e.normalization);
    GradedForm scaled = bilinear_form(e.algebra, M.scaled(s), e.normalization);
    CHECK(scaled.eta == base.eta.scaled(s));

    auto inv_base = invert_form(base);
    auto inv_scaled = invert_form(scaled);
    REQUIRE(inv_base.ok);
    REQUIRE(inv_scaled.ok);
    CHECK(inv_scaled.inverse == inv_base.inverse.scaled(s.inverse()));

    // The Casimir follows the inverse: the scaled seed yields s^-1 times the
    // base element, so centrality is unaffected.
    QuadElement cas_base = build_casimir(e.algebra, inv_base.inverse);
    QuadElement cas_scaled = build_casimir(e.algebra, inv_scaled.inverse);
    CHECK(cas_scaled == scaled_quad(cas_base, s.inverse()));
    CHECK(verify_centrality(e.algebra, cas_scaled).all_pass());
}

TEST_CASE("both centrality oracles accept the true element and reject a corruption") {
    auto e = build_qn(2);
    const auto& ctx = e.algebra.ctx();
    int d11 = ctx.code(ctx.parse_degree("11"));
    GradedForm form = bilinear_form(e.algebra, e.expected_commutants.at(d11), e.normalization);
    auto inv = invert_form(form);
    REQUIRE(inv.ok);
    QuadElement cas = build_casimir(e.algebra, inv.inverse);
    auto good = verify_centrality(e.algebra, cas);
    REQUIRE(good.checks.size() == 2);
    CHECK(good.all_pass());

    QuadElement bad = cas;
    auto it = bad.quadratic.begin();
    it->second = -it->second;
    auto rep = verify_centrality(e.algebra, bad);
    REQUIRE(rep.checks.size() == 2);
    CHECK(!rep.checks[0].pass); // symbolic oracle
    CHECK(!rep.checks[1].pass); // matrix oracle
    CHECK(!rep.checks[0].witness.empty());
}
