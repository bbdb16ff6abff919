#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cla/catalog.hpp"
#include "cla/loopext.hpp"

using namespace cla;

namespace {

ExtensionData extension_for(const CatalogEntry& e) {
    ExtensionData ext{&e.algebra, {}};
    const auto& ctx = e.algebra.ctx();
    for (size_t mu = 0; mu < ctx.group_size(); ++mu) {
        int d = ctx.neg_code(static_cast<int>(mu));
        auto it = e.expected_commutants.find(d);
        if (it == e.expected_commutants.end()) continue;
        GradedForm form = bilinear_form(e.algebra, it->second, e.normalization);
        if (!form.is_zero()) ext.forms.emplace_back(static_cast<int>(mu), form.eta);
    }
    return ext;
}

} // namespace

TEST_CASE("zero-mode brackets reduce to the plain bracket") {
    auto e = build_qn(1);
    auto ext = extension_for(e);
    const auto& alg = e.algebra;
    for (size_t a = 0; a < alg.dim(); ++a)
        for (size_t b = 0; b < alg.dim(); ++b) {
            LoopElement out = loop_bracket(ext, loop_term(alg, static_cast<int>(a), 0, Cyc::one(12)),
                                           loop_term(alg, static_cast<int>(b), 0, Cyc::one(12)));
            CHECK(out.central.empty());
            std::map<std::pair<int, long>, Cyc> expect;
            for (const auto& [c, v] : alg.f(a, b)) expect[{c, 0}] = v;
            CHECK(out.terms == expect);
        }
}

TEST_CASE("opposite modes produce the mode-linear central charge") {
    auto e = build_z32_sl2();
    auto ext = extension_for(e);
    REQUIRE(ext.forms.size() == 3);
    const auto& alg = e.algebra;
    const auto& ctx = alg.ctx();
    int h00 = alg.find("H^00"), h11 = alg.find("H^11");
    int c11 = ctx.code(ctx.parse_degree("11"));
    for (long m = -3; m <= 3; ++m) {
        LoopElement out = loop_bracket(ext, loop_term(alg, h00, m, Cyc::one(12)),
                                       loop_term(alg, h11, -m, Cyc::one(12)));
        CHECK(out.terms.empty());
        if (m == 0) {
            CHECK(out.central.empty());
        } else {
            REQUIRE(out.central.size() == 1);
            CHECK(out.central.at(c11) == Cyc(12, Rational(m)));
        }
    }
    // nonzero mode sum: no central term at all
    LoopElement out = loop_bracket(ext, loop_term(alg, h00, 2, Cyc::one(12)),
                                   loop_term(alg, h11, 1, Cyc::one(12)));
    CHECK(out.is_zero());
}

TEST_CASE("loop antisymmetry including central terms") {
    for (const auto& e : {build_qn(1), build_z32_sl2()}) {
        auto ext = extension_for(e);
        const auto& alg = e.algebra;
        const auto& ctx = alg.ctx();
        for (size_t a = 0; a < alg.dim(); ++a)
            for (size_t b = 0; b < alg.dim(); ++b)
                for (long m : {-2L, 0L, 1L}) {
                    LoopElement xy =
                        loop_bracket(ext, loop_term(alg, static_cast<int>(a), m, Cyc::one(12)),
                                     loop_term(alg, static_cast<int>(b), -m, Cyc::one(12)));
                    LoopElement yx =
                        loop_bracket(ext, loop_term(alg, static_cast<int>(b), -m, Cyc::one(12)),
                                     loop_term(alg, static_cast<int>(a), m, Cyc::one(12)));
                    Cyc w = -ctx.omega(alg.basis(a).degree, alg.basis(b).degree);
                    LoopElement scaled;
                    for (const auto& [k, v] : yx.terms) scaled.terms[k] = w * v;
                    for (const auto& [k, v] : yx.central) scaled.central[k] = w * v;
                    CHECK(xy == scaled);
                }
    }
}

TEST_CASE("central charges are annihilated by every bracket") {
    auto e = build_qn(1);
    auto ext = extension_for(e);
    LoopElement c;
    c.central[3] = Cyc::one(12);
    LoopElement x = loop_term(e.algebra, 0, 2, Cyc::one(12));
    CHECK(loop_bracket(ext, c, x).is_zero());
    CHECK(loop_bracket(ext, x, c).is_zero());
    CHECK(loop_bracket(ext, c, c).is_zero());
}

TEST_CASE("dropping the central forms recovers the plain loop algebra") {
    auto e = build_qn(1);
    ExtensionData plain{&e.algebra, {}};
    const auto& alg = e.algebra;
    for (size_t a = 0; a < alg.dim(); ++a)
        for (size_t b = 0; b < alg.dim(); ++b) {
            LoopElement out =
                loop_bracket(plain, loop_term(alg, static_cast<int>(a), 1, Cyc::one(12)),
                             loop_term(alg, static_cast<int>(b), -1, Cyc::one(12)));
            CHECK(out.central.empty());
        }
    CHECK(verify_loop_jacobi(plain, -2, 2).pass);
}

TEST_CASE("loop Jacobi identity over the default window") {
    auto q = build_qn(1);
    auto rq = verify_loop_jacobi(extension_for(q), -2, 2);
    CHECK(rq.pass);
    CHECK(rq.instances == 4 * 4 * 4 * 125);

    auto z = build_z32_sl2();
    auto rz = verify_loop_jacobi(extension_for(z), -2, 2);
    CHECK(rz.pass);
    CHECK(rz.instances == 9 * 9 * 9 * 125);
}

TEST_CASE("an empty mode window is vacuously true") {
    auto e = build_qn(1);
    auto rep = verify_loop_jacobi(extension_for(e), 1, 0);
    CHECK(rep.pass);
    CHECK(rep.instances == 0);
}

TEST_CASE("a non-invariant central form breaks the Jacobi identity") {
    auto e = build_qn(1);
    ExtensionData bad{&e.algebra, {}};
    Mat eta(12, e.algebra.dim(), e.algebra.dim());
    eta.at(0, 1) = Cyc::one(12); // pairs degrees 00 and 01: not an invariant form
    bad.forms.emplace_back(e.algebra.ctx().code(e.algebra.ctx().parse_degree("01")), eta);
    auto rep = verify_loop_jacobi(bad, -2, 2);
    CHECK(!rep.pass);
    CHECK(!rep.witness.empty());
}
