// Acceptance gate: one line per criterion, pass/fail, nonzero exit on any
// failure. Each criterion is self-contained and exercises the library end
// to end the way a release check would.
#include "cla/loopext.hpp"
#include "cla/report.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

using namespace cla;

namespace {

int failures = 0;

void verdict(int k, const std::string& label, bool ok) {
    std::cout << "criterion " << k << " (" << label << "): " << (ok ? "pass" : "FAIL") << "\n";
    if (!ok) ++failures;
}

bool factor_laws(const GradingContext& ctx) {
    int G = static_cast<int>(ctx.group_size());
    Cyc one = Cyc::one(ctx.conductor());
    for (int a = 0; a < G; ++a)
        for (int b = 0; b < G; ++b) {
            if (ctx.omega(a, b) * ctx.omega(b, a) != one) return false;
            if (ctx.has_sigma() &&
                ctx.sigma(a, b) * ctx.sigma(b, a).inverse() != ctx.omega(a, b))
                return false;
            for (int c = 0; c < G; ++c) {
                if (ctx.omega(ctx.add_code(a, b), c) != ctx.omega(a, c) * ctx.omega(b, c))
                    return false;
                if (ctx.omega(a, ctx.add_code(b, c)) != ctx.omega(a, b) * ctx.omega(a, c))
                    return false;
            }
        }
    return ctx.validate_factor().all_pass();
}

ExtensionData extension_for(const CatalogEntry& e, std::vector<GradedForm>& keep) {
    ExtensionData ext{&e.algebra, {}};
    const auto& ctx = e.algebra.ctx();
    for (size_t mu = 0; mu < ctx.group_size(); ++mu) {
        auto it = e.expected_commutants.find(ctx.neg_code(static_cast<int>(mu)));
        if (it == e.expected_commutants.end()) continue;
        keep.push_back(bilinear_form(e.algebra, it->second, e.normalization));
        if (!keep.back().is_zero()) ext.forms.emplace_back(static_cast<int>(mu), keep.back().eta);
    }
    return ext;
}

// Forms, inverses, Casimirs and reference tables of one entry.
bool entry_pipeline(const CatalogEntry& e) {
    const ColorAlgebra& alg = e.algebra;
    const auto& ctx = alg.ctx();
    if (!alg.check_antisymmetry().all_pass() || !alg.check_jacobi().all_pass()) return false;
    for (size_t d = 0; d < ctx.group_size(); ++d) {
        Commutant c = solve_commutants(alg, static_cast<int>(d));
        auto it = e.expected_commutants.find(static_cast<int>(d));
        if (it == e.expected_commutants.end()) {
            if (!c.basis.empty()) return false;
            continue;
        }
        if (c.basis.size() != 1 || !proportional(it->second, c.basis[0])) return false;
    }
    for (const auto& [md, M] : e.expected_commutants) {
        int mu = ctx.neg_code(md);
        GradedForm form = bilinear_form(alg, M, e.normalization);
        if (!check_form_properties(form).all_pass()) return false;
        if (e.degenerate_form_degrees.count(mu)) {
            if (!form.is_zero()) return false;
            continue;
        }
        auto git = e.golden_eta.find(mu);
        if (git != e.golden_eta.end()) {
            Mat expect(12, alg.dim(), alg.dim());
            for (const auto& gp : git->second) {
                int a = alg.find(gp.a), b = alg.find(gp.b);
                if (a < 0 || b < 0 || form.eta.at(a, b) != gp.value) return false;
                expect.at(a, b) = gp.value;
            }
            if (e.golden_complete.count(mu) && !(expect == form.eta)) return false;
        }
        auto inv = invert_form(form);
        if (!inv.ok) return false;
        auto iit = e.golden_eta_inv.find(mu);
        if (iit != e.golden_eta_inv.end())
            for (const auto& gp : iit->second) {
                int a = alg.find(gp.a), b = alg.find(gp.b);
                if (a < 0 || b < 0 || inv.inverse.at(a, b) != gp.value) return false;
            }
        if (!check_form_properties(form, &inv.inverse).all_pass()) return false;
        QuadElement cas = build_casimir(alg, inv.inverse);
        if (!verify_centrality(alg, cas).all_pass()) return false;
        auto kit = e.golden_casimir.find(mu);
        if (kit != e.golden_casimir.end() && !(normal_order(alg, kit->second) == cas))
            return false;
    }
    return true;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) return "<missing " + path + ">";
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

bool criterion1() {
    return factor_laws(build_qn(1).algebra.ctx()) &&
           factor_laws(build_z32_sl2().algebra.ctx());
}

bool criterion2() {
    auto q = build_qn(1);
    const auto& ctx = q.algebra.ctx();
    int d11 = ctx.code(ctx.parse_degree("11"));
    int theta = q.algebra.find("E^11[1,1]");
    if (theta < 0 ||
        color_trace(q.expected_commutants.at(d11) * q.algebra.basis(theta).matrix) !=
            Cyc(12, Rational(4)))
        return false;
    for (const auto& e : {build_qn(1), build_z32_sl2(), build_osp(1, 1)})
        for (size_t a = 0; a < e.algebra.dim(); ++a)
            for (size_t b = 0; b < e.algebra.dim(); ++b)
                if (!ctr_permutation_check(e.algebra.basis(a).matrix, e.algebra.basis(b).matrix))
                    return false;
    return true;
}

bool criterion3() {
    for (int n = 1; n <= 3; ++n) {
        auto e = build_qn(n);
        if (!entry_pipeline(e)) return false;
        const auto& ctx = e.algebra.ctx();
        int d11 = ctx.code(ctx.parse_degree("11"));
        // closed form of the nondegenerate form, entry by entry
        GradedForm form =
            bilinear_form(e.algebra, e.expected_commutants.at(d11), e.normalization);
        size_t nn = static_cast<size_t>(n);
        for (int alpha = 0; alpha < 4; ++alpha)
            for (size_t i = 0; i < nn; ++i)
                for (size_t j = 0; j < nn; ++j)
                    for (int beta = 0; beta < 4; ++beta)
                        for (size_t k = 0; k < nn; ++k)
                            for (size_t l = 0; l < nn; ++l) {
                                size_t a = static_cast<size_t>(alpha) * nn * nn + i * nn + j;
                                size_t b = static_cast<size_t>(beta) * nn * nn + k * nn + l;
                                Cyc want = (j == k && i == l && ctx.add_code(alpha, beta) == d11)
                                               ? ctx.omega(alpha, d11)
                                               : Cyc::zero(12);
                                if (form.eta.at(a, b) != want) return false;
                            }
    }
    auto q1 = build_qn(1);
    std::vector<GradedForm> keep;
    auto ext = extension_for(q1, keep);
    return ext.forms.size() == 1 && verify_loop_jacobi(ext, -2, 2).pass;
}

bool criterion4() {
    auto e = build_z32_sl2();
    if (!entry_pipeline(e)) return false;
    std::vector<GradedForm> keep;
    auto ext = extension_for(e, keep);
    return ext.forms.size() == 3 && verify_loop_jacobi(ext, -2, 2).pass;
}

bool criterion5() {
    const std::pair<int, int> sizes[] = {{1, 1}, {2, 1}, {3, 1}, {2, 2}};
    for (auto [m, n] : sizes) {
        auto e = build_osp(m, n);
        size_t want = static_cast<size_t>((m + 2 * n) * (m + 2 * n) - m + 2 * n);
        if (e.algebra.dim() != want) return false;
        for (size_t a = 0; a < e.algebra.dim(); ++a)
            if (!j_member(e.algebra.basis(a).matrix, *e.jform)) return false;
        if (!entry_pipeline(e)) return false;
        auto rs = extract_roots(e);
        if (!rs.errors.empty()) return false;
        const auto& ctx = e.algebra.ctx();
        int c11 = ctx.code(ctx.parse_degree("11"));
        size_t zero11 = 0;
        for (const auto& r : rs.zero_roots)
            if (r.degree == c11) ++zero11;
        if (zero11 != static_cast<size_t>(m / 2 + n) || rs.zero_roots.size() != zero11)
            return false;
    }
    return true;
}

bool criterion6() {
    for (const auto& e : {build_qn(2), build_z32_sl2(), build_osp(1, 1)}) {
        for (const auto& [md, M] : e.expected_commutants) {
            GradedForm form = bilinear_form(e.algebra, M, e.normalization);
            auto inv = invert_form(form);
            if (!inv.ok) continue;
            QuadElement cas = build_casimir(e.algebra, inv.inverse);
            auto rep = verify_centrality(e.algebra, cas);
            if (rep.checks.size() != 2 || !rep.all_pass()) return false;
        }
    }
    // a flipped sign must be rejected by both oracles independently
    auto e = build_qn(2);
    const auto& ctx = e.algebra.ctx();
    int d11 = ctx.code(ctx.parse_degree("11"));
    GradedForm form = bilinear_form(e.algebra, e.expected_commutants.at(d11), e.normalization);
    auto inv = invert_form(form);
    if (!inv.ok) return false;
    QuadElement bad = build_casimir(e.algebra, inv.inverse);
    bad.quadratic.begin()->second = -bad.quadratic.begin()->second;
    auto rep = verify_centrality(e.algebra, bad);
    return rep.checks.size() == 2 && !rep.checks[0].pass && !rep.checks[1].pass;
}

bool criterion7() {
    for (const auto& e : {build_qn(1), build_qn(2), build_z32_sl2(), build_osp(1, 1),
                          build_osp(2, 1)}) {
        for (const auto& [md, M] : e.expected_commutants) {
            GradedForm form = bilinear_form(e.algebra, M, e.normalization);
            if (!check_form_properties(form).all_pass()) return false;
            auto inv = invert_form(form);
            if (!inv.ok) continue;
            Mat id = Mat::identity(12, e.algebra.dim());
            if (!(inv.inverse * form.eta == id) || !(form.eta * inv.inverse == id))
                return false;
            if (!check_form_properties(form, &inv.inverse).all_pass()) return false;
        }
    }
    return true;
}

bool criterion8() {
    const std::pair<const char*, CatalogEntry (*)()> cases[] = {
        {"q1.txt", [] { return build_qn(1); }},
        {"q2.txt", [] { return build_qn(2); }},
        {"z32-sl2.txt", [] { return build_z32_sl2(); }},
        {"osp-1-1.txt", [] { return build_osp(1, 1); }},
        {"osp-2-1.txt", [] { return build_osp(2, 1); }},
    };
    for (const auto& [golden, make] : cases) {
        AlgebraBundle b = to_bundle(make());
        std::string rep = make_report(b);
        if (rep != make_report(b)) return false; // deterministic
        if (rep != slurp(std::string(REPO_ROOT) + "/tests/golden/" + golden)) return false;
        if (make_report(parse_bundle(bundle_text(b))) != rep) return false; // round trip
    }
    return true;
}

bool guarded(bool (*f)()) {
    try {
        return f();
    } catch (const std::exception& ex) {
        std::cout << "  exception: " << ex.what() << "\n";
        return false;
    }
}

} // namespace

int main() {
    verdict(1, "commutation-factor law suite", guarded(criterion1));
    verdict(2, "color trace laws", guarded(criterion2));
    verdict(3, "doubled matrix family pipeline", guarded(criterion3));
    verdict(4, "nine-generator family pipeline", guarded(criterion4));
    verdict(5, "orthosymplectic family pipeline", guarded(criterion5));
    verdict(6, "cross-oracle centrality", guarded(criterion6));
    verdict(7, "bilinear form law suite", guarded(criterion7));
    verdict(8, "deterministic reports", guarded(criterion8));
    return failures == 0 ? 0 : 1;
}
