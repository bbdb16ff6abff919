#include "cla/report.hpp"

#include "cla/loopext.hpp"

#include <sstream>

namespace cla {

namespace {

void emit_law_report(std::ostringstream& os, const std::string& label,
                     const ValidationReport& rep) {
    os << label << ": " << (rep.all_pass() ? "pass" : "FAIL") << " (" << rep.checks.size()
       << " checks)\n";
    for (const auto& c : rep.checks)
        if (!c.pass) os << "  FAIL " << c.law << " at " << c.witness << "\n";
}

void emit_matrix_entries(std::ostringstream& os, const Mat& m, const std::string& indent) {
    bool any = false;
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j)
            if (!m.at(i, j).is_zero()) {
                os << indent << "(" << i + 1 << "," << j + 1 << ") = " << m.at(i, j).str()
                   << "\n";
                any = true;
            }
    if (!any) os << indent << "(all zero)\n";
}

void emit_form_entries(std::ostringstream& os, const ColorAlgebra& alg, const Mat& m,
                       const std::string& indent) {
    bool any = false;
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j)
            if (!m.at(i, j).is_zero()) {
                os << indent << "(" << alg.basis(i).name << ", " << alg.basis(j).name
                   << ") = " << m.at(i, j).str() << "\n";
                any = true;
            }
    if (!any) os << indent << "(all zero)\n";
}

std::string root_str(const RootVector& rv, const std::vector<std::string>& coord_names) {
    std::ostringstream os;
    bool first = true;
    for (size_t k = 0; k < rv.coords.size(); ++k) {
        const Rational& c = rv.coords[k];
        if (c == 0) continue;
        std::string nm = k < coord_names.size() ? coord_names[k] : "x" + std::to_string(k + 1);
        Rational a = abs(c);
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (a != 1) os << a.get_str() << "*";
        os << nm;
    }
    if (first) os << "0";
    return os.str();
}

} // namespace

std::string make_report(const AlgebraBundle& b, long lo, long hi) {
    const ColorAlgebra& alg = b.algebra;
    const GradingContext& ctx = alg.ctx();
    const GradedSpace& sp = alg.space();
    int G = static_cast<int>(ctx.group_size());
    std::ostringstream os;

    os << "algebra: " << b.name << "\n";
    os << "grading: ";
    for (size_t k = 0; k < ctx.orders().size(); ++k)
        os << (k ? " x " : "") << "Z" << ctx.orders()[k];
    os << ", conductor " << ctx.conductor() << "\n";
    os << "degree order:";
    for (const auto& g : ctx.elements()) os << " " << degree_str(g);
    os << "\n";
    os << "space:";
    for (int d = 0; d < G; ++d)
        if (sp.dim(d) > 0) os << " " << degree_str(ctx.element(d)) << ":" << sp.dim(d);
    os << "\n";
    os << "basis (" << alg.dim() << "), also the normal-ordering order:\n";
    for (const auto& e : alg.basis())
        os << "  " << e.name << "  degree " << degree_str(ctx.element(e.degree)) << "\n";

    emit_law_report(os, "factor laws", ctx.validate_factor());
    emit_law_report(os, "antisymmetry", alg.check_antisymmetry());
    emit_law_report(os, "jacobi", alg.check_jacobi());

    if (b.jform) {
        std::string why;
        os << "defining form: " << (b.jform->well_formed(&why) ? "well formed" : "ILL-FORMED " + why)
           << "\n";
        size_t bad = 0;
        for (size_t a = 0; a < alg.dim(); ++a)
            if (!j_member(alg.basis(a).matrix, *b.jform)) {
                ++bad;
                os << "  FAIL membership: " << alg.basis(a).name << "\n";
            }
        if (bad == 0) os << "  membership: all " << alg.dim() << " generators pass\n";
    }

    auto center = alg.graded_center();
    os << "graded center:";
    if (center.empty())
        os << " trivial";
    else
        for (const auto& [d, vecs] : center)
            os << " " << degree_str(ctx.element(d)) << ":" << vecs.size();
    os << "\n";

    std::vector<Commutant> comms;
    os << "commutants:\n";
    for (int d = 0; d < G; ++d) {
        comms.push_back(solve_commutants(alg, d));
        os << "  degree " << degree_str(ctx.element(d)) << ": dimension "
           << comms.back().basis.size() << "\n";
    }

    ExtensionData ext{&alg, {}};
    for (int mu = 0; mu < G; ++mu) {
        int d = ctx.neg_code(mu);
        std::vector<std::pair<std::string, const GradedMatrix*>> sources;
        auto seed = b.form_seeds.find(d);
        if (seed != b.form_seeds.end() && !seed->second.is_zero())
            sources.emplace_back("reference commutant", &seed->second);
        else
            for (size_t k = 0; k < comms[d].basis.size(); ++k)
                sources.emplace_back("kernel vector " + std::to_string(k + 1),
                                     &comms[d].basis[k]);
        for (const auto& [label, M] : sources) {
            os << "form eta^" << degree_str(ctx.element(mu)) << " (normalization "
               << b.normalization.str() << ", from degree-" << degree_str(ctx.element(d)) << " "
               << label << "):\n";
            os << "  commutant entries:\n";
            emit_matrix_entries(os, M->dense(), "    ");
            GradedForm form = bilinear_form(alg, *M, b.normalization);
            if (form.is_zero()) {
                os << "  zero form: degenerate, no Casimir, no central term\n";
                continue;
            }
            os << "  entries:\n";
            emit_form_entries(os, alg, form.eta, "    ");
            auto inv = invert_form(form);
            emit_law_report(os, "  laws", check_form_properties(form, inv.ok ? &inv.inverse
                                                                             : nullptr));
            if (ext.forms.empty() || ext.forms.back().first != mu)
                ext.forms.emplace_back(mu, form.eta);
            if (!inv.ok) {
                os << "  inverse: degenerate (rank " << inv.rank << "), no Casimir\n";
                continue;
            }
            os << "  inverse entries:\n";
            emit_form_entries(os, alg, inv.inverse, "    ");
            QuadElement cas = build_casimir(alg, inv.inverse);
            os << "  C_" << degree_str(ctx.element(mu)) << " = " << quad_str(cas) << "\n";
            ValidationReport cent = verify_centrality(alg, cas);
            emit_law_report(os, "  centrality", cent);
        }
    }

    if (!b.cartan.empty()) {
        os << "roots (cartan:";
        for (const auto& nm : b.cartan) os << " " << nm;
        os << "):\n";
        RootSystem rs = extract_roots(alg, b.cartan);
        for (const auto& nm : rs.errors) os << "  not an ad-eigenvector: " << nm << "\n";
        os << "  zero roots (" << rs.zero_roots.size() << "):\n";
        for (const auto& r : rs.zero_roots)
            os << "    " << r.element << "  degree " << degree_str(ctx.element(r.degree)) << "\n";
        os << "  nonzero roots (" << rs.roots.size() << "):\n";
        for (const auto& r : rs.roots)
            os << "    " << r.element << "  degree " << degree_str(ctx.element(r.degree))
               << "  root " << root_str(r.root, b.root_coord_names) << "\n";
    }

    os << "loop extension: active central degrees";
    if (ext.forms.empty())
        os << " none";
    else
        for (const auto& [mu, eta] : ext.forms) os << " " << degree_str(ctx.element(mu));
    os << "\n";
    LoopJacobiReport lr = verify_loop_jacobi(ext, lo, hi);
    os << "  jacobi over modes [" << lo << ".." << hi << "]: "
       << (lr.pass ? "pass" : "FAIL at " + lr.witness) << " (" << lr.instances
       << " instances)\n";

    return os.str();
}

} // namespace cla
