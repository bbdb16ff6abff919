#include "cla/casimir.hpp"

namespace cla {

Commutant solve_commutants(const ColorAlgebra& alg, int mu) {
    const auto& sp = alg.space();
    const auto& ctx = sp.ctx();
    unsigned n = ctx.conductor();
    size_t total = sp.total_dim();

    // Unknowns: entries of the blocks (beta+mu, beta), beta in total order.
    struct Slot {
        size_t row, col;
    };
    std::vector<Slot> slots;
    for (size_t k = 0; k < ctx.group_size(); ++k) {
        int beta = static_cast<int>(k);
        int target = ctx.add_code(mu, beta);
        for (size_t i = 0; i < sp.dim(target); ++i)
            for (size_t j = 0; j < sp.dim(beta); ++j)
                slots.push_back({sp.offset(target) + i, sp.offset(beta) + j});
    }
    Commutant out{mu, {}};
    if (slots.empty()) return out;

    // Equations: M rho(X_a) - omega(mu, deg a) rho(X_a) M = 0, entrywise.
    // Column u (the unknown at slot (x,y)) contributes rho(y,q) to equation
    // (a; x,q) and -omega * rho(p,x) to equation (a; p,y).
    Mat sys(n, alg.dim() * total * total, slots.size());
    for (size_t a = 0; a < alg.dim(); ++a) {
        Mat rho = alg.basis(a).matrix.dense();
        Cyc w = ctx.omega(mu, alg.basis(a).degree);
        size_t base = a * total * total;
        for (size_t u = 0; u < slots.size(); ++u) {
            size_t x = slots[u].row, y = slots[u].col;
            for (size_t q = 0; q < total; ++q)
                if (!rho.at(y, q).is_zero()) sys.at(base + x * total + q, u) += rho.at(y, q);
            for (size_t p = 0; p < total; ++p)
                if (!rho.at(p, x).is_zero()) sys.at(base + p * total + y, u) -= w * rho.at(p, x);
        }
    }
    // Drop all-zero equations before reducing.
    std::vector<size_t> live;
    for (size_t r = 0; r < sys.rows(); ++r)
        for (size_t u = 0; u < slots.size(); ++u)
            if (!sys.at(r, u).is_zero()) {
                live.push_back(r);
                break;
            }
    Mat compact(n, live.empty() ? 1 : live.size(), slots.size());
    for (size_t r = 0; r < live.size(); ++r)
        for (size_t u = 0; u < slots.size(); ++u) compact.at(r, u) = sys.at(live[r], u);

    RowReduction rr(compact, false);
    for (auto& vec : rr.kernel()) {
        size_t first = 0;
        while (first < vec.size() && vec[first].is_zero()) ++first;
        if (first == vec.size()) continue;
        Cyc inv = vec[first].inverse();
        Mat m(n, total, total);
        for (size_t u = 0; u < slots.size(); ++u)
            if (!vec[u].is_zero()) m.at(slots[u].row, slots[u].col) = inv * vec[u];
        GradedMatrix gm(sp);
        gm.add_part(mu, m);
        out.basis.push_back(std::move(gm));
    }
    return out;
}

GradedForm bilinear_form(const ColorAlgebra& alg, const GradedMatrix& commutant,
                         const Cyc& normalization) {
    const auto& ctx = alg.ctx();
    unsigned n = ctx.conductor();
    for (size_t a = 0; a < alg.dim(); ++a)
        if (!color_bracket(commutant, alg.basis(a).matrix).is_zero())
            throw std::invalid_argument("matrix does not graded-commute with generator " +
                                        alg.basis(a).name);
    int mu = commutant.is_zero() ? ctx.zero_code() : ctx.neg_code(commutant.degree());
    GradedForm form{&alg, mu, Mat(n, alg.dim(), alg.dim()), normalization};
    for (size_t a = 0; a < alg.dim(); ++a) {
        GradedMatrix left = alg.basis(a).matrix * commutant;
        for (size_t b = 0; b < alg.dim(); ++b)
            form.eta.at(a, b) = normalization * color_trace(left * alg.basis(b).matrix);
    }
    return form;
}

ValidationReport check_form_properties(const GradedForm& form, const Mat* inverse) {
    const ColorAlgebra& alg = *form.alg;
    const auto& ctx = alg.ctx();
    unsigned n = ctx.conductor();
    size_t dim = alg.dim();
    int mu = form.degree;

    LawCheck support{"eta(a,b) = 0 unless deg a + deg b = mu"};
    LawCheck symmetry{"eta(b,a) = omega(mu,mu) omega(deg a, deg b) eta(a,b)"};
    LawCheck invariance{"eta([[a,b]],c) = omega(mu, deg b) eta(a,[[b,c]])"};

    Cyc wmm = ctx.omega(mu, mu);
    for (size_t a = 0; a < dim; ++a)
        for (size_t b = 0; b < dim; ++b) {
            int da = alg.basis(a).degree, db = alg.basis(b).degree;
            if (support.pass && ctx.add_code(da, db) != mu && !form.eta.at(a, b).is_zero()) {
                support.pass = false;
                support.witness = "(" + alg.basis(a).name + ", " + alg.basis(b).name + ")";
            }
            if (symmetry.pass &&
                form.eta.at(b, a) != wmm * ctx.omega(da, db) * form.eta.at(a, b)) {
                symmetry.pass = false;
                symmetry.witness = "(" + alg.basis(a).name + ", " + alg.basis(b).name + ")";
            }
        }
    for (size_t a = 0; a < dim && invariance.pass; ++a)
        for (size_t b = 0; b < dim && invariance.pass; ++b) {
            Cyc w = ctx.omega(mu, alg.basis(b).degree);
            for (size_t c = 0; c < dim; ++c) {
                Cyc lhs = Cyc::zero(n), rhs = Cyc::zero(n);
                for (const auto& [p, v] : alg.f(a, b)) lhs += v * form.eta.at(p, c);
                for (const auto& [p, v] : alg.f(b, c)) rhs += v * form.eta.at(a, p);
                if (lhs != w * rhs) {
                    invariance.pass = false;
                    invariance.witness = "(" + alg.basis(a).name + ", " + alg.basis(b).name +
                                         ", " + alg.basis(c).name + ")";
                    break;
                }
            }
        }
    ValidationReport rep;
    rep.checks = {support, symmetry, invariance};

    if (inverse) {
        LawCheck dual{"sum eta_inv(a,p) f(p,b;c) = omega(mu, deg b) sum eta_inv(p,c) f(b,p;a)"};
        for (size_t a = 0; a < dim && dual.pass; ++a)
            for (size_t b = 0; b < dim && dual.pass; ++b) {
                Cyc w = ctx.omega(mu, alg.basis(b).degree);
                for (size_t c = 0; c < dim; ++c) {
                    Cyc lhs = Cyc::zero(n), rhs = Cyc::zero(n);
                    for (size_t p = 0; p < dim; ++p) {
                        if (!inverse->at(a, p).is_zero())
                            for (const auto& [q, v] : alg.f(p, b))
                                if (q == static_cast<int>(c)) lhs += inverse->at(a, p) * v;
                        if (!inverse->at(p, c).is_zero())
                            for (const auto& [q, v] : alg.f(b, p))
                                if (q == static_cast<int>(a)) rhs += inverse->at(p, c) * v;
                    }
                    if (lhs != w * rhs) {
                        dual.pass = false;
                        dual.witness = "(" + alg.basis(a).name + ", " + alg.basis(b).name + ", " +
                                       alg.basis(c).name + ")";
                        break;
                    }
                }
            }
        rep.checks.push_back(dual);
    }
    return rep;
}

InversionOutcome invert_form(const GradedForm& form) {
    InversionOutcome out;
    RowReduction rr(form.eta);
    out.rank = rr.rank();
    if (rr.rank() == form.eta.rows()) {
        out.ok = true;
        out.inverse = *invert(form.eta);
        return out;
    }
    auto ker = rr.kernel();
    if (!ker.empty()) out.null_witness = ker.front();
    return out;
}

QuadElement build_casimir(const ColorAlgebra& alg, const Mat& inverse) {
    std::vector<RawQuadTerm> quads;
    for (size_t a = 0; a < alg.dim(); ++a)
        for (size_t b = 0; b < alg.dim(); ++b)
            if (!inverse.at(a, b).is_zero())
                quads.push_back({static_cast<int>(a), static_cast<int>(b), inverse.at(a, b)});
    return normal_order(alg, quads);
}

ValidationReport verify_centrality(const ColorAlgebra& alg, const QuadElement& c) {
    LawCheck symbolic{"[[X_a, C]] = 0 in U(g) for every generator"};
    LawCheck matrix{"[[rho(X_a), rho(C)]] = 0 for every generator"};
    for (size_t a = 0; a < alg.dim(); ++a) {
        if (!bracket_generator_quadratic(alg, static_cast<int>(a), c).is_zero()) {
            symbolic.pass = false;
            symbolic.witness = alg.basis(a).name;
            break;
        }
    }
    GradedMatrix rc = evaluate(c);
    for (size_t a = 0; a < alg.dim(); ++a) {
        if (!color_bracket(alg.basis(a).matrix, rc).is_zero()) {
            matrix.pass = false;
            matrix.witness = alg.basis(a).name;
            break;
        }
    }
    ValidationReport rep;
    rep.checks = {symbolic, matrix};
    return rep;
}

} // namespace cla
