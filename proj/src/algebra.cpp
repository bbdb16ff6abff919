#include "cla/algebra.hpp"

#include <sstream>

namespace cla {

namespace {

std::vector<Cyc> flatten(const GradedMatrix& m) {
    Mat d = m.dense();
    std::vector<Cyc> v;
    v.reserve(d.rows() * d.cols());
    for (size_t i = 0; i < d.rows(); ++i)
        for (size_t j = 0; j < d.cols(); ++j) v.push_back(d.at(i, j));
    return v;
}

} // namespace

ColorAlgebra ColorAlgebra::from_representation(GradedSpace space, std::vector<BasisElement> basis) {
    ColorAlgebra alg(space);
    unsigned n = space.ctx().conductor();
    size_t dim = basis.size();
    size_t flat = space.total_dim() * space.total_dim();

    for (const auto& b : basis) {
        if (!b.matrix.is_zero() && (!b.matrix.homogeneous() || b.matrix.degree() != b.degree))
            throw std::invalid_argument("basis element " + b.name +
                                        " is not homogeneous of its declared degree");
        if (b.matrix.is_zero())
            throw std::invalid_argument("basis element " + b.name + " is the zero matrix");
    }

    Mat cols(n, flat, dim);
    for (size_t a = 0; a < dim; ++a) {
        auto v = flatten(basis[a].matrix);
        for (size_t r = 0; r < flat; ++r) cols.at(r, a) = v[r];
    }
    RowReduction rr(cols);
    if (rr.rank() != dim)
        throw ClosureError("basis is linearly dependent", "rank " + std::to_string(rr.rank()) +
                                                              " < " + std::to_string(dim));

    alg.basis_ = std::move(basis);
    alg.f_.assign(dim * dim, {});
    for (size_t a = 0; a < dim; ++a)
        for (size_t b = 0; b < dim; ++b) {
            GradedMatrix br = color_bracket(alg.basis_[a].matrix, alg.basis_[b].matrix);
            if (br.is_zero()) continue;
            auto sol = rr.solve(flatten(br));
            if (!sol)
                throw ClosureError("bracket escapes the basis span",
                                   "pair (" + alg.basis_[a].name + ", " + alg.basis_[b].name + ")");
            FRow row;
            for (size_t c = 0; c < dim; ++c)
                if (!(*sol)[c].is_zero()) row.emplace_back(static_cast<int>(c), (*sol)[c]);
            alg.f_[a * dim + b] = std::move(row);
        }
    return alg;
}

int ColorAlgebra::find(const std::string& name) const {
    for (size_t a = 0; a < basis_.size(); ++a)
        if (basis_[a].name == name) return static_cast<int>(a);
    return -1;
}

ValidationReport ColorAlgebra::check_antisymmetry() const {
    const auto& ctx = space_.ctx();
    unsigned n = ctx.conductor();
    LawCheck law{"f(a,b) = -omega(deg a, deg b) f(b,a)"};
    size_t dim = basis_.size();
    for (size_t a = 0; a < dim && law.pass; ++a)
        for (size_t b = 0; b < dim && law.pass; ++b) {
            Cyc w = ctx.omega(basis_[a].degree, basis_[b].degree);
            std::vector<Cyc> diff(dim, Cyc::zero(n));
            for (const auto& [c, v] : f(a, b)) diff[c] += v;
            for (const auto& [c, v] : f(b, a)) diff[c] += w * v;
            for (size_t c = 0; c < dim; ++c)
                if (!diff[c].is_zero()) {
                    law.pass = false;
                    law.witness = "(" + basis_[a].name + ", " + basis_[b].name + ") -> " +
                                  basis_[c].name;
                    break;
                }
        }
    ValidationReport rep;
    rep.checks.push_back(law);
    return rep;
}

ValidationReport ColorAlgebra::check_jacobi() const {
    const auto& ctx = space_.ctx();
    unsigned n = ctx.conductor();
    LawCheck law{"[[a,[[b,c]]]] = [[[[a,b]],c]] + omega(deg a, deg b)[[b,[[a,c]]]]"};
    size_t dim = basis_.size();
    std::vector<Cyc> acc(dim, Cyc::zero(n));
    for (size_t a = 0; a < dim && law.pass; ++a)
        for (size_t b = 0; b < dim && law.pass; ++b) {
            Cyc w = ctx.omega(basis_[a].degree, basis_[b].degree);
            for (size_t c = 0; c < dim && law.pass; ++c) {
                for (auto& x : acc) x = Cyc::zero(n);
                for (const auto& [p, v] : f(b, c))
                    for (const auto& [q, u] : f(a, p)) acc[q] += v * u;
                for (const auto& [p, v] : f(a, b))
                    for (const auto& [q, u] : f(p, c)) acc[q] -= v * u;
                for (const auto& [p, v] : f(a, c))
                    for (const auto& [q, u] : f(b, p)) acc[q] -= w * (v * u);
                for (size_t d = 0; d < dim; ++d)
                    if (!acc[d].is_zero()) {
                        law.pass = false;
                        law.witness = "(" + basis_[a].name + ", " + basis_[b].name + ", " +
                                      basis_[c].name + ")";
                        break;
                    }
            }
        }
    ValidationReport rep;
    rep.checks.push_back(law);
    return rep;
}

std::map<int, std::vector<std::vector<Cyc>>> ColorAlgebra::graded_center() const {
    const auto& ctx = space_.ctx();
    unsigned n = ctx.conductor();
    size_t dim = basis_.size();
    std::map<int, std::vector<std::vector<Cyc>>> out;
    for (size_t d = 0; d < ctx.group_size(); ++d) {
        std::vector<int> members;
        for (size_t a = 0; a < dim; ++a)
            if (basis_[a].degree == static_cast<int>(d)) members.push_back(static_cast<int>(a));
        if (members.empty()) continue;
        // rows: [[X, X_b]] coefficient of X_c, for all b, c
        Mat sys(n, dim * dim, members.size());
        for (size_t k = 0; k < members.size(); ++k)
            for (size_t b = 0; b < dim; ++b)
                for (const auto& [c, v] : f(members[k], b)) sys.at(b * dim + c, k) = v;
        RowReduction rr(sys, false);
        auto ker = rr.kernel();
        if (ker.empty()) continue;
        std::vector<std::vector<Cyc>> vecs;
        for (auto& kv : ker) {
            std::vector<Cyc> full(dim, Cyc::zero(n));
            for (size_t k = 0; k < members.size(); ++k) full[members[k]] = kv[k];
            vecs.push_back(std::move(full));
        }
        out[static_cast<int>(d)] = std::move(vecs);
    }
    return out;
}

QuadElement normal_order(const ColorAlgebra& alg, const std::vector<RawQuadTerm>& quads,
                         const std::vector<std::pair<int, Cyc>>& linears, const Cyc& constant) {
    const auto& ctx = alg.ctx();
    unsigned n = ctx.conductor();
    QuadElement q;
    q.alg = &alg;
    q.constant = constant.conductor() == 0 ? Cyc::zero(n) : constant;
    Cyc one = Cyc::one(n);
    Cyc half(n, Rational(1, 2));

    auto add_linear = [&](int c, const Cyc& v) {
        auto [it, fresh] = q.linear.emplace(c, v);
        if (!fresh) it->second += v;
        if (it->second.is_zero()) q.linear.erase(it);
    };
    auto add_quad = [&](int a, int b, const Cyc& v) {
        auto [it, fresh] = q.quadratic.emplace(std::make_pair(a, b), v);
        if (!fresh) it->second += v;
        if (it->second.is_zero()) q.quadratic.erase(it);
    };

    for (const auto& [c, v] : linears) add_linear(c, v);
    for (const auto& t : quads) {
        if (t.coeff.is_zero()) continue;
        int da = alg.basis(t.a).degree, db = alg.basis(t.b).degree;
        if (t.a < t.b) {
            add_quad(t.a, t.b, t.coeff);
        } else if (t.a == t.b && ctx.omega(da, da) == one) {
            add_quad(t.a, t.b, t.coeff);
        } else if (t.a == t.b) {
            // omega(d,d) = -1: X^2 = (1/2)[[X,X]]
            for (const auto& [c, v] : alg.f(t.a, t.a)) add_linear(c, half * t.coeff * v);
        } else {
            Cyc w = ctx.omega(da, db);
            add_quad(t.b, t.a, w * t.coeff);
            for (const auto& [c, v] : alg.f(t.a, t.b)) add_linear(c, t.coeff * v);
        }
    }
    return q;
}

QuadElement bracket_generator_quadratic(const ColorAlgebra& alg, int a, const QuadElement& q) {
    const auto& ctx = alg.ctx();
    int da = alg.basis(a).degree;
    std::vector<RawQuadTerm> quads;
    std::vector<std::pair<int, Cyc>> lins;
    for (const auto& [b, v] : q.linear)
        for (const auto& [c, u] : alg.f(a, b)) lins.emplace_back(c, v * u);
    for (const auto& [bc, v] : q.quadratic) {
        auto [b, c] = bc;
        // [[X_a, X_b X_c]] = [[X_a,X_b]] X_c + omega(a,b) X_b [[X_a,X_c]]
        for (const auto& [d, u] : alg.f(a, b)) quads.push_back({d, c, v * u});
        Cyc w = ctx.omega(da, alg.basis(b).degree);
        for (const auto& [d, u] : alg.f(a, c)) quads.push_back({b, d, w * (v * u)});
    }
    return normal_order(alg, quads, lins);
}

GradedMatrix evaluate(const QuadElement& q) {
    const ColorAlgebra& alg = *q.alg;
    GradedMatrix out(alg.space());
    if (!q.constant.is_zero())
        out = out + GradedMatrix::identity(alg.space()).scaled(q.constant);
    for (const auto& [b, v] : q.linear) out = out + alg.basis(b).matrix.scaled(v);
    for (const auto& [bc, v] : q.quadratic)
        out = out + (alg.basis(bc.first).matrix * alg.basis(bc.second).matrix).scaled(v);
    return out;
}

std::string quad_str(const QuadElement& q) {
    std::ostringstream os;
    bool first = true;
    auto emit = [&](const std::string& coeff, const std::string& mono) {
        if (!first) os << " + ";
        first = false;
        if (coeff == "1" && !mono.empty())
            os << mono;
        else if (mono.empty())
            os << coeff;
        else
            os << "(" << coeff << ")*" << mono;
    };
    if (!q.constant.is_zero()) emit(q.constant.str(), "");
    for (const auto& [b, v] : q.linear) emit(v.str(), q.alg->basis(b).name);
    for (const auto& [bc, v] : q.quadratic)
        emit(v.str(), q.alg->basis(bc.first).name + " " + q.alg->basis(bc.second).name);
    if (first) os << "0";
    return os.str();
}

} // namespace cla
