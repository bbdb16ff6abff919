#include "cla/loopext.hpp"

namespace cla {

LoopElement loop_term(const ColorAlgebra& alg, int a, long mode, const Cyc& coeff) {
    LoopElement x;
    if (!coeff.is_zero()) x.terms[{a, mode}] = coeff;
    return x;
}

namespace {

void add_term(LoopElement& x, int a, long mode, const Cyc& v) {
    if (v.is_zero()) return;
    auto [it, fresh] = x.terms.emplace(std::make_pair(a, mode), v);
    if (!fresh) it->second += v;
    if (it->second.is_zero()) x.terms.erase(it);
}

void add_central(LoopElement& x, int mu, const Cyc& v) {
    if (v.is_zero()) return;
    auto [it, fresh] = x.central.emplace(mu, v);
    if (!fresh) it->second += v;
    if (it->second.is_zero()) x.central.erase(it);
}

} // namespace

LoopElement loop_bracket(const ExtensionData& ext, const LoopElement& x, const LoopElement& y) {
    const ColorAlgebra& alg = *ext.alg;
    const auto& ctx = alg.ctx();
    unsigned n = ctx.conductor();
    LoopElement out;
    for (const auto& [am, u] : x.terms)
        for (const auto& [bn, v] : y.terms) {
            auto [a, m] = am;
            auto [b, nn] = bn;
            Cyc w = u * v;
            for (const auto& [c, fv] : alg.f(a, b)) add_term(out, c, m + nn, w * fv);
            if (m + nn == 0 && m != 0) {
                Cyc mm(n, Rational(m));
                for (const auto& [mu, eta] : ext.forms)
                    add_central(out, mu,
                                mm * ctx.omega(alg.basis(a).degree, mu) * eta.at(a, b) * w);
            }
        }
    return out;
}

LoopJacobiReport verify_loop_jacobi(const ExtensionData& ext, long lo, long hi) {
    const ColorAlgebra& alg = *ext.alg;
    const auto& ctx = alg.ctx();
    unsigned n = ctx.conductor();
    size_t dim = alg.dim();
    LoopJacobiReport rep;
    if (lo > hi) return rep;
    size_t window = static_cast<size_t>(hi - lo + 1);

    // For a fixed basis triple, the non-central coefficients of the Jacobi
    // residual are mode-independent (modes only shift the label m+n+l), and
    // the central coefficients are linear in the modes:
    //   [[a,[[b,c]]]]    -> m * K1_mu,
    //   [[[[a,b]],c]]    -> (m+n) * K2_mu,
    //   w(a,b)[[b,[[a,c]]]] -> n * w(a,b) * K3_mu,
    // all gated by delta_{m+n+l,0}. Each instance is then an exact check of
    // cheap linear combinations of the precomputed vectors.
    std::vector<Cyc> acc(dim, Cyc::zero(n));
    for (size_t a = 0; a < dim && rep.pass; ++a)
        for (size_t b = 0; b < dim && rep.pass; ++b) {
            Cyc wab = ctx.omega(alg.basis(a).degree, alg.basis(b).degree);
            for (size_t c = 0; c < dim && rep.pass; ++c) {
                for (auto& x : acc) x = Cyc::zero(n);
                for (const auto& [p, v] : alg.f(b, c))
                    for (const auto& [q, u] : alg.f(a, p)) acc[q] += v * u;
                for (const auto& [p, v] : alg.f(a, b))
                    for (const auto& [q, u] : alg.f(p, c)) acc[q] -= v * u;
                for (const auto& [p, v] : alg.f(a, c))
                    for (const auto& [q, u] : alg.f(b, p)) acc[q] -= wab * (v * u);
                bool plain_ok = true;
                for (size_t d = 0; d < dim; ++d)
                    if (!acc[d].is_zero()) {
                        plain_ok = false;
                        break;
                    }
                std::vector<Cyc> k1, k2, k3;
                for (const auto& [mu, eta] : ext.forms) {
                    Cyc v1 = Cyc::zero(n), v2 = Cyc::zero(n), v3 = Cyc::zero(n);
                    for (const auto& [p, v] : alg.f(b, c)) v1 += v * eta.at(a, p);
                    v1 *= ctx.omega(alg.basis(a).degree, mu);
                    for (const auto& [p, v] : alg.f(a, b))
                        v2 += v * ctx.omega(alg.basis(p).degree, mu) * eta.at(p, c);
                    for (const auto& [p, v] : alg.f(a, c)) v3 += v * eta.at(b, p);
                    v3 *= wab * ctx.omega(alg.basis(b).degree, mu);
                    k1.push_back(v1);
                    k2.push_back(v2);
                    k3.push_back(v3);
                }
                for (long m = lo; m <= hi && rep.pass; ++m)
                    for (long nn = lo; nn <= hi && rep.pass; ++nn)
                        for (long l = lo; l <= hi; ++l) {
                            ++rep.instances;
                            bool ok = plain_ok;
                            if (ok && m + nn + l == 0) {
                                Cyc cm(n, Rational(m)), cmn(n, Rational(m + nn)),
                                    cn(n, Rational(nn));
                                for (size_t s = 0; s < k1.size(); ++s)
                                    if (cm * k1[s] != cmn * k2[s] + cn * k3[s]) {
                                        ok = false;
                                        break;
                                    }
                            }
                            if (!ok) {
                                rep.pass = false;
                                rep.witness = "(" + alg.basis(a).name + "^(" + std::to_string(m) +
                                              "), " + alg.basis(b).name + "^(" +
                                              std::to_string(nn) + "), " + alg.basis(c).name +
                                              "^(" + std::to_string(l) + "))";
                                break;
                            }
                        }
            }
        }
    if (rep.pass) rep.instances = dim * dim * dim * window * window * window;
    return rep;
}

} // namespace cla
