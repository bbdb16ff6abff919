#pragma once

#include "cla/algebra.hpp"

namespace cla {

/// Kernel of [[M, rho(X_a)]] = 0 over all generators, M homogeneous of the
/// given degree. Each basis element is normalized so that its first nonzero
/// entry, scanning blocks (beta+mu, beta) by column degree beta in the total
/// order and row-major inside a block, equals 1.
struct Commutant {
    int degree;
    std::vector<GradedMatrix> basis;
};

Commutant solve_commutants(const ColorAlgebra& alg, int mu);

/// eta^mu(X_a, X_b) = normalization * ctr(rho(X_a) M rho(X_b)),
/// where M is a commutant of degree -mu.
struct GradedForm {
    const ColorAlgebra* alg;
    int degree; // mu
    Mat eta;    // dim x dim over basis pairs
    Cyc normalization;

    bool is_zero() const { return eta.is_zero(); }
};

GradedForm bilinear_form(const ColorAlgebra& alg, const GradedMatrix& commutant,
                         const Cyc& normalization);

/// Support, omega-symmetry and invariance of the form; when an inverse is
/// supplied, the dual invariance identity is checked as well.
ValidationReport check_form_properties(const GradedForm& form, const Mat* inverse = nullptr);

struct InversionOutcome {
    bool ok = false;
    Mat inverse;        // two-sided exact inverse when ok
    size_t rank = 0;    // always set
    std::vector<Cyc> null_witness; // a nonzero kernel vector when degenerate
};

InversionOutcome invert_form(const GradedForm& form);

/// C_mu = sum eta_mu^{ab} X_a X_b, normal-ordered.
QuadElement build_casimir(const ColorAlgebra& alg, const Mat& inverse);

/// Two independent oracles: the symbolic bracket in U(g) and graded
/// commutation of rho(C) with every generator matrix.
ValidationReport verify_centrality(const ColorAlgebra& alg, const QuadElement& c);

} // namespace cla
