#pragma once

#include "cla/algebra.hpp"

namespace cla {

/// Element of the centrally extended loop algebra: a finite sum of
/// X_a tensor lambda^m plus central charges c_mu.
struct LoopElement {
    std::map<std::pair<int, long>, Cyc> terms;   // (basis index, mode) -> coeff
    std::map<int, Cyc> central;                  // degree code -> coeff

    bool is_zero() const { return terms.empty() && central.empty(); }
    bool operator==(const LoopElement& o) const {
        return terms == o.terms && central == o.central;
    }
};

/// Central-term data: one invariant form per active central degree.
/// Degenerate-but-nonzero forms are admitted; identically zero forms
/// contribute nothing and are skipped.
struct ExtensionData {
    const ColorAlgebra* alg;
    std::vector<std::pair<int, Mat>> forms; // (mu, eta^mu over basis pairs)
};

/// [[X_a^(m), X_b^(n)]] = sum_c f_ab^c X_c^(m+n)
///                      + sum_mu m delta_{m+n,0} omega(deg a, mu) eta^mu_ab c_mu,
/// extended bilinearly; central charges bracket to zero.
LoopElement loop_bracket(const ExtensionData& ext, const LoopElement& x, const LoopElement& y);

LoopElement loop_term(const ColorAlgebra& alg, int a, long mode, const Cyc& coeff);

struct LoopJacobiReport {
    bool pass = true;
    std::string witness;
    size_t instances = 0;
};

/// Color Jacobi identity over all basis triples and all mode triples in
/// [lo, hi]^3, central contributions included.
LoopJacobiReport verify_loop_jacobi(const ExtensionData& ext, long lo, long hi);

} // namespace cla
