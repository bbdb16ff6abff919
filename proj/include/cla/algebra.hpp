#pragma once

#include "cla/gmatrix.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cla {

struct BasisElement {
    std::string name;
    int degree; // degree code in the grading context
    GradedMatrix matrix;
};

/// Thrown when a bracket of two basis elements leaves the span of the basis
/// (or the basis itself is linearly dependent).
struct ClosureError : std::runtime_error {
    ClosureError(std::string what, std::string witness_)
        : std::runtime_error(std::move(what)), witness(std::move(witness_)) {}
    std::string witness;
};

/// Sparse row of structure constants: list of (basis index c, f_{a,b}^c).
using FRow = std::vector<std::pair<int, Cyc>>;

class ColorAlgebra {
public:
    /// Derives exact structure constants from the matrix realization.
    static ColorAlgebra from_representation(GradedSpace space, std::vector<BasisElement> basis);

    const GradingContext& ctx() const { return space_.ctx(); }
    const GradedSpace& space() const { return space_; }
    size_t dim() const { return basis_.size(); }
    const BasisElement& basis(size_t a) const { return basis_[a]; }
    const std::vector<BasisElement>& basis() const { return basis_; }
    int find(const std::string& name) const; // -1 if absent

    const FRow& f(size_t a, size_t b) const { return f_[a * basis_.size() + b]; }

    /// f_{a,b}^c = -omega(deg a, deg b) f_{b,a}^c over all pairs.
    ValidationReport check_antisymmetry() const;
    /// color Jacobi identity over all basis triples, via f.
    ValidationReport check_jacobi() const;

    /// Basis of the graded center, as coefficient vectors over the basis
    /// elements of each degree, keyed by degree code.
    std::map<int, std::vector<std::vector<Cyc>>> graded_center() const;

private:
    ColorAlgebra(GradedSpace space) : space_(std::move(space)) {}

    GradedSpace space_;
    std::vector<BasisElement> basis_;
    std::vector<FRow> f_;
};

/// Normal-ordered element of U(g) truncated at quadratic degree.
/// Quadratic keys always satisfy a <= b in basis order.
struct QuadElement {
    const ColorAlgebra* alg = nullptr;
    Cyc constant;
    std::map<int, Cyc> linear;
    std::map<std::pair<int, int>, Cyc> quadratic;

    bool is_zero() const { return constant.is_zero() && linear.empty() && quadratic.empty(); }
    bool operator==(const QuadElement& o) const {
        return constant == o.constant && linear == o.linear && quadratic == o.quadratic;
    }
};

struct RawQuadTerm {
    int a, b; // X_a X_b, any order
    Cyc coeff;
};

/// Rewrites arbitrary quadratic monomials into normal order:
/// X_b X_a (b > a) -> omega(deg b, deg a) X_a X_b + [[X_b, X_a]], and
/// X_a X_a with omega(deg a, deg a) = -1 -> (1/2)[[X_a, X_a]].
QuadElement normal_order(const ColorAlgebra& alg, const std::vector<RawQuadTerm>& quads,
                         const std::vector<std::pair<int, Cyc>>& linears = {},
                         const Cyc& constant = Cyc());

/// [[X_a, q]] in U(g) via the color Leibniz rule, normal-ordered.
QuadElement bracket_generator_quadratic(const ColorAlgebra& alg, int a, const QuadElement& q);

/// Image of q under the defining representation.
GradedMatrix evaluate(const QuadElement& q);

std::string quad_str(const QuadElement& q);

} // namespace cla
