#pragma once

#include "cla/grading.hpp"
#include "cla/linalg.hpp"

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace cla {

/// Gamma-graded vector space: a dimension per degree, laid out as
/// consecutive blocks following the context's total order on Gamma.
class GradedSpace {
public:
    GradedSpace(std::shared_ptr<const GradingContext> ctx, std::vector<size_t> dims);

    const GradingContext& ctx() const { return *ctx_; }
    std::shared_ptr<const GradingContext> ctx_ptr() const { return ctx_; }

    size_t dim(int degree_code) const { return dims_[degree_code]; }
    size_t offset(int degree_code) const { return offsets_[degree_code]; }
    size_t total_dim() const { return total_; }
    /// Degree code of the block containing global index i.
    int degree_of_index(size_t i) const;

    bool operator==(const GradedSpace& o) const { return ctx_ == o.ctx_ && dims_ == o.dims_; }

private:
    std::shared_ptr<const GradingContext> ctx_;
    std::vector<size_t> dims_;
    std::vector<size_t> offsets_;
    size_t total_;
};

/// Element of gl(V,omega): sum of homogeneous parts, keyed by degree code.
/// Each part is a full-size matrix whose nonzero entries sit only in blocks
/// (row degree beta+delta, column degree beta); exact-zero parts are dropped.
class GradedMatrix {
public:
    explicit GradedMatrix(GradedSpace space) : space_(std::move(space)) {}

    /// Classifies a dense matrix into homogeneous parts.
    static GradedMatrix from_dense(const GradedSpace& space, const Mat& m);
    /// E(alpha,beta)_{ij}, 1-based block-local indices; degree alpha-beta.
    static GradedMatrix unit(const GradedSpace& space, int alpha_code, int beta_code,
                             size_t i, size_t j);
    static GradedMatrix identity(const GradedSpace& space);

    const GradedSpace& space() const { return space_; }
    const std::map<int, Mat>& parts() const { return parts_; }
    bool is_zero() const { return parts_.empty(); }
    bool homogeneous() const { return parts_.size() <= 1; }
    /// Degree code of the single part; requires homogeneous and nonzero.
    int degree() const;

    /// Part of the given degree as a full-size matrix (zero if absent).
    Mat part(int degree_code) const;
    Mat dense() const;

    void add_part(int degree_code, const Mat& m); // accumulates, drops zeros

    GradedMatrix operator+(const GradedMatrix& o) const;
    GradedMatrix operator-(const GradedMatrix& o) const;
    GradedMatrix operator*(const GradedMatrix& o) const;
    GradedMatrix scaled(const Cyc& s) const;

    bool operator==(const GradedMatrix& o) const { return parts_ == o.parts_; }
    bool operator!=(const GradedMatrix& o) const { return !(*this == o); }

private:
    GradedSpace space_;
    std::map<int, Mat> parts_;
};

/// ctr X = sum_alpha omega(alpha,alpha) tr X(alpha,alpha).
Cyc color_trace(const GradedMatrix& x);

/// [[X,Y]] extended bilinearly over homogeneous parts.
GradedMatrix color_bracket(const GradedMatrix& x, const GradedMatrix& y);

/// Checks ctr(XY) = omega(delta,epsilon) ctr(YX) for homogeneous X, Y.
bool ctr_permutation_check(const GradedMatrix& x, const GradedMatrix& y);

enum class FormSymmetry { symmetric, skew, none };

/// Degree-zero bilinear form J(u,v) = u^T J v defining a subalgebra of
/// gl(V,omega) via J(Xu,v) + phi * J(u,Xv) = 0. By default phi is
/// omega(deg X, deg u); a form may instead fix one scalar phi per degree
/// of X (needed when the defining conditions twist uniformly per degree).
struct JForm {
    GradedSpace space;
    Mat matrix;
    FormSymmetry symmetry = FormSymmetry::none;
    std::map<int, Cyc> twists; // degree code of X -> phi; empty = use omega

    /// degree-zero block support and nondegeneracy
    bool well_formed(std::string* why = nullptr) const;
};

/// Membership verdict per homogeneous part of X.
std::map<int, bool> j_membership(const GradedMatrix& x, const JForm& j);
bool j_member(const GradedMatrix& x, const JForm& j);

} // namespace cla
