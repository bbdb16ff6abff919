#pragma once

#include "cla/cyclotomic.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace cla {

/// Dense matrix over Q(zeta_N). Every entry shares the matrix conductor.
class Mat {
public:
    Mat() : n_(0), rows_(0), cols_(0) {}
    Mat(unsigned conductor, size_t rows, size_t cols)
        : n_(conductor), rows_(rows), cols_(cols), a_(rows * cols, Cyc::zero(conductor)) {}

    static Mat identity(unsigned conductor, size_t n);

    unsigned conductor() const { return n_; }
    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    Cyc& at(size_t i, size_t j) { return a_[i * cols_ + j]; }
    const Cyc& at(size_t i, size_t j) const { return a_[i * cols_ + j]; }

    bool is_zero() const;
    bool operator==(const Mat& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }
    bool operator!=(const Mat& o) const { return !(*this == o); }

    Mat operator+(const Mat& o) const;
    Mat operator-(const Mat& o) const;
    Mat operator*(const Mat& o) const;
    Mat scaled(const Cyc& s) const;
    Mat transposed() const;

    Cyc trace() const;

private:
    unsigned n_;
    size_t rows_, cols_;
    std::vector<Cyc> a_;
};

/// Row-reduced view of a coefficient matrix A, reused across many
/// right-hand sides: solve A x = b, compute the kernel, rank.
class RowReduction {
public:
    /// track_ops keeps the row-operation matrix needed by solve(); kernel()
    /// and rank() work either way (skip it for tall kernel-only systems).
    explicit RowReduction(const Mat& a, bool track_ops = true);

    size_t rank() const { return pivot_cols_.size(); }

    /// Least structured solve: returns x with A x = b, or nullopt when
    /// inconsistent. Free variables are set to zero, so the result is
    /// deterministic; if the solution is unique this is it.
    std::optional<std::vector<Cyc>> solve(const std::vector<Cyc>& b) const;

    /// Canonical kernel basis from the reduced row echelon form: one vector
    /// per free column, with a 1 in that column.
    std::vector<std::vector<Cyc>> kernel() const;

private:
    unsigned n_;
    size_t rows_, cols_;
    Mat rref_;                     // reduced row echelon form of A
    Mat ops_;                      // row operations: ops_ * A = rref_
    std::vector<size_t> pivot_cols_;
};

/// Exact inverse of a square matrix; nullopt when singular.
std::optional<Mat> invert(const Mat& a);

} // namespace cla
