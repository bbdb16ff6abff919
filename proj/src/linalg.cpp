#include "cla/linalg.hpp"

#include <stdexcept>

namespace cla {

Mat Mat::identity(unsigned conductor, size_t n) {
    Mat m(conductor, n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = Cyc::one(conductor);
    return m;
}

bool Mat::is_zero() const {
    for (const auto& x : a_)
        if (!x.is_zero()) return false;
    return true;
}

Mat Mat::operator+(const Mat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch");
    Mat out = *this;
    for (size_t k = 0; k < a_.size(); ++k) out.a_[k] += o.a_[k];
    return out;
}

Mat Mat::operator-(const Mat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch");
    Mat out = *this;
    for (size_t k = 0; k < a_.size(); ++k) out.a_[k] -= o.a_[k];
    return out;
}

Mat Mat::operator*(const Mat& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix shape mismatch");
    Mat out(n_, rows_, o.cols_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t k = 0; k < cols_; ++k) {
            const Cyc& x = at(i, k);
            if (x.is_zero()) continue;
            for (size_t j = 0; j < o.cols_; ++j) {
                const Cyc& y = o.at(k, j);
                if (!y.is_zero()) out.at(i, j) += x * y;
            }
        }
    return out;
}

Mat Mat::scaled(const Cyc& s) const {
    Mat out = *this;
    for (auto& x : out.a_) x *= s;
    return out;
}

Mat Mat::transposed() const {
    Mat out(n_, cols_, rows_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
    return out;
}

Cyc Mat::trace() const {
    Cyc t = Cyc::zero(n_);
    size_t n = rows_ < cols_ ? rows_ : cols_;
    for (size_t i = 0; i < n; ++i) t += at(i, i);
    return t;
}

RowReduction::RowReduction(const Mat& a, bool track_ops)
    : n_(a.conductor()), rows_(a.rows()), cols_(a.cols()), rref_(a),
      ops_(track_ops ? Mat::identity(a.conductor(), a.rows()) : Mat()) {
    bool have_ops = track_ops;
    size_t row = 0;
    for (size_t col = 0; col < cols_ && row < rows_; ++col) {
        size_t piv = row;
        while (piv < rows_ && rref_.at(piv, col).is_zero()) ++piv;
        if (piv == rows_) continue;
        if (piv != row) {
            for (size_t j = 0; j < cols_; ++j) std::swap(rref_.at(row, j), rref_.at(piv, j));
            if (have_ops)
                for (size_t j = 0; j < rows_; ++j) std::swap(ops_.at(row, j), ops_.at(piv, j));
        }
        Cyc inv = rref_.at(row, col).inverse();
        for (size_t j = 0; j < cols_; ++j) rref_.at(row, j) *= inv;
        if (have_ops)
            for (size_t j = 0; j < rows_; ++j) ops_.at(row, j) *= inv;
        for (size_t r = 0; r < rows_; ++r) {
            if (r == row) continue;
            Cyc f = rref_.at(r, col);
            if (f.is_zero()) continue;
            for (size_t j = 0; j < cols_; ++j) rref_.at(r, j) -= f * rref_.at(row, j);
            if (have_ops)
                for (size_t j = 0; j < rows_; ++j) ops_.at(r, j) -= f * ops_.at(row, j);
        }
        pivot_cols_.push_back(col);
        ++row;
    }
}

std::optional<std::vector<Cyc>> RowReduction::solve(const std::vector<Cyc>& b) const {
    if (b.size() != rows_) throw std::invalid_argument("rhs length mismatch");
    if (ops_.rows() != rows_) throw std::logic_error("solve() needs a reduction built with track_ops");
    // c = ops_ * b is the rhs in reduced coordinates.
    std::vector<Cyc> c(rows_, Cyc::zero(n_));
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < rows_; ++j)
            if (!ops_.at(i, j).is_zero() && !b[j].is_zero()) c[i] += ops_.at(i, j) * b[j];
    for (size_t i = pivot_cols_.size(); i < rows_; ++i)
        if (!c[i].is_zero()) return std::nullopt;
    std::vector<Cyc> x(cols_, Cyc::zero(n_));
    for (size_t i = 0; i < pivot_cols_.size(); ++i) x[pivot_cols_[i]] = c[i];
    return x;
}

std::vector<std::vector<Cyc>> RowReduction::kernel() const {
    std::vector<bool> is_pivot(cols_, false);
    for (size_t c : pivot_cols_) is_pivot[c] = true;
    std::vector<std::vector<Cyc>> out;
    for (size_t free = 0; free < cols_; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Cyc> v(cols_, Cyc::zero(n_));
        v[free] = Cyc::one(n_);
        for (size_t i = 0; i < pivot_cols_.size(); ++i) v[pivot_cols_[i]] = -rref_.at(i, free);
        out.push_back(std::move(v));
    }
    return out;
}

std::optional<Mat> invert(const Mat& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("inverse of non-square matrix");
    RowReduction rr(a);
    if (rr.rank() != a.rows()) return std::nullopt;
    Mat inv(a.conductor(), a.rows(), a.cols());
    std::vector<Cyc> e(a.rows(), Cyc::zero(a.conductor()));
    for (size_t j = 0; j < a.cols(); ++j) {
        e[j] = Cyc::one(a.conductor());
        auto x = rr.solve(e);
        for (size_t i = 0; i < a.rows(); ++i) inv.at(i, j) = (*x)[i];
        e[j] = Cyc::zero(a.conductor());
    }
    return inv;
}

} // namespace cla
