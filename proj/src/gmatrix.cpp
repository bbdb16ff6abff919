#include "cla/gmatrix.hpp"

#include <stdexcept>

namespace cla {

GradedSpace::GradedSpace(std::shared_ptr<const GradingContext> ctx, std::vector<size_t> dims)
    : ctx_(std::move(ctx)), dims_(std::move(dims)) {
    if (dims_.size() != ctx_->group_size())
        throw std::invalid_argument("dimension list must cover every degree");
    offsets_.resize(dims_.size());
    total_ = 0;
    for (size_t k = 0; k < dims_.size(); ++k) {
        offsets_[k] = total_;
        total_ += dims_[k];
    }
}

int GradedSpace::degree_of_index(size_t i) const {
    for (size_t k = 0; k < dims_.size(); ++k)
        if (i < offsets_[k] + dims_[k] && i >= offsets_[k]) return static_cast<int>(k);
    throw std::out_of_range("index outside space");
}

GradedMatrix GradedMatrix::from_dense(const GradedSpace& space, const Mat& m) {
    if (m.rows() != space.total_dim() || m.cols() != space.total_dim())
        throw std::invalid_argument("dense matrix size mismatch");
    const auto& ctx = space.ctx();
    GradedMatrix out(space);
    size_t g = ctx.group_size();
    for (size_t rb = 0; rb < g; ++rb)
        for (size_t cb = 0; cb < g; ++cb) {
            int delta = ctx.add_code(static_cast<int>(rb), ctx.neg_code(static_cast<int>(cb)));
            bool any = false;
            for (size_t i = 0; i < space.dim(static_cast<int>(rb)) && !any; ++i)
                for (size_t j = 0; j < space.dim(static_cast<int>(cb)); ++j)
                    if (!m.at(space.offset(static_cast<int>(rb)) + i, space.offset(static_cast<int>(cb)) + j).is_zero()) {
                        any = true;
                        break;
                    }
            if (!any) continue;
            Mat p(m.conductor(), m.rows(), m.cols());
            for (size_t i = 0; i < space.dim(static_cast<int>(rb)); ++i)
                for (size_t j = 0; j < space.dim(static_cast<int>(cb)); ++j) {
                    size_t r = space.offset(static_cast<int>(rb)) + i;
                    size_t c = space.offset(static_cast<int>(cb)) + j;
                    p.at(r, c) = m.at(r, c);
                }
            out.add_part(delta, p);
        }
    return out;
}

GradedMatrix GradedMatrix::unit(const GradedSpace& space, int alpha_code, int beta_code,
                                size_t i, size_t j) {
    if (space.dim(alpha_code) == 0 || space.dim(beta_code) == 0)
        throw std::invalid_argument("matrix unit into an empty graded subspace");
    if (i < 1 || i > space.dim(alpha_code) || j < 1 || j > space.dim(beta_code))
        throw std::out_of_range("matrix unit index out of range");
    unsigned n = space.ctx().conductor();
    Mat p(n, space.total_dim(), space.total_dim());
    p.at(space.offset(alpha_code) + i - 1, space.offset(beta_code) + j - 1) = Cyc::one(n);
    GradedMatrix out(space);
    out.add_part(space.ctx().add_code(alpha_code, space.ctx().neg_code(beta_code)), p);
    return out;
}

GradedMatrix GradedMatrix::identity(const GradedSpace& space) {
    GradedMatrix out(space);
    out.add_part(space.ctx().zero_code(),
                 Mat::identity(space.ctx().conductor(), space.total_dim()));
    return out;
}

int GradedMatrix::degree() const {
    if (parts_.size() != 1) throw std::logic_error("degree of a non-homogeneous matrix");
    return parts_.begin()->first;
}

Mat GradedMatrix::part(int degree_code) const {
    auto it = parts_.find(degree_code);
    if (it != parts_.end()) return it->second;
    return Mat(space_.ctx().conductor(), space_.total_dim(), space_.total_dim());
}

Mat GradedMatrix::dense() const {
    Mat out(space_.ctx().conductor(), space_.total_dim(), space_.total_dim());
    for (const auto& [d, p] : parts_) out = out + p;
    return out;
}

void GradedMatrix::add_part(int degree_code, const Mat& m) {
    auto it = parts_.find(degree_code);
    if (it == parts_.end()) {
        if (!m.is_zero()) parts_.emplace(degree_code, m);
        return;
    }
    it->second = it->second + m;
    if (it->second.is_zero()) parts_.erase(it);
}

GradedMatrix GradedMatrix::operator+(const GradedMatrix& o) const {
    if (!(space_ == o.space_)) throw std::invalid_argument("graded space mismatch");
    GradedMatrix out = *this;
    for (const auto& [d, p] : o.parts_) out.add_part(d, p);
    return out;
}

GradedMatrix GradedMatrix::operator-(const GradedMatrix& o) const {
    return *this + o.scaled(-Cyc::one(space_.ctx().conductor()));
}

GradedMatrix GradedMatrix::operator*(const GradedMatrix& o) const {
    if (!(space_ == o.space_)) throw std::invalid_argument("graded space mismatch");
    GradedMatrix out(space_);
    for (const auto& [d, p] : parts_)
        for (const auto& [e, q] : o.parts_)
            out.add_part(space_.ctx().add_code(d, e), p * q);
    return out;
}

GradedMatrix GradedMatrix::scaled(const Cyc& s) const {
    GradedMatrix out(space_);
    if (s.is_zero()) return out;
    for (const auto& [d, p] : parts_) out.add_part(d, p.scaled(s));
    return out;
}

Cyc color_trace(const GradedMatrix& x) {
    const auto& sp = x.space();
    const auto& ctx = sp.ctx();
    Cyc t = Cyc::zero(ctx.conductor());
    auto it = x.parts().find(ctx.zero_code());
    if (it == x.parts().end()) return t;
    const Mat& p = it->second;
    for (size_t k = 0; k < ctx.group_size(); ++k) {
        int a = static_cast<int>(k);
        Cyc blocktr = Cyc::zero(ctx.conductor());
        for (size_t i = 0; i < sp.dim(a); ++i) blocktr += p.at(sp.offset(a) + i, sp.offset(a) + i);
        t += ctx.omega(a, a) * blocktr;
    }
    return t;
}

GradedMatrix color_bracket(const GradedMatrix& x, const GradedMatrix& y) {
    if (!(x.space() == y.space())) throw std::invalid_argument("graded space mismatch");
    const auto& ctx = x.space().ctx();
    GradedMatrix out(x.space());
    for (const auto& [d, p] : x.parts())
        for (const auto& [e, q] : y.parts()) {
            int de = ctx.add_code(d, e);
            out.add_part(de, p * q - (q * p).scaled(ctx.omega(d, e)));
        }
    return out;
}

bool ctr_permutation_check(const GradedMatrix& x, const GradedMatrix& y) {
    if (!x.homogeneous() || !y.homogeneous())
        throw std::invalid_argument("ctr permutation law needs homogeneous inputs");
    if (x.is_zero() || y.is_zero()) return true;
    const auto& ctx = x.space().ctx();
    return color_trace(x * y) == ctx.omega(x.degree(), y.degree()) * color_trace(y * x);
}

bool JForm::well_formed(std::string* why) const {
    const auto& ctx = space.ctx();
    for (size_t i = 0; i < space.total_dim(); ++i)
        for (size_t j = 0; j < space.total_dim(); ++j) {
            if (matrix.at(i, j).is_zero()) continue;
            int a = space.degree_of_index(i), b = space.degree_of_index(j);
            if (ctx.add_code(a, b) != ctx.zero_code()) {
                if (why) *why = "nonzero entry outside degree-zero block support";
                return false;
            }
        }
    RowReduction rr(matrix);
    if (rr.rank() != space.total_dim()) {
        if (why) *why = "form matrix is degenerate";
        return false;
    }
    return true;
}

std::map<int, bool> j_membership(const GradedMatrix& x, const JForm& j) {
    std::string why;
    if (!j.well_formed(&why)) throw std::invalid_argument("bad J form: " + why);
    const auto& sp = x.space();
    const auto& ctx = sp.ctx();
    std::map<int, bool> verdict;
    for (const auto& [gamma, p] : x.parts()) {
        // J(Xu,v) + phi J(u,Xv) = 0 for basis u,v reads
        // (X^T J)_{uv} + phi(gamma, deg u) (J X)_{uv} = 0 entrywise.
        Mat lhs = p.transposed() * j.matrix;
        Mat rhs = j.matrix * p;
        bool ok = true;
        for (size_t u = 0; u < sp.total_dim() && ok; ++u) {
            Cyc phi = j.twists.empty()
                          ? ctx.omega(gamma, sp.degree_of_index(u))
                          : j.twists.at(gamma);
            for (size_t v = 0; v < sp.total_dim(); ++v)
                if (!(lhs.at(u, v) + phi * rhs.at(u, v)).is_zero()) {
                    ok = false;
                    break;
                }
        }
        verdict[gamma] = ok;
    }
    return verdict;
}

bool j_member(const GradedMatrix& x, const JForm& j) {
    for (const auto& [d, ok] : j_membership(x, j))
        if (!ok) return false;
    return true;
}

} // namespace cla
