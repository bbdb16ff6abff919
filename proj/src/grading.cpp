#include "cla/grading.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace cla {

std::string degree_str(const GroupElement& g) {
    bool single_digit = std::all_of(g.begin(), g.end(), [](int c) { return c >= 0 && c <= 9; });
    std::string out;
    for (size_t j = 0; j < g.size(); ++j) {
        if (j && !single_digit) out += ",";
        out += std::to_string(g[j]);
    }
    return out;
}

std::vector<GroupElement> enumerate_group(const std::vector<int>& orders) {
    if (orders.empty()) throw std::invalid_argument("empty order list");
    for (int k : orders)
        if (k < 1) throw std::invalid_argument("group orders must be >= 1");
    std::vector<GroupElement> out;
    GroupElement cur(orders.size(), 0);
    while (true) {
        out.push_back(cur);
        int j = static_cast<int>(orders.size()) - 1;
        while (j >= 0) {
            if (++cur[j] < orders[j]) break;
            cur[j] = 0;
            --j;
        }
        if (j < 0) break;
    }
    return out;
}

GradingContext::GradingContext(std::vector<int> orders, Bicharacter omega,
                               std::optional<Bicharacter> sigma, unsigned conductor,
                               std::optional<std::vector<GroupElement>> element_order)
    : orders_(std::move(orders)), omega_(std::move(omega)), sigma_(std::move(sigma)), conductor_(conductor) {
    auto lex = enumerate_group(orders_);
    if (element_order) {
        elements_ = *element_order;
        if (elements_.size() != lex.size()) throw std::invalid_argument("element order must list every group element exactly once");
        auto sorted = elements_;
        std::sort(sorted.begin(), sorted.end());
        if (sorted != lex) throw std::invalid_argument("element order must list every group element exactly once");
    } else {
        elements_ = lex;
    }
    if (omega_.exponent_matrix.size() != orders_.size())
        throw std::invalid_argument("omega exponent matrix must be p x p");
    for (const auto& row : omega_.exponent_matrix)
        if (row.size() != orders_.size()) throw std::invalid_argument("omega exponent matrix must be p x p");
    if (omega_.root_order == 0 || conductor_ % omega_.root_order != 0)
        throw std::invalid_argument("omega root order must divide the conductor");
    if (sigma_ && (sigma_->root_order == 0 || conductor_ % sigma_->root_order != 0))
        throw std::invalid_argument("sigma root order must divide the conductor");

    size_t g = elements_.size();
    std::map<GroupElement, int> index;
    for (size_t c = 0; c < g; ++c) index[elements_[c]] = static_cast<int>(c);
    zero_code_ = index.at(GroupElement(orders_.size(), 0));

    sum_table_.assign(g, std::vector<int>(g));
    neg_table_.assign(g, 0);
    omega_table_.assign(g, std::vector<Cyc>(g));
    if (sigma_) sigma_table_.assign(g, std::vector<Cyc>(g));
    for (size_t a = 0; a < g; ++a) {
        neg_table_[a] = index.at(neg(elements_[a]));
        for (size_t b = 0; b < g; ++b) {
            sum_table_[a][b] = index.at(add(elements_[a], elements_[b]));
            omega_table_[a][b] = eval_bicharacter(omega_, elements_[a], elements_[b]);
            if (sigma_) sigma_table_[a][b] = eval_bicharacter(*sigma_, elements_[a], elements_[b]);
        }
    }
}

int GradingContext::code(const GroupElement& g) const {
    for (size_t c = 0; c < elements_.size(); ++c)
        if (elements_[c] == g) return static_cast<int>(c);
    throw std::invalid_argument("degree " + degree_str(g) + " not in group");
}

GroupElement GradingContext::add(const GroupElement& a, const GroupElement& b) const {
    GroupElement out(orders_.size());
    for (size_t j = 0; j < orders_.size(); ++j) out[j] = (a[j] + b[j]) % orders_[j];
    return out;
}

GroupElement GradingContext::neg(const GroupElement& a) const {
    GroupElement out(orders_.size());
    for (size_t j = 0; j < orders_.size(); ++j) out[j] = (orders_[j] - a[j]) % orders_[j];
    return out;
}

Cyc GradingContext::eval_bicharacter(const Bicharacter& f, const GroupElement& a, const GroupElement& b) const {
    long e = 0;
    for (size_t r = 0; r < a.size(); ++r)
        for (size_t c = 0; c < b.size(); ++c) e += a[r] * f.exponent_matrix[r][c] * b[c];
    long m = static_cast<long>(f.root_order);
    long r = e % m;
    if (r < 0) r += m;
    return Cyc::root_of_unity(conductor_, static_cast<long>(conductor_ / f.root_order) * r);
}

Cyc GradingContext::omega(const GroupElement& a, const GroupElement& b) const {
    return omega_table_[code(a)][static_cast<size_t>(code(b))];
}

Cyc GradingContext::sigma(const GroupElement& a, const GroupElement& b) const {
    return sigma(code(a), code(b));
}

Cyc GradingContext::sigma(int a, int b) const {
    if (!sigma_) throw std::logic_error("sigma factor absent");
    return sigma_table_[a][static_cast<size_t>(b)];
}

ValidationReport GradingContext::validate_factor() const {
    ValidationReport rep;
    size_t g = elements_.size();
    Cyc one = Cyc::one(conductor_);

    auto witness2 = [&](size_t a, size_t b) {
        return "(" + degree_str(elements_[a]) + "," + degree_str(elements_[b]) + ")";
    };

    LawCheck skew{"omega(a,b)*omega(b,a) = 1"};
    LawCheck biadd_right{"omega(a,b+c) = omega(a,b)*omega(a,c)"};
    LawCheck biadd_left{"omega(a+b,c) = omega(a,c)*omega(b,c)"};
    LawCheck diag{"omega(a,a) in {+1,-1}"};
    LawCheck ident{"omega(0,a) = omega(a,0) = 1"};
    LawCheck negneg{"omega(-a,-b) = omega(a,b)"};
    LawCheck negswap{"omega(a,-b) = omega(-a,b) = omega(b,a)"};

    for (size_t a = 0; a < g; ++a) {
        if (ident.pass && (omega(static_cast<int>(a), zero_code_) != one || omega(zero_code_, static_cast<int>(a)) != one)) {
            ident.pass = false;
            ident.witness = degree_str(elements_[a]);
        }
        Cyc d = omega(static_cast<int>(a), static_cast<int>(a));
        if (diag.pass && d != one && d != -one) {
            diag.pass = false;
            diag.witness = degree_str(elements_[a]) + " -> " + d.str();
        }
        for (size_t b = 0; b < g; ++b) {
            int ia = static_cast<int>(a), ib = static_cast<int>(b);
            if (skew.pass && omega(ia, ib) * omega(ib, ia) != one) {
                skew.pass = false;
                skew.witness = witness2(a, b);
            }
            if (negneg.pass && omega(neg_code(ia), neg_code(ib)) != omega(ia, ib)) {
                negneg.pass = false;
                negneg.witness = witness2(a, b);
            }
            if (negswap.pass && (omega(ia, neg_code(ib)) != omega(ib, ia) || omega(neg_code(ia), ib) != omega(ib, ia))) {
                negswap.pass = false;
                negswap.witness = witness2(a, b);
            }
            for (size_t c = 0; c < g; ++c) {
                int ic = static_cast<int>(c);
                if (biadd_right.pass && omega(ia, add_code(ib, ic)) != omega(ia, ib) * omega(ia, ic)) {
                    biadd_right.pass = false;
                    biadd_right.witness = witness2(a, b) + "+" + degree_str(elements_[c]);
                }
                if (biadd_left.pass && omega(add_code(ia, ib), ic) != omega(ia, ic) * omega(ib, ic)) {
                    biadd_left.pass = false;
                    biadd_left.witness = witness2(a, b) + "," + degree_str(elements_[c]);
                }
            }
        }
    }
    rep.checks = {skew, biadd_right, biadd_left, diag, ident, negneg, negswap};

    if (sigma_) {
        LawCheck factorize{"sigma(a,b)*sigma(b,a)^-1 = omega(a,b)"};
        LawCheck s_right{"sigma(a,b+c) = sigma(a,b)*sigma(a,c)"};
        LawCheck s_left{"sigma(a+b,c) = sigma(a,c)*sigma(b,c)"};
        for (size_t a = 0; a < g && (factorize.pass || s_right.pass || s_left.pass); ++a) {
            for (size_t b = 0; b < g; ++b) {
                int ia = static_cast<int>(a), ib = static_cast<int>(b);
                if (factorize.pass && sigma(ia, ib) * sigma(ib, ia).inverse() != omega(ia, ib)) {
                    factorize.pass = false;
                    factorize.witness = witness2(a, b);
                }
                for (size_t c = 0; c < g; ++c) {
                    int ic = static_cast<int>(c);
                    if (s_right.pass && sigma(ia, add_code(ib, ic)) != sigma(ia, ib) * sigma(ia, ic)) {
                        s_right.pass = false;
                        s_right.witness = witness2(a, b);
                    }
                    if (s_left.pass && sigma(add_code(ia, ib), ic) != sigma(ia, ic) * sigma(ib, ic)) {
                        s_left.pass = false;
                        s_left.witness = witness2(a, b);
                    }
                }
            }
        }
        rep.checks.push_back(factorize);
        rep.checks.push_back(s_right);
        rep.checks.push_back(s_left);
    }
    return rep;
}

GroupElement GradingContext::parse_degree(const std::string& text) const {
    GroupElement out;
    if (text.find(',') != std::string::npos) {
        size_t pos = 0;
        while (pos <= text.size()) {
            size_t comma = text.find(',', pos);
            std::string piece = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
            out.push_back(std::stoi(piece));
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
    } else {
        for (char ch : text) {
            if (ch < '0' || ch > '9') throw std::invalid_argument("bad degree '" + text + "'");
            out.push_back(ch - '0');
        }
    }
    if (out.size() != orders_.size()) throw std::invalid_argument("degree '" + text + "' has wrong component count");
    for (size_t j = 0; j < out.size(); ++j)
        if (out[j] < 0 || out[j] >= orders_[j]) throw std::invalid_argument("degree '" + text + "' out of range");
    return out;
}

} // namespace cla
