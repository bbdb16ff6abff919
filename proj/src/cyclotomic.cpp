#include "cla/cyclotomic.hpp"

#include <cctype>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace cla {

namespace {

// Exact division of integer polynomials, used to build Phi_N from x^N - 1.
std::vector<long> poly_div_exact(std::vector<long> num, const std::vector<long>& den) {
    std::vector<long> quot(num.size() - den.size() + 1, 0);
    for (int d = static_cast<int>(num.size()) - 1; d >= static_cast<int>(den.size()) - 1; --d) {
        long lead = num[d];
        if (lead == 0) continue;
        int shift = d - static_cast<int>(den.size()) + 1;
        long q = lead / den.back();
        quot[shift] = q;
        for (size_t k = 0; k < den.size(); ++k) num[shift + k] -= q * den[k];
    }
    for (long c : num)
        if (c != 0) throw std::logic_error("cyclotomic division not exact");
    return quot;
}

std::vector<long> cyclotomic_poly(unsigned n, std::map<unsigned, std::vector<long>>& cache) {
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    std::vector<long> num(n + 1, 0);
    num[0] = -1;
    num[n] = 1;
    for (unsigned d = 1; d < n; ++d) {
        if (n % d == 0) {
            auto phi_d = cyclotomic_poly(d, cache);
            num = poly_div_exact(num, phi_d);
        }
    }
    cache[n] = num;
    return num;
}

unsigned euler_phi(unsigned n) {
    unsigned result = n;
    for (unsigned p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            result -= result / p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

void canon(Rational& q) { q.canonicalize(); }

} // namespace

CycField::CycField(unsigned n) : n_(n) {
    if (n == 0) throw std::invalid_argument("conductor must be positive");
    std::map<unsigned, std::vector<long>> cache;
    auto phi_int = cyclotomic_poly(n, cache);
    degree_ = static_cast<unsigned>(phi_int.size()) - 1;
    if (degree_ != euler_phi(n)) throw std::logic_error("cyclotomic degree mismatch");
    phi_.reserve(phi_int.size());
    for (long c : phi_int) phi_.emplace_back(c);

    // power_table_[k] = zeta^k reduced, for k < 2*degree_ (enough for products
    // of two residues). Build by repeated shift-and-reduce.
    power_table_.resize(std::max<unsigned>(2 * degree_, n + 1));
    std::vector<Rational> cur(degree_, Rational(0));
    cur[0] = 1;
    power_table_[0] = cur;
    for (size_t k = 1; k < power_table_.size(); ++k) {
        // multiply by x
        Rational top = cur[degree_ - 1];
        for (unsigned j = degree_ - 1; j > 0; --j) cur[j] = cur[j - 1];
        cur[0] = 0;
        if (top != 0) {
            for (unsigned j = 0; j < degree_; ++j) {
                cur[j] -= top * phi_[j];
                canon(cur[j]);
            }
        }
        power_table_[k] = cur;
    }
}

const std::vector<Rational>& CycField::power_residue(unsigned k) const {
    if (k < power_table_.size()) return power_table_[k];
    return power_table_[k % n_];
}

const CycField& CycField::get(unsigned conductor) {
    static std::mutex mu;
    static std::map<unsigned, CycField*> fields;
    std::lock_guard<std::mutex> lock(mu);
    auto it = fields.find(conductor);
    if (it == fields.end()) it = fields.emplace(conductor, new CycField(conductor)).first;
    return *it->second;
}

Cyc::Cyc(unsigned conductor) : n_(conductor), coeffs_(CycField::get(conductor).degree(), Rational(0)) {}

Cyc::Cyc(unsigned conductor, const Rational& rational) : Cyc(conductor) {
    coeffs_[0] = rational;
    canon(coeffs_[0]);
}

Cyc Cyc::root_of_unity(unsigned conductor, long k) {
    const CycField& f = CycField::get(conductor);
    long r = k % static_cast<long>(conductor);
    if (r < 0) r += conductor;
    Cyc out(conductor);
    out.coeffs_ = f.power_residue(static_cast<unsigned>(r));
    return out;
}

bool Cyc::is_zero() const {
    for (const auto& c : coeffs_)
        if (c != 0) return false;
    return true;
}

bool Cyc::is_rational() const {
    for (size_t j = 1; j < coeffs_.size(); ++j)
        if (coeffs_[j] != 0) return false;
    return true;
}

Cyc Cyc::operator-() const {
    Cyc out = *this;
    for (auto& c : out.coeffs_) c = -c;
    return out;
}

Cyc& Cyc::operator+=(const Cyc& o) {
    if (n_ != o.n_) throw std::invalid_argument("conductor mismatch");
    for (size_t j = 0; j < coeffs_.size(); ++j) {
        coeffs_[j] += o.coeffs_[j];
        canon(coeffs_[j]);
    }
    return *this;
}

Cyc& Cyc::operator-=(const Cyc& o) {
    if (n_ != o.n_) throw std::invalid_argument("conductor mismatch");
    for (size_t j = 0; j < coeffs_.size(); ++j) {
        coeffs_[j] -= o.coeffs_[j];
        canon(coeffs_[j]);
    }
    return *this;
}

Cyc& Cyc::operator*=(const Cyc& o) {
    if (n_ != o.n_) throw std::invalid_argument("conductor mismatch");
    const CycField& f = CycField::get(n_);
    unsigned d = f.degree();
    std::vector<Rational> acc(d, Rational(0));
    for (unsigned a = 0; a < d; ++a) {
        if (coeffs_[a] == 0) continue;
        for (unsigned b = 0; b < d; ++b) {
            if (o.coeffs_[b] == 0) continue;
            Rational prod = coeffs_[a] * o.coeffs_[b];
            canon(prod);
            const auto& res = f.power_residue(a + b);
            for (unsigned j = 0; j < d; ++j) {
                if (res[j] == 0) continue;
                acc[j] += prod * res[j];
                canon(acc[j]);
            }
        }
    }
    coeffs_ = std::move(acc);
    return *this;
}

Cyc Cyc::inverse() const {
    if (is_zero()) throw std::domain_error("division by zero");
    const CycField& f = CycField::get(n_);
    unsigned d = f.degree();
    // Solve (this * x) = 1 as a d x d rational linear system: column j of the
    // matrix is this * zeta^j expressed in the power basis.
    std::vector<std::vector<Rational>> m(d, std::vector<Rational>(d + 1, Rational(0)));
    for (unsigned j = 0; j < d; ++j) {
        Cyc col = *this * Cyc::root_of_unity(n_, j);
        for (unsigned r = 0; r < d; ++r) m[r][j] = col.coeffs_[r];
    }
    m[0][d] = 1;
    // Gauss-Jordan
    unsigned row = 0;
    std::vector<int> pivot_col(d, -1);
    for (unsigned c = 0; c < d && row < d; ++c) {
        unsigned p = row;
        while (p < d && m[p][c] == 0) ++p;
        if (p == d) continue;
        std::swap(m[p], m[row]);
        Rational inv = 1 / m[row][c];
        canon(inv);
        for (unsigned j = c; j <= d; ++j) {
            m[row][j] *= inv;
            canon(m[row][j]);
        }
        for (unsigned r = 0; r < d; ++r) {
            if (r == row || m[r][c] == 0) continue;
            Rational factor = m[r][c];
            for (unsigned j = c; j <= d; ++j) {
                m[r][j] -= factor * m[row][j];
                canon(m[r][j]);
            }
        }
        pivot_col[row] = static_cast<int>(c);
        ++row;
    }
    Cyc out(n_);
    for (unsigned r = 0; r < row; ++r) out.coeffs_[pivot_col[r]] = m[r][d];
    return out;
}

Cyc& Cyc::operator/=(const Cyc& o) { return *this *= o.inverse(); }

bool Cyc::operator<(const Cyc& o) const {
    if (n_ != o.n_) return n_ < o.n_;
    for (size_t j = 0; j < coeffs_.size(); ++j) {
        int c = cmp(coeffs_[j], o.coeffs_[j]);
        if (c != 0) return c < 0;
    }
    return false;
}

std::string Cyc::str() const {
    if (is_zero()) return "0";
    std::string out;
    bool first = true;
    for (int k = static_cast<int>(coeffs_.size()) - 1; k >= 0; --k) {
        const Rational& c = coeffs_[k];
        if (c == 0) continue;
        Rational abs_c = abs(c);
        if (first) {
            if (c < 0) out += "-";
            first = false;
        } else {
            out += (c < 0) ? " - " : " + ";
        }
        std::string root;
        if (k == 1)
            root = "zeta" + std::to_string(n_);
        else if (k > 1)
            root = "zeta" + std::to_string(n_) + "^" + std::to_string(k);
        if (root.empty()) {
            out += abs_c.get_str();
        } else if (abs_c == 1) {
            out += root;
        } else {
            out += abs_c.get_str() + "*" + root;
        }
    }
    return out;
}

namespace {

struct Parser {
    const std::string& s;
    size_t pos = 0;
    unsigned n;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    [[noreturn]] void fail(const std::string& what) {
        throw std::invalid_argument("scalar parse error at position " + std::to_string(pos) + ": " + what);
    }

    long integer() {
        skip_ws();
        size_t start = pos;
        if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
        size_t digits = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == digits) fail("expected integer");
        return std::stol(s.substr(start, pos - start));
    }

    Rational rational() {
        long num = integer();
        if (eat('/')) {
            long den = integer();
            if (den <= 0) fail("denominator must be positive");
            Rational q(num, den);
            q.canonicalize();
            return q;
        }
        return Rational(num);
    }

    // root := 'i' | 'zeta' digits ['^' integer]
    Cyc root() {
        skip_ws();
        if (pos < s.size() && s[pos] == 'i') {
            ++pos;
            if (n % 4 != 0) fail("'i' requires conductor divisible by 4");
            return Cyc::root_of_unity(n, n / 4);
        }
        if (s.compare(pos, 4, "zeta") == 0) {
            pos += 4;
            size_t start = pos;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
            if (pos == start) fail("expected root order after 'zeta'");
            unsigned order = static_cast<unsigned>(std::stoul(s.substr(start, pos - start)));
            if (order == 0 || n % order != 0) fail("root order " + std::to_string(order) + " does not divide conductor " + std::to_string(n));
            long power = 1;
            if (eat('^')) power = integer();
            long r = power % static_cast<long>(order);
            if (r < 0) r += order;
            return Cyc::root_of_unity(n, static_cast<long>(n / order) * r);
        }
        fail("expected root");
    }

    bool at_root() {
        skip_ws();
        return pos < s.size() && (s[pos] == 'i' || s.compare(pos, 4, "zeta") == 0);
    }

    Cyc term() {
        if (at_root()) return root();
        Rational q = rational();
        Cyc out(n, q);
        if (eat('*')) out *= root();
        return out;
    }

    Cyc expr() {
        Cyc acc(n);
        bool neg = false;
        if (eat('-'))
            neg = true;
        else
            eat('+');
        Cyc t = term();
        acc += neg ? -t : t;
        while (true) {
            skip_ws();
            if (pos >= s.size()) break;
            if (eat('-'))
                neg = true;
            else if (eat('+'))
                neg = false;
            else
                fail("expected '+' or '-'");
            Cyc u = term();
            acc += neg ? -u : u;
        }
        return acc;
    }
};

} // namespace

Cyc parse_scalar(const std::string& text, unsigned conductor) {
    Parser p{text, 0, conductor};
    Cyc out = p.expr();
    return out;
}

} // namespace cla
