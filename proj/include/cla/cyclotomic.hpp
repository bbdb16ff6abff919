#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace cla {

using Rational = mpq_class;

/// Data shared by all scalars of a fixed conductor N: the cyclotomic
/// polynomial Phi_N and precomputed reductions of zeta^k for k up to
/// 2*(phi(N)-1), so products reduce with table lookups.
class CycField {
public:
    static const CycField& get(unsigned conductor);

    unsigned conductor() const { return n_; }
    unsigned degree() const { return degree_; }

    // Reduction of zeta_N^k as a coefficient vector of length degree().
    const std::vector<Rational>& power_residue(unsigned k) const;

private:
    explicit CycField(unsigned n);

    unsigned n_;
    unsigned degree_;
    std::vector<Rational> phi_;                      // monic Phi_N, low to high, length degree_+1
    std::vector<std::vector<Rational>> power_table_; // zeta^k mod Phi_N, k = 0 .. 2*degree_-1
};

/// Exact element of Q(zeta_N), stored as the canonical residue modulo Phi_N.
class Cyc {
public:
    Cyc() : n_(0) {}
    explicit Cyc(unsigned conductor);
    Cyc(unsigned conductor, const Rational& rational);

    static Cyc zero(unsigned conductor) { return Cyc(conductor); }
    static Cyc one(unsigned conductor) { return Cyc(conductor, Rational(1)); }
    // zeta_N^k; k is reduced mod N and the order of any root dividing N is reachable.
    static Cyc root_of_unity(unsigned conductor, long k);

    unsigned conductor() const { return n_; }
    bool is_zero() const;
    bool is_rational() const;
    // Valid only when is_rational().
    const Rational& rational_part() const { return coeffs_[0]; }

    const std::vector<Rational>& coeffs() const { return coeffs_; }

    Cyc operator-() const;
    Cyc& operator+=(const Cyc& o);
    Cyc& operator-=(const Cyc& o);
    Cyc& operator*=(const Cyc& o);
    Cyc& operator/=(const Cyc& o);

    friend Cyc operator+(Cyc a, const Cyc& b) { return a += b; }
    friend Cyc operator-(Cyc a, const Cyc& b) { return a -= b; }
    friend Cyc operator*(Cyc a, const Cyc& b) { return a *= b; }
    friend Cyc operator/(Cyc a, const Cyc& b) { return a /= b; }

    Cyc inverse() const; // throws std::domain_error on zero

    bool operator==(const Cyc& o) const { return n_ == o.n_ && coeffs_ == o.coeffs_; }
    bool operator!=(const Cyc& o) const { return !(*this == o); }
    // Lexicographic; used only to make container ordering deterministic.
    bool operator<(const Cyc& o) const;

    /// Prints in the scalar grammar, terms in decreasing root power.
    std::string str() const;

private:
    unsigned n_;
    std::vector<Rational> coeffs_; // length degree(), canonical
};

/// Parses the scalar grammar:
///   expr     := ['+'|'-'] term (('+'|'-') term)*
///   term     := rational ['*' root] | root
///   rational := integer ['/' positive-integer]
///   root     := 'i' | 'zeta' digits ['^' integer]
/// Throws std::invalid_argument on syntax errors or when a root order
/// does not divide the conductor.
Cyc parse_scalar(const std::string& text, unsigned conductor);

} // namespace cla
