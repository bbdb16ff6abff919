#pragma once

#include "cla/cyclotomic.hpp"

#include <optional>
#include <string>
#include <vector>

namespace cla {

/// Element of Gamma = Z_{k1} x ... x Z_{kp}, componentwise residues.
using GroupElement = std::vector<int>;

std::string degree_str(const GroupElement& g);

/// Bicharacter zeta_M^{a^T B b}; covers both the commutation factor omega
/// and the sigma factor (they differ only in the axioms checked).
struct Bicharacter {
    unsigned root_order = 1;
    std::vector<std::vector<long>> exponent_matrix;
};

struct LawCheck {
    std::string law;
    bool pass = true;
    std::string witness; // empty when pass
};

struct ValidationReport {
    std::vector<LawCheck> checks;
    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

class GradingContext {
public:
    GradingContext(std::vector<int> orders, Bicharacter omega,
                   std::optional<Bicharacter> sigma = std::nullopt,
                   unsigned conductor = 12,
                   std::optional<std::vector<GroupElement>> element_order = std::nullopt);

    unsigned conductor() const { return conductor_; }
    const std::vector<int>& orders() const { return orders_; }
    const Bicharacter& omega_factor() const { return omega_; }
    const std::optional<Bicharacter>& sigma_factor() const { return sigma_; }

    size_t group_size() const { return elements_.size(); }
    /// Elements in the fixed total order (block layout order).
    const std::vector<GroupElement>& elements() const { return elements_; }
    const GroupElement& element(int code) const { return elements_[code]; }
    int code(const GroupElement& g) const;

    GroupElement add(const GroupElement& a, const GroupElement& b) const;
    GroupElement neg(const GroupElement& a) const;
    int add_code(int a, int b) const { return sum_table_[a][static_cast<size_t>(b)]; }
    int neg_code(int a) const { return neg_table_[a]; }
    int zero_code() const { return zero_code_; }

    Cyc omega(const GroupElement& a, const GroupElement& b) const;
    Cyc omega(int a, int b) const { return omega_table_[a][static_cast<size_t>(b)]; }
    bool has_sigma() const { return sigma_.has_value(); }
    Cyc sigma(const GroupElement& a, const GroupElement& b) const;
    Cyc sigma(int a, int b) const;

    /// Exhaustive check of the commutation-factor laws and, when present,
    /// the sigma-factor laws; failures are report entries with witnesses.
    ValidationReport validate_factor() const;

    /// Parses a degree like "01" (single-digit components) or "0,1".
    GroupElement parse_degree(const std::string& text) const;

private:
    Cyc eval_bicharacter(const Bicharacter& f, const GroupElement& a, const GroupElement& b) const;

    std::vector<int> orders_;
    Bicharacter omega_;
    std::optional<Bicharacter> sigma_;
    unsigned conductor_;
    std::vector<GroupElement> elements_;
    std::vector<std::vector<int>> sum_table_;
    std::vector<int> neg_table_;
    int zero_code_ = 0;
    std::vector<std::vector<Cyc>> omega_table_;
    std::vector<std::vector<Cyc>> sigma_table_;
};

/// Enumerates Gamma in lexicographic order; the returned context carries the
/// trivial factor (omega == 1) until the caller supplies a real one.
std::vector<GroupElement> enumerate_group(const std::vector<int>& orders);

} // namespace cla
