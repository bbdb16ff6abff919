#pragma once

#include "cla/casimir.hpp"

#include <optional>
#include <set>

namespace cla {

/// Exact eigenvalue list of a simultaneous ad-eigenvector, one coordinate per
/// designated Cartan element. With the dual basis normalized against the
/// Cartan basis, these coordinates are the root functional itself.
struct RootVector {
    std::vector<Rational> coords;

    bool is_zero() const {
        for (const auto& c : coords)
            if (c != 0) return false;
        return true;
    }
    bool operator==(const RootVector& o) const { return coords == o.coords; }
};

struct RootAssignment {
    std::string element;
    int degree;
    RootVector root;
};

struct RootSystem {
    std::vector<RootAssignment> roots;      // nonzero roots, basis order
    std::vector<RootAssignment> zero_roots; // commute with the whole Cartan
    std::vector<std::string> errors;        // elements that are not ad-eigenvectors
};

/// One reference table entry: eta(a, b) = value, elements by name.
struct GoldenPair {
    std::string a, b;
    Cyc value;
};

/// A built-in algebra together with everything needed to reproduce its
/// published tables: Cartan designation, expected commutants, reference
/// bilinear-form tables and reference Casimir coefficient lists.
struct CatalogEntry {
    std::string name;
    ColorAlgebra algebra;

    std::vector<std::string> cartan;           // degree-00 commuting elements
    std::vector<std::string> root_coord_names; // dual-basis labels, one per Cartan element

    std::optional<JForm> jform;

    Cyc normalization; // applied to every bilinear form of this entry

    /// Expected commutant (up to scalar), keyed by the commutant's degree.
    /// Degrees absent from the map are expected to have no commutant.
    std::map<int, GradedMatrix> expected_commutants;

    /// Form degrees whose bilinear form is expected to be degenerate.
    std::set<int> degenerate_form_degrees;

    /// Reference tables keyed by form degree mu. Degrees in golden_complete
    /// list every nonvanishing entry; elsewhere the table is a subset and the
    /// remaining entries follow from the symmetry law.
    std::map<int, std::vector<GoldenPair>> golden_eta;
    std::map<int, std::vector<GoldenPair>> golden_eta_inv;
    std::set<int> golden_complete;

    /// Reference Casimir elements as raw quadratic terms (compare after
    /// normal ordering), keyed by degree mu.
    std::map<int, std::vector<RawQuadTerm>> golden_casimir;

    CatalogEntry(std::string n, ColorAlgebra a) : name(std::move(n)), algebra(std::move(a)) {}
};

/// Z2xZ2-graded extension of the strange Lie superalgebra q(n): basis
/// E^alpha[i,j] = Theta^alpha (x) e_ij on a (n,n|n,n) space, one commutant
/// per degree, a single nondegenerate form at degree 11.
CatalogEntry build_qn(int n);

/// Z3xZ3-graded extension of sl(2): nine generators over the sigma-twisted
/// group algebra, 6-dimensional graded representation, commutants and forms
/// at degrees 00, 11 and 22.
CatalogEntry build_z32_sl2();

/// Z2xZ2-graded extension of osp(m|2n) on the doubled (m,m|2n,2n) space cut
/// out by a J-form; commutants at degrees 00 and 11 only.
CatalogEntry build_osp(int m, int n);

/// Lookup by family name: "qn" (uses n), "z32-sl2", "osp" (uses m and n).
CatalogEntry build_entry(const std::string& name, int m = 0, int n = 0);

std::vector<std::string> catalog_names();

RootSystem extract_roots(const ColorAlgebra& alg, const std::vector<std::string>& cartan);
RootSystem extract_roots(const CatalogEntry& entry);

/// y == s * x for some nonzero scalar s.
bool proportional(const GradedMatrix& x, const GradedMatrix& y);

} // namespace cla
