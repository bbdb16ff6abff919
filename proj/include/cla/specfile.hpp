#pragma once

#include "cla/catalog.hpp"

#include <stdexcept>

namespace cla {

/// Schema or I/O problem in a spec file. Math failures (closure, dependent
/// basis, inhomogeneous generators) are not SpecErrors; they surface as the
/// exceptions thrown by the algebra layer.
struct SpecError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Everything the pipeline needs about one algebra, independent of whether
/// it came from a built-in family or a spec file on disk.
struct AlgebraBundle {
    std::string name;
    ColorAlgebra algebra;
    std::optional<JForm> jform;
    std::vector<std::string> cartan;
    std::vector<std::string> root_coord_names;
    Cyc normalization;                      // applied to every bilinear form
    std::map<int, GradedMatrix> form_seeds; // preferred commutant per degree
};

AlgebraBundle to_bundle(const CatalogEntry& e);

/// Parses the JSON spec-file format (see docs/spec-format.md).
AlgebraBundle parse_bundle(const std::string& text);
AlgebraBundle load_bundle(const std::string& path);

/// Canonical spec-file text; parse_bundle(bundle_text(b)) rebuilds b exactly.
std::string bundle_text(const AlgebraBundle& b);
void save_bundle(const AlgebraBundle& b, const std::string& path);

} // namespace cla
