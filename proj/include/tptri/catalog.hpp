#pragma once

#include "tptri/coefficient_spec.hpp"

#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace tptri {

// A named, built-in triangle: either a three-sequence coefficient spec or a
// general row-dependent recurrence (possibly driven by a closed form).
struct CatalogEntry {
    std::string name;
    std::string summary;
    std::variant<CoefficientSpec, GeneralSpec> spec;
};

// The built-in triangles, in a fixed listing order.
const std::vector<CatalogEntry>& catalog();

// Entry by name, or nullptr.
const CatalogEntry* catalog_find(std::string_view name);

}  // namespace tptri
