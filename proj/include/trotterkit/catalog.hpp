#pragma once

#include <string>
#include <vector>

#include "trotterkit/scheme.hpp"

namespace trotterkit {

/// Canonical identifiers of the built-in schemes, in catalog order.
const std::vector<std::string>& catalog_names();

/// Looks up a built-in scheme. Throws std::invalid_argument listing the
/// available names when the identifier is unknown.
const SplittingScheme& get_scheme(const std::string& name);

bool is_catalog_scheme(const std::string& name);

}  // namespace trotterkit
