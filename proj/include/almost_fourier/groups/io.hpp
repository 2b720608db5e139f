#pragma once

#include <nlohmann/json.hpp>

#include "almost_fourier/groups/character.hpp"

namespace almost_fourier::groups {

/// {"order": n, "table": [row-major indices], "names": [...],
///  "characters": [[scalar strings over the carrier], ...]}
/// Only whole groups are serialized; subgroups are written as their own table.
nlohmann::json group_to_json(const FiniteGroup& g);
/// Throws Parse on malformed input, NotAGroup on axiom failure.
FiniteGroup group_from_json(const nlohmann::json& j);

}  // namespace almost_fourier::groups
