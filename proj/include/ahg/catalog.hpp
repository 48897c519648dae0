// Copyright 2026 The ahgeom Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file catalog.hpp
 * @brief Built-in structures and randomized compatible Kähler forms.
 */

#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "ahg/structure.hpp"

namespace ahg {

struct CatalogEntry {
    std::string name;
    std::string description;
};

const std::vector<CatalogEntry>& catalog_entries();

/// Throws std::out_of_range for an unknown name.
StructureInput catalog_input(std::string_view name);

/// omega' = Q^* omega and psi' = Q^* psi for an exact rotation Q built from
/// `rotations` Givens factors with Pythagorean cos/sin pairs. The input must
/// be given in an orthonormal basis.
StructureInput randomize_kaehler_form(const StructureInput& input, std::uint32_t seed, int rotations = 2);

/// The rotation used by randomize_kaehler_form.
Matrix random_rotation(int dim, std::uint32_t seed, int rotations);

}  // namespace ahg
