#pragma once

/**
 * @file requirements.hpp
 * @brief The three checks a reconstructed catalog has to meet.
 *
 * R1  the diamond tiles are exactly the six BPD tiles, only Blank valued;
 * R2  its P120 tiles on pd_board reproduce the double pipe-dream sums on S_3;
 * R3  ybe_check(k = 1, constraints on) passes with at least one boundary case.
 */

#include <nlohmann/json_fwd.hpp>

#include "schubert/puzzle/catalog.hpp"

namespace schubert::puzzle {

bool check_r1(const TileCatalog& catalog);
bool check_r2(const TileCatalog& catalog);
bool check_r3(const TileCatalog& catalog);
RequirementTags check_requirements(const TileCatalog& catalog);

/// load_catalog followed by check_requirements; throws CatalogError (tile
/// index -1) naming the first requirement that fails.
TileCatalog load_catalog_strict(const nlohmann::json& document);

}  // namespace schubert::puzzle
