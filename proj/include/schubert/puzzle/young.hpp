#pragma once

/**
 * @file young.hpp
 * @brief Forced-tile diagnostics for Young-diagram regions of a board.
 *
 * Lemma 1: when every pipe comes in from below and leaves through the top
 * (labels "p..." only), the region holds only the trivial tile.
 * Lemma 2: with two pipe families p and q that never cross each other, the
 * region surrounded by their end points holds only the bump tile.
 */

#include <nlohmann/json_fwd.hpp>
#include <string>
#include <vector>

#include "schubert/puzzle/solver.hpp"

namespace schubert::puzzle {

enum class LemmaStatus { Pass, Fail, Vacuous, Inapplicable };

const char* lemma_status_name(LemmaStatus s) noexcept;

struct YoungReport {
  int which = 0;
  LemmaStatus status = LemmaStatus::Vacuous;
  std::string forced_tile;
  int solutions = 0;
  std::vector<std::string> violations;
  std::string note;

  nlohmann::json to_json() const;
};

/// The tile a lemma forces: "trivial" for 1, "bump" for 2.
std::string forced_tile_name(int which);

YoungReport verify_young_lemma(const Board& board, const Rule& rule, const TileCatalog& catalog,
                               const std::vector<int>& region, int which);

}  // namespace schubert::puzzle
