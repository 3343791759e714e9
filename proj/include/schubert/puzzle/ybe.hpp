#pragma once

/**
 * @file ybe.hpp
 * @brief Brute-force Yang-Baxter check on the hexagon strip.
 *
 * Both hexagon boards are tiled in every admissible way with a free boundary;
 * tilings are grouped by boundary key (pipe counts on the boundary edges and
 * which entry is joined to which exit) and the two summed values are compared
 * key by key. A key reached by one board only compares against 0.
 */

#include <nlohmann/json_fwd.hpp>
#include <string>
#include <vector>

#include "schubert/puzzle/builders.hpp"
#include "schubert/puzzle/solver.hpp"

namespace schubert::puzzle {

/// x_i, y_i with x_i + y_i + z = 0: z = -x1 - y1 and y_i = x1 + y1 - x_i for i >= 2.
HexValuation ybe_valuation(int k);

/// The variant x_i + y_i = z: z = x1 + y1, y_i = z - x_i. With `y_zero`,
/// every y_i is 0 and every x_i equals z = x1.
HexValuation double_ybe_valuation(int k, bool y_zero);

struct YbeCase {
  BoundaryKey key;
  Polynomial left, right;
  bool equal() const { return left == right; }
};

struct YbeReport {
  int k = 0;
  bool constraints = false;
  std::string relation;
  std::vector<YbeCase> cases;  // sorted by key
  /// Counterexamples up to the symmetries of the hexagon.
  int orbit_count = 0;

  std::vector<const YbeCase*> counterexamples() const;
  bool passed() const { return !cases.empty() && counterexamples().empty(); }
  nlohmann::json to_json() const;
};

struct YbeOptions {
  bool enforce_constraints = true;  // every horizontal boundary edge carries at most one pipe
  bool swap_sides = false;          // put the right board first
  int jobs = 1;                     // > 1 tiles the two boards concurrently
  SolveOptions solve;
};

YbeReport ybe_check(const TileCatalog& catalog, int k, const HexValuation& valuation, const YbeOptions& options = {});

/// Boundary key images under the symmetries of the k-hexagon: the mirror in
/// the vertical axis and the half turn (which reverses pipe direction).
BoundaryKey mirror_key(const BoundaryKey& key, int k);
BoundaryKey rotate_key(const BoundaryKey& key, int k);
/// Smallest image of the key under the four symmetries.
BoundaryKey canonical_key(const BoundaryKey& key, int k);

/// ybe_check with the x_i + y_i = z variant; report only.
YbeReport double_ybe_experiment(const TileCatalog& catalog, int k, bool y_zero, bool enforce_constraints = true);

}  // namespace schubert::puzzle
