#pragma once

/**
 * @file solver.hpp
 * @brief Exhaustive solving of rules on boards, symbolic values and free-boundary sweeps.
 *
 * Cells are filled one at a time, most constrained first; a tile is placed only
 * if its side counts agree with every side already fixed by a neighbour, the
 * rule and the edge limits. Complete tilings are traced from the sources and
 * kept when every strand is reached, no two pipes cross more than
 * `crossing_bound` times and every requested connection holds.
 */

#include <compare>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "schubert/polynomial.hpp"
#include "schubert/puzzle/board.hpp"
#include "schubert/puzzle/catalog.hpp"

namespace schubert::puzzle {

/// One pipe position on a boundary edge.
struct PipeEnd {
  Edge edge;
  int slot = 0;
  friend auto operator<=>(const PipeEnd&, const PipeEnd&) = default;
};

struct TracedPipe {
  PipeEnd from, to;
  std::string source_label, sink_label;  // empty when the rule gives none
  std::vector<int> cells;                // cells visited, in order
  std::vector<int> strands;              // strand used in each of those cells
};

struct Solution {
  std::vector<int> tiles;  // catalog index per board cell
  std::vector<TracedPipe> pipes;
};

struct SolveOptions {
  /// Largest number of times two pipes may cross.
  int crossing_bound = 1;
};

std::vector<Solution> solve(const Board& board, const Rule& rule, const TileCatalog& catalog,
                            const SolveOptions& options = {});

/// Product of the valuations of the cells holding valued tiles.
Polynomial solution_value(const Board& board, const TileCatalog& catalog, const Solution& solution);

/// Sum of solution values.
Polynomial value(const Board& board, const Rule& rule, const TileCatalog& catalog, const SolveOptions& options = {});

/// Pipe counts on every boundary edge plus which boundary position is joined to which.
struct BoundaryKey {
  std::vector<std::pair<Edge, int>> counts;
  std::vector<std::pair<PipeEnd, PipeEnd>> links;  // source -> sink

  std::string to_string() const;
  friend auto operator<=>(const BoundaryKey&, const BoundaryKey&) = default;
};

/// Every tiling of the board admissible under `limits`, grouped by boundary
/// key, with the summed value per key.
std::map<BoundaryKey, Polynomial> boundary_values(const Board& board, const TileCatalog& catalog,
                                                  const std::vector<EdgeLimit>& limits,
                                                  const SolveOptions& options = {});

struct SolutionAudit {
  bool orientations = false;  // each tile fits its cell
  bool edges_match = false;   // neighbours agree on shared edge counts
  bool conservation = false;  // in-count equals out-count in every cell
  bool acyclic = false;       // tracing from the sources reaches every strand once
  bool ok() const { return orientations && edges_match && conservation && acyclic; }
};

/// Independent recheck of a solution's structural invariants.
SolutionAudit audit_solution(const Board& board, const TileCatalog& catalog, const Solution& solution);

/// One line per cell: position, orientation, tile name.
std::string render_solution(const Board& board, const TileCatalog& catalog, const Solution& solution);

}  // namespace schubert::puzzle
