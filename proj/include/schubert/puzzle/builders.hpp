#pragma once

/**
 * @file builders.hpp
 * @brief Generated boards and rules for pipe dreams, bumpless pipe dreams,
 *        the Yang-Baxter hexagons and the Young-diagram diagnostics.
 */

#include <optional>
#include <vector>

#include "schubert/bumpless.hpp"
#include "schubert/permutation.hpp"
#include "schubert/pipe_dream.hpp"
#include "schubert/puzzle/board.hpp"
#include "schubert/puzzle/catalog.hpp"
#include "schubert/puzzle/solver.hpp"

namespace schubert::puzzle {

enum class Weighting { Single, Double };

inline constexpr BpdTile kAllBpdTiles[] = {BpdTile::Blank,    BpdTile::Cross,   BpdTile::Horizontal,
                                           BpdTile::Vertical, BpdTile::ElbowSE, BpdTile::ElbowNW};

/// The diamond tile drawing a BPD tile (west = lower-left, south = lower-right,
/// north = upper-left, east = upper-right); only Blank is valued.
TileDef diamond_tile(BpdTile kind);

/// Same orientation, side counts and strands; names and the valued flag are ignored.
bool same_wiring(const TileDef& a, const TileDef& b);

/**
 * n x n square of diamonds. Cell (i, j) (row i from the top, column j from the
 * left) is board cell (i-1)*n + (j-1) and carries x_i or x_i - y_j.
 * Its lower-left side faces west, lower-right south, upper-right east and
 * upper-left north.
 */
Board bpd_board(int n, Weighting weighting);

/// Pipes enter under column j (label "c<j>") and leave east of row i ("r<i>");
/// the pipe leaving row i must have entered under column w(i).
Rule bpd_rule(const Permutation& w, int n);

/**
 * Staircase of P120 cells: row i has cells (i, 1) .. (i, n+1-i), listed row by
 * row. Cells with i + j <= n carry x_i or x_i - y_j; the antidiagonal cells
 * (i, n+1-i) carry 1.
 */
Board pd_board(int n, Weighting weighting);

/// Pipe "p<i>" enters west of row i and leaves on top of column w(i) ("t<j>");
/// an auxiliary pipe "q<i>" enters under antidiagonal cell i and leaves on its right ("e<i>").
Rule pd_rule(const Permutation& w, int n);

/// Reads a bpd_board solution back as a bumpless pipe dream (nullopt if a
/// diamond tile has no BPD counterpart).
std::optional<BumplessPipeDream> solution_to_bpd(int n, const TileCatalog& catalog, const Solution& s);

/// Reads a pd_board solution back as a pipe dream: crosses where the "cross"
/// tile sits. Nullopt if a tile other than cross or bump is used.
std::optional<PipeDream> solution_to_pd(int n, const TileCatalog& catalog, const Solution& s);

/// Valuations of the hexagon strip: x_1..x_k, y_1..y_k and z.
struct HexValuation {
  std::vector<Polynomial> x, y;
  Polynomial z;
};

/**
 * Hexagon with horizontal sides of length k, cut into a diamond and a strip of
 * k P60 and k P120 cells. The left board has the diamond at the western end
 * (P60 cells on the bottom row, P120 on top); the right board has it at the
 * eastern end with the rows exchanged. Column i of either strip carries x_i on
 * its P60 cell and y_i on its P120 cell; the diamond carries z.
 */
Board hexagon_left(int k, const HexValuation& v);
Board hexagon_right(int k, const HexValuation& v);

/// The bottom and top boundary edges of the hexagon.
std::vector<Edge> hexagon_horizontal_boundary(int k);

/// P60 parallelogram, m cells wide and h tall; cell (col c, row r) is board cell r*m + c.
Board parallelogram_board(int m, int h);

/// Pipe "p<j>" enters under column j and must leave on top of column j ("t<j>").
Rule parallelogram_rule(int m, int h);

/// Indices of the antidiagonal cells of pd_board(n, .).
std::vector<int> pd_antidiagonal_cells(int n);

}  // namespace schubert::puzzle
