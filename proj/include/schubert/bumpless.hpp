#pragma once

/**
 * @file bumpless.hpp
 * @brief Bumpless pipe dreams on the n x n grid.
 *
 * Pipes enter through the south boundary, one per column, and leave through
 * the east boundary, one per row. Rows are numbered 1..n from the top and
 * columns 1..n from the left.
 */

#include <set>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "schubert/permutation.hpp"
#include "schubert/polynomial.hpp"

namespace schubert {

enum class BpdTile { Blank, Cross, Horizontal, Vertical, ElbowSE, ElbowNW };

/// Occupancy of the four tile edges.
struct TileEdges {
  bool north, south, east, west;
};
TileEdges tile_edges(BpdTile t) noexcept;

const char* tile_name(BpdTile t) noexcept;
BpdTile tile_from_name(const std::string& name);

class InvalidBpd : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct BumplessPipeDream {
  int n = 0;
  std::vector<std::vector<BpdTile>> grid;  // grid[i-1][j-1]

  BpdTile at(int i, int j) const { return grid[i - 1][j - 1]; }

  friend bool operator==(const BumplessPipeDream&, const BumplessPipeDream&) = default;
  friend auto operator<=>(const BumplessPipeDream&, const BumplessPipeDream&) = default;
};

/// How a traced grid is read as a permutation.
enum class BpdConvention {
  RowToColumn,  // w(i) = j when the pipe leaving row i entered at column j (canonical)
  ColumnToRow,  // w(j) = i for the same pipe, i.e. the inverse reading
};

struct BpdTrace {
  Permutation w;
  bool reduced = true;  // no two pipes cross twice
};

/// Follows every pipe. Throws InvalidBpd on an edge mismatch or when a pipe
/// does not run from the south boundary to the east boundary.
BpdTrace trace_bpd(const BumplessPipeDream& bpd, BpdConvention convention = BpdConvention::RowToColumn);

Permutation bpd_permutation(const BumplessPipeDream& bpd,
                            BpdConvention convention = BpdConvention::RowToColumn);

/// Blanks exactly on the Rothe diagram {(i, j) : j < w(i), w^{-1}(j) > i}.
/// Throws std::invalid_argument unless w lies in S_n.
BumplessPipeDream rothe_bpd(const Permutation& w, int n);

/// All reduced bumpless pipe dreams of w in the n x n grid, sorted.
std::vector<BumplessPipeDream> enumerate_bpds(const Permutation& w, int n,
                                              BpdConvention convention = BpdConvention::RowToColumn);
inline std::vector<BumplessPipeDream> enumerate_bpds(const Permutation& w) {
  return enumerate_bpds(w, w.min_rank());
}

/// Every valid tiling of the n x n grid with the south/east boundary filled,
/// reduced or not.
std::vector<BumplessPipeDream> all_bpd_grids(int n);

/// Everything reachable from rothe_bpd(w, n) by droop moves, sorted.
std::vector<BumplessPipeDream> droop_closure(const Permutation& w, int n);
inline std::vector<BumplessPipeDream> droop_closure(const Permutation& w) {
  return droop_closure(w, w.min_rank());
}

/// One-step droops of a BPD (each result is validated).
std::vector<BumplessPipeDream> droops(const BumplessPipeDream& bpd);

int blank_count(const BumplessPipeDream& bpd);

/// prod x_i over Blank cells (i, j).
Polynomial bpd_weight_single(const BumplessPipeDream& bpd);

/// prod (x_i - y_j) over Blank cells (i, j).
Polynomial bpd_weight_double(const BumplessPipeDream& bpd);

/// One row per line: '░' '┼' '─' '│' '╭' '╯'.
std::string render_bpd(const BumplessPipeDream& bpd);

nlohmann::json bpd_to_json(const BumplessPipeDream& bpd);
BumplessPipeDream bpd_from_json(const nlohmann::json& doc);

}  // namespace schubert
