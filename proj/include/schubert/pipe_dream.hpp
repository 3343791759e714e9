#pragma once

/**
 * @file pipe_dream.hpp
 * @brief Reduced pipe dreams on the staircase {(i, j) : i + j <= n}.
 *
 * Pipe i enters on the left of row i. A cross sends it straight through,
 * every other cell is a bump (a pipe from the west turns north, a pipe from
 * the south turns east). w(i) is the column where pipe i leaves the top row.
 */

#include <set>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "schubert/permutation.hpp"
#include "schubert/polynomial.hpp"

namespace schubert {

using Cell = std::pair<int, int>;  // (row, column), 1-based

struct PipeDream {
  int n = 0;
  std::set<Cell> crosses;

  friend bool operator==(const PipeDream&, const PipeDream&) = default;
  friend auto operator<=>(const PipeDream&, const PipeDream&) = default;
};

/// Result of following every pipe through a pipe dream.
struct PipeTrace {
  Permutation w;
  bool reduced = true;  // no pair of pipes crosses more than `crossing_bound` times
};

/// Traces the pipes. Throws std::invalid_argument if a cross lies outside the staircase.
PipeTrace trace_pipe_dream(const PipeDream& pd, int crossing_bound = 1);

/// w(i) = top column reached by the pipe entering row i.
Permutation pd_permutation(const PipeDream& pd);

/// All reduced pipe dreams of w in the staircase of S_n, sorted.
/// Throws std::invalid_argument unless w lies in S_n.
std::vector<PipeDream> enumerate_pds(const Permutation& w, int n);
inline std::vector<PipeDream> enumerate_pds(const Permutation& w) {
  return enumerate_pds(w, w.min_rank());
}

/// Number of reduced cross subsets of the S_n staircase (any permutation).
std::size_t count_reduced_pipe_dreams(int n);

/// prod x_i over crosses (i, j).
Polynomial pd_weight_single(const PipeDream& pd);

/// prod (x_i - y_j) over crosses (i, j).
Polynomial pd_weight_double(const PipeDream& pd);

/// Rows of '┼' (cross) and '╭' (bump); row i has n + 1 - i cells.
std::string render_pipe_dream(const PipeDream& pd);

nlohmann::json pipe_dream_to_json(const PipeDream& pd);
PipeDream pipe_dream_from_json(const nlohmann::json& doc);

}  // namespace schubert
