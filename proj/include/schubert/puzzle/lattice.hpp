#pragma once

/**
 * @file lattice.hpp
 * @brief Triangular lattice in axial coordinates and its rhombus cells.
 *
 * Vertices are integer pairs (q, r) standing for q*e0 + r*e60, where e0 points
 * east and e60 points up and to the right; e120 = e60 - e0. A unit edge is named
 * by its start vertex and direction. Three rhombus shapes tile the plane:
 *
 *   P60     sides bottom (horizontal), right (60), top (horizontal), left (60)
 *   P120    sides bottom (horizontal), right (120), top (horizontal), left (120)
 *   Diamond sides lower-right (60), upper-right (120), upper-left (60), lower-left (120)
 *
 * Pipes never go down: horizontal edges are crossed upwards, 60-degree edges
 * towards the upper left and 120-degree edges towards the upper right. That
 * fixes which two sides of each cell take pipes in and which two let them out.
 */

#include <array>
#include <compare>
#include <string>

namespace schubert::puzzle {

struct Vertex {
  int q = 0, r = 0;
  friend auto operator<=>(const Vertex&, const Vertex&) = default;
};

/// Direction of a unit edge in degrees: 0, 60 or 120.
struct Edge {
  int q = 0, r = 0, dir = 0;
  Vertex start() const noexcept { return {q, r}; }
  Vertex end() const noexcept;
  bool horizontal() const noexcept { return dir == 0; }
  /// Horizontal edges hold up to two pipes, tilted ones a single pipe.
  int capacity() const noexcept { return horizontal() ? 2 : 1; }
  std::string to_string() const;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// The unit edge between two adjacent vertices, in either order.
Edge edge_between(Vertex a, Vertex b);

enum class Orientation { P60, P120, Diamond };

const char* orientation_name(Orientation o) noexcept;
Orientation orientation_from_name(const std::string& name);

/// Sides in the order listed above; together they run counterclockwise.
std::array<Edge, 4> cell_sides(Orientation o, Vertex v) noexcept;

/// Whether pipes enter the cell through side s.
bool is_in_side(Orientation o, int side) noexcept;

/// Side s is horizontal (only the bottom and top of P60/P120 cells).
inline bool side_is_horizontal(Orientation o, int side) noexcept {
  return o != Orientation::Diamond && (side == 0 || side == 2);
}

/// The two unit triangles covered by a cell, encoded as (q, r, up?).
std::array<std::array<int, 3>, 2> cell_triangles(Orientation o, Vertex v) noexcept;

}  // namespace schubert::puzzle
