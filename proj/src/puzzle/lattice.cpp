#include "schubert/puzzle/lattice.hpp"

#include <stdexcept>

namespace schubert::puzzle {

namespace {

Vertex step(Vertex v, int dir) {
  switch (dir) {
    case 0: return {v.q + 1, v.r};
    case 60: return {v.q, v.r + 1};
    case 120: return {v.q - 1, v.r + 1};
  }
  throw std::invalid_argument("edge direction must be 0, 60 or 120");
}

}  // namespace

Vertex Edge::end() const noexcept {
  switch (dir) {
    case 0: return {q + 1, r};
    case 60: return {q, r + 1};
    default: return {q - 1, r + 1};
  }
}

std::string Edge::to_string() const {
  return "(" + std::to_string(q) + "," + std::to_string(r) + ")@" + std::to_string(dir);
}

Edge edge_between(Vertex a, Vertex b) {
  for (int dir : {0, 60, 120}) {
    if (step(a, dir) == b) return {a.q, a.r, dir};
    if (step(b, dir) == a) return {b.q, b.r, dir};
  }
  throw std::invalid_argument("vertices are not adjacent");
}

const char* orientation_name(Orientation o) noexcept {
  switch (o) {
    case Orientation::P60: return "p60";
    case Orientation::P120: return "p120";
    case Orientation::Diamond: return "diamond";
  }
  return "?";
}

Orientation orientation_from_name(const std::string& name) {
  for (Orientation o : {Orientation::P60, Orientation::P120, Orientation::Diamond})
    if (name == orientation_name(o)) return o;
  throw std::invalid_argument("unknown orientation '" + name + "'");
}

std::array<Edge, 4> cell_sides(Orientation o, Vertex v) noexcept {
  switch (o) {
    case Orientation::P60:
      return {Edge{v.q, v.r, 0}, Edge{v.q + 1, v.r, 60}, Edge{v.q, v.r + 1, 0}, Edge{v.q, v.r, 60}};
    case Orientation::P120:
      return {Edge{v.q, v.r, 0}, Edge{v.q + 1, v.r, 120}, Edge{v.q - 1, v.r + 1, 0}, Edge{v.q, v.r, 120}};
    case Orientation::Diamond:
      return {Edge{v.q, v.r, 60}, Edge{v.q, v.r + 1, 120}, Edge{v.q - 1, v.r + 1, 60}, Edge{v.q, v.r, 120}};
  }
  return {};
}

bool is_in_side(Orientation o, int side) noexcept {
  switch (o) {
    case Orientation::P60: return side == 0 || side == 1;
    case Orientation::P120: return side == 0 || side == 3;
    case Orientation::Diamond: return side == 0 || side == 3;
  }
  return false;
}

std::array<std::array<int, 3>, 2> cell_triangles(Orientation o, Vertex v) noexcept {
  // Up triangle (q, r): (q,r), (q+1,r), (q,r+1). Down triangle (q, r): (q+1,r), (q,r+1), (q+1,r+1).
  switch (o) {
    case Orientation::P60: return {{{v.q, v.r, 1}, {v.q, v.r, 0}}};
    case Orientation::P120: return {{{v.q, v.r, 1}, {v.q - 1, v.r, 0}}};
    case Orientation::Diamond: return {{{v.q - 1, v.r, 0}, {v.q - 1, v.r + 1, 1}}};
  }
  return {};
}

}  // namespace schubert::puzzle
