#pragma once

/**
 * @file board.hpp
 * @brief Boards (valued rhombus cells), rules (boundary pipe endpoints) and their JSON form.
 *
 * Board JSON: {"cells": [{"q": 0, "r": 0, "orientation": "p60", "valuation": "x1 - y2"}, ...]}
 * Rule JSON:  {"endpoints": [{"edge": [q, r, dir], "labels": ["p1"]}, ...],
 *              "connections": [["p1", "t2"], ...],
 *              "edge_limits": [{"edge": [q, r, dir], "max": 1}, ...]}
 *
 * A boundary edge not listed among the endpoints carries no pipe. Labels on a
 * horizontal edge are listed left to right.
 */

#include <array>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "schubert/polynomial.hpp"
#include "schubert/puzzle/lattice.hpp"

namespace schubert::puzzle {

class BoardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct BoardCell {
  Vertex pos;
  Orientation orientation = Orientation::P60;
  Polynomial valuation = 1;
};

struct Board {
  std::vector<BoardCell> cells;
};

struct RuleEndpoint {
  Edge edge;
  std::vector<std::string> labels;
};

struct EdgeLimit {
  Edge edge;
  int max = 0;
};

struct Rule {
  std::vector<RuleEndpoint> endpoints;
  std::vector<std::pair<std::string, std::string>> connections;
  std::vector<EdgeLimit> edge_limits;
};

/// Edge incidence structure of a board. Construction validates the board:
/// no two cells overlap, the cells form one connected region, and every edge
/// shared by two cells is an in-side of one and an out-side of the other.
struct BoardGeometry {
  struct Incidence {
    int cell;
    int side;
  };

  std::vector<Edge> edges;
  std::map<Edge, int> index;
  std::vector<std::array<int, 4>> cell_edges;
  std::vector<std::vector<Incidence>> incidences;

  explicit BoardGeometry(const Board& board);

  bool is_boundary(int edge) const { return incidences[edge].size() == 1; }
  /// Pipes cross a boundary edge into the board.
  bool is_source(int edge) const { return is_boundary(edge) && enters_[edge]; }
  int edge_id(const Edge& e) const;  // -1 if absent

 private:
  std::vector<char> enters_;  // the first incidence is an in-side
};

Board board_from_json(const nlohmann::json& doc);
nlohmann::json board_to_json(const Board& board);
Rule rule_from_json(const nlohmann::json& doc);
nlohmann::json rule_to_json(const Rule& rule);

nlohmann::json edge_to_json(const Edge& e);
Edge edge_from_json(const nlohmann::json& j);

}  // namespace schubert::puzzle
