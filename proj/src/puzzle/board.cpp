#include "schubert/puzzle/board.hpp"

#include <set>

#include <nlohmann/json.hpp>

namespace schubert::puzzle {

BoardGeometry::BoardGeometry(const Board& board) {
  std::set<std::array<int, 3>> triangles;
  for (std::size_t c = 0; c < board.cells.size(); ++c) {
    const BoardCell& cell = board.cells[c];
    for (const auto& t : cell_triangles(cell.orientation, cell.pos))
      if (!triangles.insert(t).second) throw BoardError("cell " + std::to_string(c) + " overlaps another cell");
    std::array<int, 4> ids{};
    const auto sides = cell_sides(cell.orientation, cell.pos);
    for (int s = 0; s < 4; ++s) {
      auto [it, inserted] = index.try_emplace(sides[s], static_cast<int>(edges.size()));
      if (inserted) {
        edges.push_back(sides[s]);
        incidences.emplace_back();
      }
      ids[s] = it->second;
      incidences[it->second].push_back({static_cast<int>(c), s});
    }
    cell_edges.push_back(ids);
  }

  enters_.resize(edges.size());
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const auto& inc = incidences[e];
    enters_[e] = is_in_side(board.cells[inc[0].cell].orientation, inc[0].side);
    if (inc.size() != 2) continue;
    const bool a = is_in_side(board.cells[inc[0].cell].orientation, inc[0].side);
    const bool b = is_in_side(board.cells[inc[1].cell].orientation, inc[1].side);
    if (a == b) throw BoardError("edge " + edges[e].to_string() + " is not crossed consistently upwards");
  }

  // Connectivity through shared edges.
  if (!board.cells.empty()) {
    std::vector<bool> seen(board.cells.size(), false);
    std::vector<int> stack{0};
    seen[0] = true;
    std::size_t reached = 1;
    while (!stack.empty()) {
      const int c = stack.back();
      stack.pop_back();
      for (int e : cell_edges[c])
        for (const auto& inc : incidences[e])
          if (!seen[inc.cell]) {
            seen[inc.cell] = true;
            ++reached;
            stack.push_back(inc.cell);
          }
    }
    if (reached != board.cells.size()) throw BoardError("board is not connected");
  }
}

int BoardGeometry::edge_id(const Edge& e) const {
  auto it = index.find(e);
  return it == index.end() ? -1 : it->second;
}

nlohmann::json edge_to_json(const Edge& e) { return nlohmann::json::array({e.q, e.r, e.dir}); }

Edge edge_from_json(const nlohmann::json& j) {
  if (!j.is_array() || j.size() != 3) throw BoardError("edge must be [q, r, dir]");
  Edge e{j[0].get<int>(), j[1].get<int>(), j[2].get<int>()};
  if (e.dir != 0 && e.dir != 60 && e.dir != 120) throw BoardError("edge direction must be 0, 60 or 120");
  return e;
}

Board board_from_json(const nlohmann::json& doc) {
  Board b;
  try {
    for (const auto& c : doc.at("cells")) {
      BoardCell cell;
      cell.pos = {c.at("q").get<int>(), c.at("r").get<int>()};
      cell.orientation = orientation_from_name(c.at("orientation").get<std::string>());
      if (c.contains("valuation")) {
        const auto& v = c["valuation"];
        cell.valuation = v.is_number_integer() ? Polynomial(v.get<Coefficient>()) : Polynomial::parse(v.get<std::string>());
      }
      b.cells.push_back(std::move(cell));
    }
  } catch (const nlohmann::json::exception& e) {
    throw BoardError(std::string("malformed board: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw BoardError(std::string("malformed board: ") + e.what());
  }
  return b;
}

nlohmann::json board_to_json(const Board& board) {
  nlohmann::json cells = nlohmann::json::array();
  for (const BoardCell& c : board.cells)
    cells.push_back({{"q", c.pos.q},
                     {"r", c.pos.r},
                     {"orientation", orientation_name(c.orientation)},
                     {"valuation", c.valuation.to_string()}});
  return {{"cells", cells}};
}

Rule rule_from_json(const nlohmann::json& doc) {
  Rule r;
  try {
    for (const auto& e : doc.value("endpoints", nlohmann::json::array()))
      r.endpoints.push_back({edge_from_json(e.at("edge")), e.at("labels").get<std::vector<std::string>>()});
    for (const auto& c : doc.value("connections", nlohmann::json::array())) {
      if (!c.is_array() || c.size() != 2) throw BoardError("connection must be a pair of labels");
      r.connections.emplace_back(c[0].get<std::string>(), c[1].get<std::string>());
    }
    for (const auto& l : doc.value("edge_limits", nlohmann::json::array()))
      r.edge_limits.push_back({edge_from_json(l.at("edge")), l.at("max").get<int>()});
  } catch (const nlohmann::json::exception& e) {
    throw BoardError(std::string("malformed rule: ") + e.what());
  }
  return r;
}

nlohmann::json rule_to_json(const Rule& rule) {
  nlohmann::json endpoints = nlohmann::json::array(), connections = nlohmann::json::array(),
                 limits = nlohmann::json::array();
  for (const auto& e : rule.endpoints) endpoints.push_back({{"edge", edge_to_json(e.edge)}, {"labels", e.labels}});
  for (const auto& [a, b] : rule.connections) connections.push_back({a, b});
  for (const auto& l : rule.edge_limits) limits.push_back({{"edge", edge_to_json(l.edge)}, {"max", l.max}});
  return {{"endpoints", endpoints}, {"connections", connections}, {"edge_limits", limits}};
}

}  // namespace schubert::puzzle
