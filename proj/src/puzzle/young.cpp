#include "schubert/puzzle/young.hpp"

#include <map>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace schubert::puzzle {

namespace {

char family(const std::string& label) { return label.empty() ? '\0' : label[0]; }

// Rules name entry points by family letter; exits take any other letter.
bool labels_in(const Rule& rule, const std::string& families, const std::string& exits) {
  for (const auto& [a, b] : rule.connections) {
    if (families.find(family(a)) == std::string::npos) return false;
    if (exits.find(family(b)) == std::string::npos) return false;
  }
  return !rule.connections.empty();
}

}  // namespace

const char* lemma_status_name(LemmaStatus s) noexcept {
  switch (s) {
    case LemmaStatus::Pass: return "pass";
    case LemmaStatus::Fail: return "fail";
    case LemmaStatus::Vacuous: return "vacuous";
    case LemmaStatus::Inapplicable: return "inapplicable";
  }
  return "?";
}

std::string forced_tile_name(int which) {
  if (which == 1) return "trivial";
  if (which == 2) return "bump";
  throw std::invalid_argument("lemma must be 1 or 2");
}

nlohmann::json YoungReport::to_json() const {
  return {{"lemma", which},       {"status", lemma_status_name(status)}, {"forced_tile", forced_tile},
          {"solutions", solutions}, {"violations", violations},          {"note", note}};
}

YoungReport verify_young_lemma(const Board& board, const Rule& rule, const TileCatalog& catalog,
                               const std::vector<int>& region, int which) {
  YoungReport rep;
  rep.which = which;
  rep.forced_tile = forced_tile_name(which);
  for (int c : region)
    if (c < 0 || c >= static_cast<int>(board.cells.size())) throw std::invalid_argument("region cell out of range");
  if (region.empty()) {
    rep.status = LemmaStatus::Vacuous;
    rep.note = "empty region";
    return rep;
  }

  const bool shaped = which == 1 ? labels_in(rule, "p", "t") : labels_in(rule, "pq", "te");
  if (!shaped) {
    rep.status = LemmaStatus::Inapplicable;
    rep.note = which == 1 ? "rule has pipes other than the p family" : "rule is not made of p and q families";
    return rep;
  }

  const std::vector<Solution> sols = solve(board, rule, catalog);
  rep.solutions = static_cast<int>(sols.size());

  if (which == 2) {
    // The families must not meet: no p pipe and q pipe share a crossing cell.
    for (const Solution& s : sols) {
      std::map<std::pair<int, int>, char> fam;
      for (const TracedPipe& p : s.pipes)
        for (std::size_t step = 0; step < p.cells.size(); ++step) fam[{p.cells[step], p.strands[step]}] = family(p.source_label);
      for (std::size_t c = 0; c < board.cells.size(); ++c)
        for (auto [a, b] : catalog.tiles[s.tiles[c]].crossings) {
          const int cell = static_cast<int>(c);
          if (fam[{cell, a}] != fam[{cell, b}]) {
            rep.status = LemmaStatus::Inapplicable;
            rep.note = "p and q pipes cross";
            return rep;
          }
        }
    }
  }

  for (std::size_t si = 0; si < sols.size(); ++si)
    for (int c : region) {
      const TileDef& t = catalog.tiles[sols[si].tiles[c]];
      if (t.name != rep.forced_tile)
        rep.violations.push_back("solution " + std::to_string(si) + " cell " + std::to_string(c) + ": " + t.name);
    }
  rep.status = rep.violations.empty() ? LemmaStatus::Pass : LemmaStatus::Fail;
  if (sols.empty()) rep.note = "rule has no solution";
  return rep;
}

}  // namespace schubert::puzzle
