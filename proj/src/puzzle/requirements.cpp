#include "schubert/puzzle/requirements.hpp"

#include <nlohmann/json.hpp>

#include "schubert/pipe_dream.hpp"
#include "schubert/puzzle/builders.hpp"
#include "schubert/puzzle/ybe.hpp"

namespace schubert::puzzle {

bool check_r1(const TileCatalog& catalog) {
  const std::vector<int> diamonds = catalog.tiles_with(Orientation::Diamond);
  if (diamonds.size() != std::size(kAllBpdTiles)) return false;
  for (BpdTile kind : kAllBpdTiles) {
    const TileDef want = diamond_tile(kind);
    int hits = 0;
    for (int d : diamonds)
      if (same_wiring(want, catalog.tiles[d]) && catalog.tiles[d].valued == want.valued) ++hits;
    if (hits != 1) return false;
  }
  return true;
}

bool check_r2(const TileCatalog& catalog) {
  constexpr int n = 3;
  const Board board = pd_board(n, Weighting::Double);
  for (const Permutation& w : all_permutations(n)) {
    Polynomial expected;
    for (const PipeDream& pd : enumerate_pds(w, n)) expected += pd_weight_double(pd);
    if (value(board, pd_rule(w, n), catalog) != expected) return false;
  }
  return true;
}

bool check_r3(const TileCatalog& catalog) { return ybe_check(catalog, 1, ybe_valuation(1)).passed(); }

RequirementTags check_requirements(const TileCatalog& catalog) {
  return {check_r1(catalog), check_r2(catalog), check_r3(catalog)};
}

TileCatalog load_catalog_strict(const nlohmann::json& document) {
  TileCatalog c = load_catalog(document);
  if (!check_r1(c)) throw CatalogError(-1, "catalog fails R1: diamond tiles are not the six BPD tiles");
  if (!check_r2(c)) throw CatalogError(-1, "catalog fails R2: pipe-dream board values differ from pipe-dream sums");
  if (!check_r3(c)) throw CatalogError(-1, "catalog fails R3: Yang-Baxter check with constraints does not pass");
  return c;
}

}  // namespace schubert::puzzle
