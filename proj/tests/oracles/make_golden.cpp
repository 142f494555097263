// Regenerates tests/golden/profiles.json.
//
// The instances come from the library generators (the golden pins those exact
// graphs by content hash); distances and nu are recomputed here by
// Floyd-Warshall and dense ball averaging.

#include <cstdio>
#include <iostream>

#include "cohomlab/io.hpp"
#include "cohomlab/space.hpp"
#include "oracles.hpp"

namespace {

nlohmann::ordered_json instance(const std::string& name, const cohomlab::FiniteMetricSpace& space,
                                int smax, double R) {
  std::vector<std::pair<int, int>> edges;
  for (const auto& e : *space.edges()) edges.emplace_back(e.u, e.v);
  const oracle::Matrix d = oracle::floyd_warshall(space.size(), edges);
  nlohmann::ordered_json j;
  j["name"] = name;
  j["hash"] = cohomlab::git_blob_hash(cohomlab::dump_json(cohomlab::space_to_json(space)));
  j["n"] = space.size();
  j["R"] = R;
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (int s = 1; s <= smax; ++s) {
    const double nu = oracle::nu_ball_average(d, s, R);
    char hex[64];
    std::snprintf(hex, sizeof hex, "%a", nu);
    rows.push_back({{"S", s}, {"nu", nu}, {"nu_hex", hex}});
  }
  j["profile"] = std::move(rows);
  return j;
}

}  // namespace

int main() {
  nlohmann::ordered_json out;
  out["builder"] = "ball_average";
  out["instances"] = {
      instance("torus 12x12", cohomlab::torus(2, 12), 5, 1.0),
      instance("random_regular(128,3,seed=11)", cohomlab::random_regular(128, 3, 11), 5, 1.0)};
  std::cout << out.dump(2) << "\n";
  return 0;
}
