// Arrow sets at the vertex about to be mutated in S', per the ten case
// figures, with the row reflection for negative t and s.
#pragma once

#include <map>
#include <optional>
#include <string>

#include "hlcluster/heights.hpp"
#include "hlcluster/hl.hpp"

namespace hlc {

struct CasePrediction {
    int case_id = 0;
    bool mirrored = false;
    std::string vertex;
    // neighbor -> signed multiplicity, positive = vertex -> neighbor
    std::map<std::string, int> incidence;
};

// Prediction for the arrows at (j, r+s) in Q^s_xi[i_1, j]. Vertices outside
// rows 1..ell+1 or columns 1..n are dropped. nullopt when no case applies.
std::optional<CasePrediction> appendix_prediction(const GhlSpec& spec, const HeightFunction& xi, int j, int s,
                                                  int ell);

}  // namespace hlc
