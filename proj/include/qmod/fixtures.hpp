#pragma once

#include <string>
#include <vector>

#include "qmod/quiver.hpp"

namespace qmod {

struct FixtureDef {
  std::string name;
  Quiver quiver;
  std::vector<LinearRelation> relations;
};

// Registry: "example-2.8", "example-3.5(N)" with N >= 1, "kA(M)" with M >= 1.
// Throws std::invalid_argument on unknown names.
FixtureDef fixture(const std::string& name);

// 1 <- 2 <- ... <- m with arrows alpha_i : i+1 -> i.
Quiver build_linear_opposite(int m);

}  // namespace qmod
