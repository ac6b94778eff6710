#include "qmod/fixtures.hpp"

#include <stdexcept>

namespace qmod {

Quiver build_linear_opposite(int m) {
  if (m < 1) throw std::invalid_argument("build_linear_opposite: m >= 1 required");
  Quiver q;
  for (int i = 1; i <= m; ++i) q.add_vertex(std::to_string(i));
  for (int i = 1; i < m; ++i) q.add_arrow(i, i - 1, "alpha" + std::to_string(i));
  return q;
}

namespace {

// zero relation alpha_i alpha_{i+1} = 0: the path i+2 -> i+1 -> i
LinearRelation consecutive_zero(const Quiver& q, int i) {
  LinearRelation rel;
  rel.terms.push_back({1, make_path(q, i + 1, {i, i - 1})});
  return rel;
}

FixtureDef example_28() {
  FixtureDef f;
  f.name = "example-2.8";
  f.quiver = build_linear_opposite(7);
  for (int i : {1, 2, 4, 5}) f.relations.push_back(consecutive_zero(f.quiver, i));
  return f;
}

FixtureDef example_35(int n) {
  if (n < 1) throw std::invalid_argument("example-3.5(n): n >= 1 required");
  FixtureDef f;
  f.name = "example-3.5(" + std::to_string(n) + ")";
  f.quiver = build_linear_opposite(n + 2);
  for (int i = 1; i <= n; ++i) f.relations.push_back(consecutive_zero(f.quiver, i));
  return f;
}

FixtureDef linear_path_algebra(int m) {
  FixtureDef f;
  f.name = "kA(" + std::to_string(m) + ")";
  f.quiver = build_linear_am(m);
  return f;
}

int parse_arg(const std::string& name, const std::string& prefix) {
  if (name.size() <= prefix.size() + 1 || name.back() != ')') return -1;
  try {
    return std::stoi(name.substr(prefix.size(), name.size() - prefix.size() - 1));
  } catch (const std::exception&) {
    return -1;
  }
}

}  // namespace

FixtureDef fixture(const std::string& name) {
  if (name == "example-2.8") return example_28();
  if (name.rfind("example-3.5(", 0) == 0) {
    int n = parse_arg(name, "example-3.5(");
    if (n >= 1) return example_35(n);
  }
  if (name.rfind("kA(", 0) == 0) {
    int m = parse_arg(name, "kA(");
    if (m >= 1) return linear_path_algebra(m);
  }
  throw std::invalid_argument("unknown fixture: " + name);
}

}  // namespace qmod
