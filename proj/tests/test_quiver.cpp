#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "qmod/quiver.hpp"

using namespace qmod;

namespace {

long long binom(int a, int b) {
  if (b < 0 || b > a) return 0;
  long long r = 1;
  for (int i = 0; i < b; ++i) r = r * (a - i) / (i + 1);
  return r;
}

}  // namespace

TEST_CASE("build_linear_am") {
  CHECK(build_linear_am(1).num_vertices() == 1);
  CHECK(build_linear_am(1).num_arrows() == 0);
  Quiver a2 = build_linear_am(2);
  REQUIRE(a2.num_arrows() == 1);
  CHECK(a2.arrow(0).source == 0);
  CHECK(a2.arrow(0).target == 1);
  Quiver a4 = build_linear_am(4);
  CHECK(a4.num_vertices() == 4);
  for (int i = 0; i < 3; ++i) {
    CHECK(a4.arrow(i).source == i);
    CHECK(a4.arrow(i).target == i + 1);
  }
  CHECK_THROWS_AS(build_linear_am(0), std::invalid_argument);
}

TEST_CASE("iyama vertex counts") {
  for (int m = 1; m <= 6; ++m)
    for (int n = 1; n <= 6; ++n)
      CHECK(build_iyama_quiver(m, n).quiver.num_vertices() == binom(m + n - 1, n));
}

TEST_CASE("Q_2^4 is the linear quiver with consecutive zero relations") {
  IyamaQuiver q = build_iyama_quiver(2, 4);
  REQUIRE(q.quiver.num_vertices() == 5);
  std::vector<std::string> labels{"1234", "1235", "1245", "1345", "2345"};
  for (int v = 0; v < 5; ++v) CHECK(q.quiver.vertex_label(v) == labels[v]);
  REQUIRE(q.quiver.num_arrows() == 4);
  for (const Arrow& a : q.quiver.arrows()) CHECK(a.target == a.source + 1);
  REQUIRE(q.relations.size() == 3);
  for (const LinearRelation& rel : q.relations) {
    REQUIRE(rel.terms.size() == 1);
    CHECK(rel.terms[0].path.length() == 2);
  }
}

TEST_CASE("relation shapes and the composition-order convention at (3,2)") {
  IyamaQuiver q = build_iyama_quiver(3, 2);
  for (const LinearRelation& rel : q.relations) {
    REQUIRE((rel.terms.size() == 1 || rel.terms.size() == 2));
    for (const RelationTerm& t : rel.terms) CHECK(t.path.length() == 2);
    if (rel.terms.size() == 2) {
      CHECK(rel.terms[0].coeff == 1);
      CHECK(rel.terms[1].coeff == -1);
    }
  }
  // rho_12 at x = (1,3): the composite a_2(x+e_1)a_1(x) - a_1(x+e_2)a_2(x) is
  // stored with a_1(13) applied first in the +1 term: 13 -> 23 -> 24
  int v13 = q.quiver.vertex_by_label("13");
  int v23 = q.quiver.vertex_by_label("23");
  int v14 = q.quiver.vertex_by_label("14");
  int v24 = q.quiver.vertex_by_label("24");
  REQUIRE(v13 >= 0);
  REQUIRE(v24 >= 0);
  bool found = false;
  for (const LinearRelation& rel : q.relations) {
    if (rel.terms.size() != 2) continue;
    const PathWord& p = rel.terms[0].path;
    if (p.source != v13 || p.target != v24) continue;
    found = true;
    CHECK(q.quiver.arrow(p.arrows[0]).source == v13);
    CHECK(q.quiver.arrow(p.arrows[0]).target == v23);
    CHECK(q.quiver.arrow(p.arrows[1]).source == v23);
    CHECK(q.quiver.arrow(p.arrows[1]).target == v24);
    // the -1 term routes through 14
    const PathWord& p2 = rel.terms[1].path;
    CHECK(q.quiver.arrow(p2.arrows[0]).target == v14);
  }
  CHECK(found);
}

TEST_CASE("every (x, {i,j}) pair emits at most one generator") {
  IyamaQuiver q = build_iyama_quiver(3, 3);
  std::set<std::pair<int, int>> seen;  // (source vertex, target vertex of length-2 span)
  for (const LinearRelation& rel : q.relations) {
    auto key = std::make_pair(rel.terms[0].path.source, rel.terms[0].path.target);
    CHECK(!seen.count(key));
    seen.insert(key);
  }
}

TEST_CASE("split_iyama partitions vertices and arrows") {
  for (auto [m, n] : std::vector<std::pair<int, int>>{{3, 3}, {2, 4}}) {
    IyamaSplit s = split_iyama(m, n);
    IyamaQuiver big = build_iyama_quiver(m, n);
    IyamaQuiver up_ref = build_iyama_quiver(m, n - 1);
    IyamaQuiver low_ref = build_iyama_quiver(m - 1, n);
    CHECK(s.upper.num_vertices() == up_ref.quiver.num_vertices());
    CHECK(s.lower.num_vertices() == low_ref.quiver.num_vertices());
    CHECK(s.upper.num_arrows() == up_ref.quiver.num_arrows());
    CHECK(s.lower.num_arrows() == low_ref.quiver.num_arrows());
    CHECK(s.upper.num_arrows() + s.lower.num_arrows() +
              static_cast<int>(s.connecting_arrows.size()) ==
          big.quiver.num_arrows());
    // connecting arrows go from x_n = m+n-2 to x_n = m+n-1
    for (int aid : s.connecting_arrows) {
      const Arrow& a = big.quiver.arrow(aid);
      CHECK(big.coords[a.source].back() == m + n - 2);
      CHECK(big.coords[a.target].back() == m + n - 1);
    }
  }
  IyamaSplit s33 = split_iyama(3, 3);
  CHECK(s33.upper.num_vertices() == 6);
  CHECK(s33.lower.num_vertices() == 4);
  CHECK(s33.connecting_arrows.size() == 3);
}

TEST_CASE("find_induced_cycles") {
  CHECK(find_induced_cycles(build_linear_am(4), 3).empty());
  CHECK(find_induced_cycles(build_linear_am(4), 4).empty());

  Quiver square;
  for (int i = 0; i < 4; ++i) square.add_vertex(std::to_string(i));
  square.add_arrow(0, 1, "a");
  square.add_arrow(0, 2, "b");
  square.add_arrow(1, 3, "c");
  square.add_arrow(2, 3, "d");
  auto cyc = find_induced_cycles(square, 4);
  REQUIRE(cyc.size() == 1);
  CHECK(cyc[0] == std::vector<int>{0, 1, 2, 3});
}

TEST_CASE("Q_4^3 contains the six-cycle witness") {
  IyamaQuiver q = build_iyama_quiver(4, 3);
  std::set<int> want;
  for (const char* lab : {"146", "136", "236", "145", "245", "235"})
    want.insert(q.quiver.vertex_by_label(lab));
  REQUIRE(!want.count(-1));
  bool found = false;
  for (const auto& cyc : find_induced_cycles(q.quiver, 6))
    if (std::set<int>(cyc.begin(), cyc.end()) == want) found = true;
  CHECK(found);
}

TEST_CASE("opposite") {
  Quiver a2 = build_linear_am(2);
  Quiver op = opposite(a2);
  CHECK(op.arrow(0).source == 1);
  CHECK(op.arrow(0).target == 0);
  Quiver opop = opposite(op);
  CHECK(opop.arrow(0).source == a2.arrow(0).source);
  CHECK(opop.arrow(0).target == a2.arrow(0).target);

  IyamaQuiver q24 = build_iyama_quiver(2, 4);
  Quiver q24op = opposite(q24.quiver);
  for (const Arrow& a : q24op.arrows()) CHECK(a.source == a.target + 1);
}

TEST_CASE("path words and relations validate") {
  Quiver a3 = build_linear_am(3);
  PathWord p = make_path(a3, 0, {0, 1});
  CHECK(p.source == 0);
  CHECK(p.target == 2);
  CHECK_THROWS_AS(make_path(a3, 0, {1}), std::invalid_argument);
  LinearRelation bad{{{1, make_path(a3, 0, {0})}}};
  CHECK_THROWS_AS(validate_relation(a3, bad), std::invalid_argument);
}

TEST_CASE("dot export is deterministic and labeled") {
  Quiver a2 = build_linear_am(2);
  std::string dot = a2.to_dot();
  CHECK(dot == a2.to_dot());
  CHECK(dot.find("v0 -> v1") != std::string::npos);
  CHECK(dot.find("label=\"a1\"") != std::string::npos);
}
