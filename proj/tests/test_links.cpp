#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "doctest.h"

#include "cx2/links.hpp"

using namespace cx2;

namespace {

Word W(const char* s) { return parse_word(s); }

CombinatorialDescription D(std::initializer_list<const char*> words) {
  CombinatorialDescription d;
  for (const char* s : words) d.relators.push_back(parse_word(s));
  return d;
}

CombinatorialDescription random_description(std::mt19937& rng,
                                            int max_relators, int max_len,
                                            int num_gens) {
  CombinatorialDescription d;
  int count = 1 + static_cast<int>(rng() % max_relators);
  while (static_cast<int>(d.relators.size()) < count) {
    Word w;
    int len = 1 + static_cast<int>(rng() % max_len);
    for (int i = 0; i < len; ++i) {
      w.letters.push_back({static_cast<char>('a' + rng() % num_gens),
                           rng() % 2 ? 1 : -1});
    }
    w = cyclic_reduce(w);
    if (!w.empty()) d.relators.push_back(w);
  }
  return d;
}

// Corners of a link, tagged by (face, position), grouped by the component
// of the ends they join.
std::map<int, std::set<std::pair<int, int>>> corners_by_component(
    const LinkGraph& link) {
  std::map<int, std::set<std::pair<int, int>>> by;
  for (const LinkGraph::Corner& c : link.corners) {
    by[link.component[c.a]].insert({c.face, c.position});
  }
  return by;
}

}  // namespace

TEST_SUITE("links") {

TEST_CASE("the one-vertex torus has a circle link") {
  TwoComplex x = standard_complex(Presentation{{'a', 'b'}, {W("abAB")}});
  LinkGraph link = vertex_link(x, 0);
  CHECK(link.vertex == 0);
  CHECK(link.ends.size() == 4);
  CHECK(link.corners.size() == 4);
  CHECK(link.component_count == 1);
  CHECK(link.connected());
  CHECK(is_link_connected(x));
}

TEST_CASE("ends are sorted by edge and end") {
  TwoComplex x = standard_complex(Presentation{{'a', 'b'}, {W("abAB")}});
  LinkGraph link = vertex_link(x, 0);
  REQUIRE(link.ends.size() == 4);
  CHECK(link.ends[0] == LinkGraph::End{0, 0});
  CHECK(link.ends[1] == LinkGraph::End{0, 1});
  CHECK(link.ends[2] == LinkGraph::End{1, 0});
  CHECK(link.ends[3] == LinkGraph::End{1, 1});
}

TEST_CASE("the hexagon relator leaves two link components") {
  TwoComplex x =
      standard_complex(Presentation{{'a', 'b', 'c'}, {W("abcABC")}});
  LinkGraph link = vertex_link(x, 0);
  CHECK(link.ends.size() == 6);
  CHECK(link.corners.size() == 6);
  CHECK(link.component_count == 2);
  CHECK(!is_link_connected(x));
  // Heads fall in one component, tails in the other.
  std::map<int, int> size;
  for (std::size_t i = 0; i < link.ends.size(); ++i) ++size[link.component[i]];
  CHECK(size[0] == 3);
  CHECK(size[1] == 3);
}

TEST_CASE("the projective plane link is one doubled edge") {
  TwoComplex x = description_complex(D({"aa"}));
  LinkGraph link = vertex_link(x, 0);
  CHECK(link.ends.size() == 2);
  CHECK(link.corners.size() == 2);
  CHECK(link.component_count == 1);
}

TEST_CASE("two-vertex torus splits corners evenly") {
  TwoComplex x = description_complex(D({"abcABC"}));
  std::size_t corner_total = 0;
  for (int v = 0; v < x.vertex_count; ++v) {
    LinkGraph link = vertex_link(x, v);
    CHECK(link.ends.size() == 3);
    CHECK(link.corners.size() == 3);
    CHECK(link.component_count == 1);
    corner_total += link.corners.size();
  }
  CHECK(corner_total == 6);  // one corner per face-boundary step
}

TEST_CASE("closed surface detection") {
  CHECK(is_closed_surface(D({"abAB"})));
  CHECK(is_closed_surface(D({"aa"})));
  CHECK(is_closed_surface(D({"aA"})));
  CHECK(is_closed_surface(D({"abcABC"})));
  CHECK(is_closed_surface(D({"aabb"})));  // the Klein bottle
  // Letter used once: boundary left exposed.
  CHECK(!is_closed_surface(D({"ab"})));
  // Letters used four times: not a surface gluing.
  CHECK(!is_closed_surface(D({"aa", "aa"})));
  CHECK(!is_closed_surface(D({"abAB", "aB"})));
}

TEST_CASE("every complete edge pairing closes up into a surface") {
  // Classical fact: gluing polygon sides in pairs always yields a closed
  // surface; the minimal vertex identifications force circle links.
  std::mt19937 rng(31337);
  for (int trial = 0; trial < 200; ++trial) {
    int letters = 1 + static_cast<int>(rng() % 4);
    std::vector<Letter> sides;
    for (int g = 0; g < letters; ++g) {
      for (int rep = 0; rep < 2; ++rep) {
        sides.push_back({static_cast<char>('a' + g), rng() % 2 ? 1 : -1});
      }
    }
    std::shuffle(sides.begin(), sides.end(), rng);
    int polygons = 1 + static_cast<int>(rng() % 2);
    polygons = std::min<int>(polygons, static_cast<int>(sides.size()));
    CombinatorialDescription d;
    d.relators.assign(polygons, Word{});
    for (std::size_t i = 0; i < sides.size(); ++i) {
      d.relators[i % polygons].letters.push_back(sides[i]);
    }
    CHECK(is_closed_surface(d));
  }
}

TEST_CASE("factorization fibers match link components") {
  // One-vertex hexagon: its description rebuilds the two-vertex torus, and
  // the fiber over the single vertex is both torus vertices.
  TwoComplex x =
      standard_complex(Presentation{{'a', 'b', 'c'}, {W("abcABC")}});
  LinkFactorization fact = link_quotient_factorization(x);
  CHECK(fact.y.vertex_count == 2);
  REQUIRE(fact.fibers.size() == 1);
  CHECK(fact.fibers[0] == std::vector<int>{0, 1});
  CHECK(is_link_connected(fact.y));
  CHECK(is_isomorphic(fact.y, description_complex(D({"abcABC"}))));
}

TEST_CASE("factorization of a link-connected complex is trivial") {
  TwoComplex x = description_complex(D({"abAB"}));
  LinkFactorization fact = link_quotient_factorization(x);
  CHECK(fact.y.vertex_count == 1);
  CHECK(fact.fibers == std::vector<std::vector<int>>{{0}});
  CHECK(is_isomorphic(fact.y, x));
}

TEST_CASE("the double-bigon factorization peels a sphere apart") {
  TwoComplex x =
      standard_complex(Presentation{{'a', 'b'}, {W("aB"), W("aB")}});
  LinkGraph link = vertex_link(x, 0);
  CHECK(link.component_count == 2);
  LinkFactorization fact = link_quotient_factorization(x);
  CHECK(fact.y.vertex_count == 2);
  CHECK(fact.fibers == std::vector<std::vector<int>>{{0, 1}});
  CHECK(euler_characteristic(fact.y) == 2);  // the bigon sphere
}

TEST_CASE("fibers carry whole link components, corner for corner") {
  // The corners at a y-vertex must be exactly the corners of one link
  // component of the x-vertex below it.
  for (const auto& p :
       {Presentation{{'a', 'b', 'c'}, {W("abcABC")}},
        Presentation{{'a', 'b'}, {W("aB"), W("aB")}},
        Presentation{{'a', 'b'}, {W("abAB")}}}) {
    TwoComplex x = standard_complex(p);
    LinkFactorization fact = link_quotient_factorization(x);
    for (int u = 0; u < x.vertex_count; ++u) {
      auto x_partition = corners_by_component(vertex_link(x, u));
      std::set<std::set<std::pair<int, int>>> expected;
      for (auto& [comp, corners] : x_partition) expected.insert(corners);
      std::set<std::set<std::pair<int, int>>> got;
      for (int yv : fact.fibers[u]) {
        LinkGraph ylink = vertex_link(fact.y, yv);
        std::set<std::pair<int, int>> corners;
        for (const LinkGraph::Corner& c : ylink.corners) {
          corners.insert({c.face, c.position});
        }
        got.insert(corners);
      }
      CHECK(expected == got);
    }
  }
}

TEST_CASE("link DOT output") {
  TwoComplex x = description_complex(D({"aa"}));
  CHECK(to_dot(vertex_link(x, 0)) ==
        "graph link_v0 {\n"
        "  \"e0.t\";\n"
        "  \"e0.h\";\n"
        "  \"e0.h\" -- \"e0.t\" [label=\"f0@0\"];\n"
        "  \"e0.h\" -- \"e0.t\" [label=\"f0@1\"];\n"
        "}\n");
}

TEST_CASE("description complexes are always link-connected") {
  std::mt19937 rng(777);
  for (int trial = 0; trial < 200; ++trial) {
    CombinatorialDescription d = random_description(rng, 4, 8, 4);
    TwoComplex x = description_complex(d);
    CHECK(is_link_connected(x));
    // Corner count invariant: every face-boundary step deposits exactly
    // one corner at its target vertex.
    std::size_t corners = 0;
    for (int v = 0; v < x.vertex_count; ++v) {
      corners += vertex_link(x, v).corners.size();
    }
    std::size_t steps = 0;
    for (const auto& f : x.faces) steps += f.size();
    CHECK(corners == steps);
  }
}

}  // TEST_SUITE
