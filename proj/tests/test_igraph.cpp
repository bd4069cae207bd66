#include <algorithm>
#include <random>

#include "doctest.h"

#include "chordweave/diagram.hpp"
#include "chordweave/error.hpp"
#include "chordweave/igraph.hpp"
#include "chordweave/oracle.hpp"
#include "chordweave/sample.hpp"

using namespace chordweave;

namespace {

  IntersectionGraph g_of(char const* text) {
    return gamma(parse_diagram(text));
  }

  EdgeState state_by_name(IntersectionGraph const& g, char const* a, char const* b) {
    return g.state(*g.find(a), *g.find(b));
  }

  ChordDiagram reversed_components(ChordDiagram const& d) {
    auto comps = d.named_components();
    for (auto& c : comps) {
      std::reverse(c.begin(), c.end());
    }
    return ChordDiagram(comps);
  }

}  // namespace

TEST_CASE("gamma: one chord") {
  auto g = g_of("components: 1\n1: a a");
  CHECK(g.size() == 1);
  CHECK(g.vertex(0).label == LabelPair(1, 1));
  CHECK(g.edges().empty());
}

TEST_CASE("gamma: crossing, disjoint, nested") {
  CHECK(state_by_name(g_of("components: 1\n1: a b a b"), "a", "b") == EdgeState::undirected);
  CHECK(g_of("components: 1\n1: a a b b").edges().empty());
  CHECK(g_of("components: 1\n1: a b b a").edges().empty());
}

TEST_CASE("gamma: parallel and crossing marked chords") {
  CHECK(g_of("components: 2\n1: a b\n2: a b").edges().empty());
  CHECK(state_by_name(g_of("components: 2\n1: a b\n2: b a"), "a", "b") == EdgeState::undirected);
}

TEST_CASE("gamma: directed edge on a shared component") {
  auto g = g_of("components: 3\n1: x\n2: x y\n3: y");
  REQUIRE(g.edges().size() == 1);
  CHECK(state_by_name(g, "x", "y") == EdgeState::forward);
  CHECK(state_by_name(g, "y", "x") == EdgeState::backward);
  CHECK(to_text(g) == "x{1,2}\ny{2,3}\nx{1,2} -> y{2,3}\n");
}

TEST_CASE("raw_edge_count") {
  CHECK(raw_edge_count(LabelPair(1, 1), LabelPair(2, 2)) == 0);
  CHECK(raw_edge_count(LabelPair(1, 2), LabelPair(2, 3)) == 1);
  CHECK(raw_edge_count(LabelPair(1, 1), LabelPair(1, 1)) == 4);
  CHECK(raw_edge_count(LabelPair(1, 2), LabelPair(1, 2)) == 2);
  CHECK(raw_edge_count(LabelPair(1, 1), LabelPair(1, 2)) == 2);
}

TEST_CASE("is_semisymmetric") {
  CHECK(is_semisymmetric(g_of("components: 1\n1: a b a b")));
  IntersectionGraph bad({{"v", LabelPair(1, 1)}, {"w", LabelPair(1, 2)}},
                        {{0, 1, EdgeState::forward}});
  CHECK_FALSE(is_semisymmetric(bad));
  CHECK(is_semisymmetric(IntersectionGraph{}));
}

TEST_CASE("graph construction rejects self and repeated edges") {
  std::vector<Vertex> vs{{"a", LabelPair(1, 1)}, {"b", LabelPair(1, 1)}};
  CHECK_THROWS_AS(IntersectionGraph(vs, {{0, 0, EdgeState::undirected}}), ValidationError);
  CHECK_THROWS_AS(IntersectionGraph(vs, {{0, 1, EdgeState::undirected}, {1, 0, EdgeState::forward}}),
                  ValidationError);
}

TEST_CASE("to_dot") {
  CHECK(to_dot(IntersectionGraph{}) == "digraph { }\n");
  CHECK(to_dot(g_of("components: 1\n1: a b a b"))
        == "digraph {\n  \"a\" [label=\"a:{1,1}\"];\n  \"b\" [label=\"b:{1,1}\"];\n"
           "  \"a\" -> \"b\" [dir=none];\n}\n");
  auto dot = to_dot(g_of("components: 3\n1: x\n2: x y\n3: y"));
  CHECK(dot.find("\"x\" -> \"y\";") != std::string::npos);
  CHECK(dot.find("dir=none") == std::string::npos);
}

TEST_CASE("to_json") {
  auto j = to_json(g_of("components: 3\n1: x\n2: x y\n3: y"));
  CHECK(j["schema"] == 1);
  CHECK(j["vertices"][1]["id"] == "y");
  CHECK(j["vertices"][1]["label"] == nlohmann::json::array({2, 3}));
  CHECK(j["edges"][0]["state"] == "forward");
}

TEST_CASE("edge state strings") {
  for (auto s : {EdgeState::forward, EdgeState::backward, EdgeState::undirected}) {
    CHECK(edge_state_from_string(to_string(s)) == s);
  }
  CHECK_FALSE(edge_state_from_string("sideways").has_value());
}

TEST_CASE("properties over every small diagram") {
  for (int k = 1; k <= 3; ++k) {
    for (int n = 1; n <= 4; ++n) {
      for_each_diagram(n, k, [&](ChordDiagram const& d) {
        auto g = gamma(d);
        REQUIRE(is_semisymmetric(g));
        auto tallies = raw_tallies(d);
        for (std::size_t a = 0; a < d.degree(); ++a) {
          for (std::size_t b = a + 1; b < d.degree(); ++b) {
            REQUIRE(static_cast<int>(tallies.below(a, b) + tallies.below(b, a))
                    == raw_edge_count(d.label(a), d.label(b)));
            if (k <= 2) {
              REQUIRE_FALSE(is_directed(g.state(a, b)));
            }
          }
        }
        // Reversing every component swaps forward and backward.
        auto r = gamma(reversed_components(d));
        for (std::size_t a = 0; a < d.degree(); ++a) {
          for (std::size_t b = 0; b < d.degree(); ++b) {
            if (a != b) {
              auto ra = *r.find(d.name(a));
              auto rb = *r.find(d.name(b));
              REQUIRE(r.state(ra, rb) == reversed(g.state(a, b)));
            }
          }
        }
      });
    }
  }
}

TEST_CASE("gamma is invariant under chord renaming") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    auto d     = random_diagram(rng, 8, 4);
    auto names = d.names();
    auto fresh = names;
    std::shuffle(fresh.begin(), fresh.end(), rng);
    std::map<std::string, std::string> rename;
    for (std::size_t i = 0; i < names.size(); ++i) {
      rename[names[i]] = "r" + fresh[i];
    }
    auto comps = d.named_components();
    for (auto& c : comps) {
      for (auto& x : c) {
        x = rename[x];
      }
    }
    auto g = gamma(d);
    auto h = gamma(ChordDiagram(comps));
    for (std::size_t a = 0; a < d.degree(); ++a) {
      REQUIRE(h.vertex(*h.find(rename[d.name(a)])).label == d.label(a));
      for (std::size_t b = a + 1; b < d.degree(); ++b) {
        REQUIRE(h.state(*h.find(rename[d.name(a)]), *h.find(rename[d.name(b)])) == g.state(a, b));
      }
    }
  }
}
