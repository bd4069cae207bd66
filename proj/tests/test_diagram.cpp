#include <set>
#include <string>
#include <vector>

#include "doctest.h"

#include "chordweave/diagram.hpp"
#include "chordweave/error.hpp"
#include "chordweave/oracle.hpp"

using namespace chordweave;

namespace {

  // Every way to cover exactly the slots of `chords` with at most two
  // closed slot ranges. Independent of the run count used by is_share.
  bool share_by_arc_search(ChordDiagram const& d, std::set<ChordDiagram::Chord> const& chords) {
    std::set<std::pair<Color, std::size_t>> target;
    for (auto c : chords) {
      for (auto const& e : d.endpoints(c)) {
        target.insert({e.component, e.position});
      }
    }
    std::vector<Arc> arcs;
    for (Color c = 1; c <= static_cast<Color>(d.num_components()); ++c) {
      auto len = d.sequence(c).size();
      for (std::size_t s = 0; s < len; ++s) {
        for (std::size_t e = s; e < len; ++e) {
          arcs.push_back({c, s, e});
        }
      }
    }
    auto covers = [&](std::vector<Arc const*> const& use) {
      std::set<std::pair<Color, std::size_t>> got;
      for (auto const* a : use) {
        for (auto p = a->start; p <= a->end; ++p) {
          got.insert({a->component, p});
        }
      }
      return got == target;
    };
    for (std::size_t i = 0; i < arcs.size(); ++i) {
      if (covers({&arcs[i]})) {
        return true;
      }
      for (std::size_t j = i + 1; j < arcs.size(); ++j) {
        if (covers({&arcs[i], &arcs[j]})) {
          return true;
        }
      }
    }
    return false;
  }

}  // namespace

TEST_CASE("parse: smallest diagram") {
  auto d = parse_diagram("components: 1\n1: a a");
  CHECK(d.num_components() == 1);
  CHECK(d.degree() == 1);
}

TEST_CASE("parse: two crossing marked chords") {
  auto const text = "components: 2\n1: a b\n2: b a\n";
  auto       d    = parse_diagram(text);
  CHECK(d.num_components() == 2);
  CHECK(d.degree() == 2);
  CHECK(d.label(0).marked());
  CHECK(d.label(1).marked());
  CHECK(to_text(d) == text);
}

TEST_CASE("parse: errors") {
  CHECK_THROWS_WITH_AS(parse_diagram("components: 1\n1: a"), doctest::Contains("chord `a` has 1 endpoint"),
                       ParseError);
  CHECK_THROWS_AS(parse_diagram("components: 1\n1: a a a"), ParseError);
  CHECK_THROWS_AS(parse_diagram("components: 2\n1: a\n1: a"), ParseError);
  CHECK_THROWS_AS(parse_diagram("components: 2\n1: a a"), ParseError);
  CHECK_THROWS_AS(parse_diagram("components: 1\n2: a a"), ParseError);
  CHECK_THROWS_AS(parse_diagram("1: a a"), ParseError);
  CHECK_THROWS_AS(parse_diagram("components: 1\n1: a- a-"), ParseError);
  try {
    (void)parse_diagram("components: 1\n\n1: a b a\n");
    FAIL("expected a parse error");
  } catch (ParseError const& e) {
    CHECK(e.line() == 3);
  }
}

TEST_CASE("parse: comments, blank lines, any component order") {
  auto d = parse_diagram("# header\ncomponents: 2\n\n2: a b  # tail\n1: b a\n");
  CHECK(d.named_components() == std::vector<std::vector<std::string>>{{"b", "a"}, {"a", "b"}});
}

TEST_CASE("parse: empty component") {
  auto d = parse_diagram("components: 2\n1: a a\n2:\n");
  CHECK(d.sequence(2).empty());
  CHECK(parse_diagram(to_text(d)) == d);
}

TEST_CASE("json mirror") {
  auto d = parse_diagram("components: 2\n1: a b\n2: b a\n");
  CHECK(diagram_from_json(to_json(d)) == d);
  CHECK(to_json(d)["components"] == nlohmann::json::parse(R"([["a","b"],["b","a"]])"));
  CHECK_THROWS_AS(diagram_from_json(nlohmann::json::parse(R"({"components": [["a"]]})")), Error);
}

TEST_CASE("chord_label") {
  CHECK(chord_label(parse_diagram("components: 1\n1: a a"), "a") == LabelPair(1, 1));
  CHECK(chord_label(parse_diagram("components: 2\n1: a b\n2: b a"), "b") == LabelPair(1, 2));
  CHECK(chord_label(parse_diagram("components: 3\n1: x\n2: x y\n3: y"), "y") == LabelPair(2, 3));
  CHECK_THROWS_AS((void)chord_label(parse_diagram("components: 1\n1: a a"), "z"), ValidationError);
}

TEST_CASE("is_connected and connection_graph") {
  CHECK(is_connected(parse_diagram("components: 1\n1: a a")));
  CHECK_FALSE(is_connected(parse_diagram("components: 2\n1: a a\n2: b b")));
  auto chain = parse_diagram("components: 3\n1: x\n2: x y\n3: y");
  CHECK(is_connected(chain));
  auto g = connection_graph(chain);
  CHECK(g.edges() == std::vector<std::pair<Color, Color>>{{1, 2}, {2, 3}});
  CHECK(g.hamiltonian_path() == std::vector<Color>{1, 2, 3});

  auto single = connection_graph(parse_diagram("components: 1\n1: a a"));
  CHECK(single.n_colors() == 1);
  CHECK(single.num_edges() == 0);

  auto parallel = connection_graph(parse_diagram("components: 2\n1: a b\n2: a b"));
  CHECK(parallel.edges() == std::vector<std::pair<Color, Color>>{{1, 2}});
}

TEST_CASE("is_share: examples") {
  CHECK(is_share(parse_diagram("components: 1\n1: a a b b"), {"a"}));
  // Two single-slot runs: a share.
  CHECK(is_share(parse_diagram("components: 1\n1: a b a b"), {"a"}));
  CHECK(is_share(parse_diagram("components: 2\n1: a b\n2: b a"), {"b"}));
  // Three runs.
  CHECK_FALSE(is_share(parse_diagram("components: 1\n1: a b c b a c"), {"a", "c"}));
  CHECK(is_share(parse_diagram("components: 1\n1: a b a c b c"), {"a"}));
  CHECK_THROWS_AS((void)is_share(parse_diagram("components: 1\n1: a a"), std::set<std::string>{}),
                  ValidationError);
}

TEST_CASE("is_share agrees with exhaustive arc search") {
  std::size_t checked = 0;
  for (int k = 1; k <= 2; ++k) {
    for (int n = 1; n <= 4; ++n) {
      for_each_diagram(n, k, [&](ChordDiagram const& d) {
        for (unsigned mask = 1; mask < (1u << n); ++mask) {
          std::set<ChordDiagram::Chord>    s;
          std::vector<ChordDiagram::Chord> v;
          for (int c = 0; c < n; ++c) {
            if (mask & (1u << c)) {
              s.insert(c);
              v.push_back(c);
            }
          }
          REQUIRE(is_share(d, v) == share_by_arc_search(d, s));
          ++checked;
        }
      });
    }
  }
  CHECK(checked > 10000);
}

TEST_CASE("canonical_diagram") {
  CHECK(canonical_diagram(parse_diagram("components: 1\n1: a b a b"))
        == canonical_diagram(parse_diagram("components: 1\n1: b a b a")));
  CHECK(canonical_diagram(parse_diagram("components: 1\n1: a a b b"))
        != canonical_diagram(parse_diagram("components: 1\n1: a b a b")));
  CHECK(canonical_diagram(parse_diagram("components: 2\n1: a b\n2: a b"))
        == canonical_diagram(parse_diagram("components: 2\n2: a b\n1: a b")));
  // Colors are not permuted.
  CHECK(canonical_diagram(parse_diagram("components: 2\n1: a a\n2:"))
        != canonical_diagram(parse_diagram("components: 2\n1:\n2: a a")));
}

TEST_CASE("slot count and serialization roundtrip over small diagrams") {
  for (int k = 1; k <= 3; ++k) {
    for (int n = 1; n <= 3; ++n) {
      for_each_diagram(n, k, [&](ChordDiagram const& d) {
        std::size_t slots = 0;
        for (Color c = 1; c <= k; ++c) {
          slots += d.sequence(c).size();
        }
        REQUIRE(slots == 2 * d.degree());
        REQUIRE(parse_diagram(to_text(d)) == d);
        REQUIRE(connection_graph(d).is_connected() == is_connected(d));
      });
    }
  }
}
