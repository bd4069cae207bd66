#include <set>
#include <sstream>

#include "doctest.h"

#include "chordweave/diagram.hpp"
#include "chordweave/error.hpp"
#include "chordweave/igraph.hpp"
#include "chordweave/oracle.hpp"
#include "chordweave/tree.hpp"

using namespace chordweave;

namespace {

  std::uint64_t double_factorial(int n) {
    std::uint64_t r = 1;
    for (int i = 2 * n - 1; i > 1; i -= 2) {
      r *= i;
    }
    return r;
  }

  std::uint64_t binomial(int n, int k) {
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i) {
      r = r * (n - k + i) / i;
    }
    return r;
  }

  GuardRails open_rails() {
    GuardRails r;
    r.override_limits = true;
    return r;
  }

}  // namespace

TEST_CASE("enumerate_diagrams: hand counts") {
  CHECK(enumerate_diagrams(1, 1).size() == 1);
  CHECK(to_text(enumerate_diagrams(1, 1)[0]) == "components: 1\n1: a a\n");
  CHECK(enumerate_diagrams(2, 1).size() == 3);
  CHECK(enumerate_diagrams(3, 1).size() == 15);
  // {1,1}, {1,2} and {2,2}.
  CHECK(enumerate_diagrams(1, 2).size() == 3);
}

TEST_CASE("enumerate_diagrams: each class exactly once") {
  for (int k = 1; k <= 3; ++k) {
    for (int n = 1; n <= 4; ++n) {
      std::set<std::string> seen;
      std::size_t           count = 0;
      for_each_diagram(n, k, [&](ChordDiagram const& d) {
        REQUIRE(d.degree() == static_cast<std::size_t>(n));
        REQUIRE(d.num_components() == static_cast<std::size_t>(k));
        seen.insert(canonical_diagram(d));
        ++count;
      });
      CHECK(seen.size() == count);
      CHECK(count == double_factorial(n) * binomial(2 * n + k - 1, k - 1));
    }
  }
}

TEST_CASE("sharded enumeration covers the same set") {
  std::set<std::string> whole;
  for_each_diagram(4, 2, [&](ChordDiagram const& d) { whole.insert(canonical_diagram(d)); });
  std::set<std::string> parts;
  for (unsigned s = 0; s < 3; ++s) {
    for_each_diagram(4, 2, [&](ChordDiagram const& d) { parts.insert(canonical_diagram(d)); }, s, 3);
  }
  CHECK(parts == whole);
}

TEST_CASE("census: examples") {
  auto one = census(1, 1, false, 1, open_rails());
  CHECK(one.entries == std::set<std::string>{canonical_tree(parse_tree("vertex v {1,1}"))});

  auto two = census(2, 2, false, 1, open_rails());
  CHECK(two.contains(canonical_tree(parse_tree("vertex a {1,2}\nvertex b {1,2}\nedge a -- b"))));
  for (auto const& e : two.entries) {
    CHECK(e.find('>') == std::string::npos);
    CHECK(e.find('<') == std::string::npos);
  }

  auto chain = census(2, 3, true, 1, open_rails());
  CHECK(chain.contains(canonical_tree(parse_tree("vertex x {1,2}\nvertex y {2,3}\nedge x -> y"))));
  CHECK(chain.connected == chain.diagrams);
}

TEST_CASE("census: parallel runs give identical tables") {
  auto a = census(4, 3, true, 1, open_rails());
  auto b = census(4, 3, true, 3, open_rails());
  CHECK(a.entries == b.entries);
  CHECK(a.diagrams == b.diagrams);
  CHECK(a.tree_producing == b.tree_producing);
}

TEST_CASE("census is monotone in the component count") {
  for (int n = 1; n <= 4; ++n) {
    for (int k = 2; k <= 3; ++k) {
      auto big   = census(n, k, false, 1, open_rails());
      auto small = census(n, k - 1, false, 1, open_rails());
      std::size_t hits = 0;
      for (auto const& t : all_trees(n, 2)) {
        if (static_cast<int>(t.colors().size()) >= k) {
          continue;
        }
        // Every placement of colors 1, 2 among 1..k.
        for (Color a = 1; a <= k; ++a) {
          for (Color b = 1; b <= k; ++b) {
            if (a == b) {
              continue;
            }
            auto placed = recolor(t, {{1, a}, {2, b}});
            if (big.contains(canonical_tree(placed))) {
              ++hits;
              REQUIRE(small.contains(canonical_tree(recolor(placed, dense_colors(placed)))));
            }
          }
        }
      }
      CHECK(hits > 0);
    }
  }
}

TEST_CASE("every enumerated diagram is semisymmetric") {
  for (int k = 1; k <= 3; ++k) {
    for_each_diagram(4, k, [](ChordDiagram const& d) { REQUIRE(is_semisymmetric(gamma(d))); });
  }
}

TEST_CASE("census file roundtrip") {
  auto              t = census(3, 2, false, 1, open_rails());
  std::stringstream s;
  write_census(s, t);
  auto back = read_census(s);
  CHECK(back.entries == t.entries);
  CHECK(back.diagrams == t.diagrams);
  CHECK(back.connected_only == t.connected_only);

  std::stringstream broken("{\"schema\":1}\n");
  CHECK_THROWS_AS((void)read_census(broken), ParseError);
}

TEST_CASE("guard rails") {
  GuardRails r;
  CHECK_NOTHROW(r.check(6, 4));
  CHECK_THROWS_AS(r.check(7, 2), GuardRailError);
  CHECK_THROWS_AS(r.check(3, 5), GuardRailError);
  CHECK_THROWS_AS((void)census(7, 1, false, 1, r), GuardRailError);
  r.override_limits = true;
  CHECK_NOTHROW(r.check(7, 2));
  CHECK_THROWS_AS(r.check(0, 2), ValidationError);
}

TEST_CASE("oracle_recognize: examples") {
  CHECK(oracle_recognize(parse_tree("vertex v {1,1}")));
  CHECK(oracle_recognize(parse_tree("vertex x {1,2}\nvertex y {2,3}\nedge x -> y")));
  CHECK_FALSE(oracle_recognize(parse_tree("vertex x {1,2}\nvertex y {2,3}\nedge x -- y")));
  CHECK_FALSE(oracle_recognize(parse_tree("vertex u {1,1}\nvertex w {2,2}\nedge u -- w")));
  CHECK(oracle_recognize(parse_tree("vertex u {2,2}")));
}

TEST_CASE("oracle: heavy star variant within the default limits") {
  // Two heavy boughs and one light one at c.
  Oracle oracle(open_rails());
  auto   fine = parse_tree("vertex c {1,1}\nvertex u1 {1,1}\nvertex u2 {1,1}\nvertex m1 {1,2}\n"
                             "vertex m2 {1,2}\nvertex m3 {1,2}\nedge c -- u1\nedge c -- u2\n"
                             "edge u1 -- m1\nedge u2 -- m2\nedge c -- m3");
  CHECK(oracle.recognize(fine));
}

TEST_CASE("all_trees") {
  auto ones = all_trees(1, 2);
  CHECK(ones.size() == 3);
  CHECK(all_trees(1, 3).empty());
  std::set<std::string> seen;
  for (auto const& t : all_trees(4, 2)) {
    CHECK(seen.insert(canonical_tree(t)).second);
    CHECK(t.colors().size() <= 2);
  }
  for (auto const& t : all_trees(3, 3)) {
    CHECK(t.colors().size() == 3);
  }
}

TEST_CASE("cross_validate: small cases pass") {
  Oracle oracle(GuardRails{});
  auto   r1 = cross_validate(1, 2, oracle);
  CHECK(r1.trees == 3);
  CHECK(r1.passed());
  CHECK(cross_validate(4, 2, oracle).passed());
  CHECK(cross_validate(4, 3, oracle).passed());
  CHECK_THROWS_AS((void)cross_validate(7, 2, oracle), GuardRailError);
}

TEST_CASE("cross_validate on a supplied family") {
  Oracle oracle(open_rails());
  auto   report = cross_validate({parse_tree("vertex v {1,1}")}, oracle);
  CHECK(report.passed());
  auto j = to_json(report);
  CHECK(j["schema"] == 1);
  CHECK(j["passed"] == true);
}

TEST_CASE("boughs that are shares are light") {
  for (int n = 1; n <= 4; ++n) {
    for_each_diagram(n, 2, [](ChordDiagram const& d) {
      auto t = as_tree(gamma(d));
      if (!t || t->num_marked() == 0) {
        return;
      }
      for (std::size_t v = 0; v < t->size(); ++v) {
        for (auto const& b : boughs(*t, v)) {
          std::set<std::string> s;
          for (auto x : b.vertices) {
            s.insert(t->id(x));
          }
          if (is_share(d, s)) {
            REQUIRE_FALSE(b.heavy);
          }
        }
      }
    });
  }
}

TEST_CASE("a light bough need not be a share") {
  // Both leaves straddle a's one endpoint on component 1, so one encloses the
  // other and the outer leaf's bough at the inner one is split into 3 runs.
  auto t = parse_tree("vertex a {1,2}\nvertex b {1,1}\nvertex c {1,1}\nedge a -- b\nedge a -- c");
  std::size_t found = 0;
  for_each_diagram(3, 2, [&](ChordDiagram const& d) {
    auto g = as_tree(gamma(d));
    if (!g || !tree_iso(*g, t)) {
      return;
    }
    ++found;
    std::size_t shares = 0;
    for (std::size_t v = 0; v < g->size(); ++v) {
      if (g->label(v).marked()) {
        continue;
      }
      auto bs = boughs(*g, v);
      REQUIRE(bs.size() == 1);
      REQUIRE_FALSE(bs[0].heavy);
      std::set<std::string> s;
      for (auto x : bs[0].vertices) {
        s.insert(g->id(x));
      }
      shares += is_share(d, s) ? 1 : 0;
    }
    CHECK(shares == 1);
  });
  CHECK(found > 0);
}
