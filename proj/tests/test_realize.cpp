#include <random>

#include "doctest.h"

#include "chordweave/diagram.hpp"
#include "chordweave/error.hpp"
#include "chordweave/igraph.hpp"
#include "chordweave/realize.hpp"
#include "chordweave/recognize.hpp"
#include "chordweave/sample.hpp"
#include "chordweave/tree.hpp"

using namespace chordweave;

namespace {

  bool realizes(ChordDiagram const& d, DLTree const& t) {
    auto g = as_tree(gamma(d));
    return g && tree_iso(*g, t);
  }

  // Edge states among the chords of `old`, looked up by name in `now`.
  void require_unchanged(ChordDiagram const& old, ChordDiagram const& now) {
    auto g = gamma(old);
    auto h = gamma(now);
    for (std::size_t a = 0; a < old.degree(); ++a) {
      for (std::size_t b = a + 1; b < old.degree(); ++b) {
        REQUIRE(h.state(*h.find(old.name(a)), *h.find(old.name(b))) == g.state(a, b));
      }
    }
  }

  std::vector<std::size_t> path_of(DLTree const& t) {
    std::vector<std::size_t> p(t.size());
    std::iota(p.begin(), p.end(), 0);
    return p;
  }

  constexpr char const* three_path = "vertex m1 {1,2}\nvertex u {1,1}\nvertex m2 {1,2}\n"
                                     "edge m1 -- u\nedge u -- m2\n";

}  // namespace

TEST_CASE("barbell_word and realize_unmarked") {
  auto one = parse_tree("vertex v {1,1}");
  CHECK(to_text(realize_unmarked(one, 0)) == "components: 1\n1: v v\n");

  auto ab = parse_tree("vertex a {1,1}\nvertex b {1,1}\nedge a -- b");
  CHECK(barbell_word(ab, 0) == std::vector<std::string>{"a", "b", "a", "b"});
  CHECK(realizes(realize_unmarked(ab, 0), ab));

  auto star = parse_tree("vertex a {1,1}\nvertex b {1,1}\nvertex c {1,1}\nedge a -- b\nedge a -- c");
  CHECK(barbell_word(star, 0) == std::vector<std::string>{"a", "b", "c", "a", "c", "b"});
  CHECK(realizes(realize_unmarked(star, 0), star));

  CHECK_THROWS_AS((void)realize_unmarked(parse_tree("vertex a {1,2}"), 0), ValidationError);
  CHECK_THROWS_AS((void)realize_unmarked(parse_tree("vertex a {1,1}\nvertex b {2,2}\nedge a -- b"), 0),
                  ValidationError);
}

TEST_CASE("realize_unmarked on random unmarked trees") {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 100; ++i) {
    std::size_t           n = 1 + rng() % 20;
    std::vector<Vertex>   vs;
    std::vector<TreeEdge> es;
    for (std::size_t v = 0; v < n; ++v) {
      vs.push_back({"n" + std::to_string(v), LabelPair(1, 1)});
      if (v > 0) {
        es.push_back({rng() % v, v, EdgeState::undirected});
      }
    }
    DLTree t(vs, es);
    REQUIRE(realizes(realize_unmarked(t, rng() % n), t));
  }
}

TEST_CASE("realize_spine") {
  auto single = parse_tree("vertex m {1,2}");
  CHECK(to_text(realize_spine(single, path_of(single))) == "components: 2\n1: m\n2: m\n");

  auto p = parse_tree(three_path);
  auto d = realize_spine(p, path_of(p));
  CHECK(realizes(d, p));

  auto marked = parse_tree("vertex x1 {1,2}\nvertex x2 {1,2}\nvertex x3 {1,2}\n"
                           "edge x1 -- x2\nedge x2 -- x3");
  CHECK(realizes(realize_spine(marked, path_of(marked)), marked));

  // Equal unmarked labels around a single marked vertex cannot both meet it.
  auto bad = parse_tree("vertex m1 {1,2}\nvertex u {1,1}\nvertex x {1,2}\nvertex w {1,1}\n"
                        "vertex m2 {1,2}\nedge m1 -- u\nedge u -- x\nedge x -- w\nedge w -- m2");
  CHECK_THROWS_AS((void)realize_spine(bad, path_of(bad)), RealizationError);
}

TEST_CASE("attach_rib") {
  auto p     = parse_tree(three_path);
  auto d     = realize_spine(p, path_of(p));
  auto spine = std::vector<std::string>{"m1", "u", "m2"};

  auto r = attach_rib(d, spine, "u", "w");
  require_unchanged(d, r);
  auto g = gamma(r);
  auto w = *g.find("w");
  for (std::size_t v = 0; v < g.size(); ++v) {
    if (v != w) {
      CHECK(g.state(v, w) == (g.vertex(v).id == "u" ? EdgeState::undirected : EdgeState::none));
    }
  }

  auto r2 = attach_rib(r, spine, "u", "w2");
  require_unchanged(r, r2);
  auto g2 = gamma(r2);
  CHECK(g2.state(*g2.find("w"), *g2.find("w2")) == EdgeState::none);
  CHECK(g2.state(*g2.find("u"), *g2.find("w2")) == EdgeState::undirected);

  CHECK_THROWS_AS((void)attach_rib(d, spine, "m1", "w"), ValidationError);
  CHECK_THROWS_AS((void)attach_rib(d, spine, "u", "m2"), ValidationError);
}

TEST_CASE("attach_barbell") {
  auto d = parse_diagram("components: 2\n1: t\n2: t");
  auto v = parse_tree("vertex v {1,1}");
  CHECK(to_text(attach_barbell(d, "t", 1, v, 0)) == "components: 2\n1: v t v\n2: t\n");

  auto vx = parse_tree("vertex v {1,1}\nvertex x {1,1}\nedge v -- x");
  auto e  = attach_barbell(d, "t", 1, vx, 0);
  require_unchanged(d, e);
  CHECK(realizes(e, parse_tree("vertex t {1,2}\nvertex v {1,1}\nvertex x {1,1}\n"
                               "edge t -- v\nedge v -- x")));

  auto lone = parse_diagram("components: 2\n1: t t\n2:");
  CHECK_THROWS_AS((void)attach_barbell(lone, "t", 2, parse_tree("vertex v {2,2}"), 0),
                  ValidationError);
  CHECK_THROWS_AS((void)attach_barbell(d, "t", 1, parse_tree("vertex v {2,2}"), 0), ValidationError);
  CHECK_THROWS_AS((void)attach_barbell(d, "t", 1, parse_tree("vertex t {1,1}"), 0), ValidationError);
}

TEST_CASE("several barbells on one chord stay apart") {
  auto d = parse_diagram("components: 2\n1: t\n2: t");
  d      = attach_barbell(d, "t", 1, parse_tree("vertex a {1,1}\nvertex b {1,1}\nedge a -- b"), 0);
  d      = attach_barbell(d, "t", 1, parse_tree("vertex c {1,1}"), 0);
  d      = attach_barbell(d, "t", 2, parse_tree("vertex e {2,2}"), 0);
  CHECK(realizes(d, parse_tree("vertex t {1,2}\nvertex a {1,1}\nvertex b {1,1}\nvertex c {1,1}\n"
                               "vertex e {2,2}\nedge t -- a\nedge a -- b\nedge t -- c\nedge t -- e")));
}

TEST_CASE("realize_2") {
  auto one = parse_tree("vertex v {1,1}");
  auto d1  = realize_2(one, recognize(one));
  CHECK(to_text(d1) == "components: 2\n1: v v\n2:\n");

  auto five = parse_tree("vertex m1 {1,2}\nvertex v {1,1}\nvertex x {1,2}\nvertex w {2,2}\n"
                         "vertex m2 {1,2}\nedge m1 -- v\nedge v -- x\nedge x -- w\nedge w -- m2");
  CHECK(realizes(realize_2(five, recognize(five)), five));

  // Spine, a rib on its interior, and barbells on the spine and the rib.
  auto composite = parse_tree("vertex m1 {1,2}\nvertex u {1,1}\nvertex m2 {1,2}\nvertex r {1,2}\n"
                              "vertex b1 {2,2}\nvertex b2 {1,1}\nvertex b3 {1,1}\n"
                              "edge m1 -- u\nedge u -- m2\nedge u -- r\nedge r -- b1\n"
                              "edge u -- b2\nedge b2 -- b3");
  auto v = recognize(composite);
  REQUIRE(v.accepted);
  CHECK(realizes(realize_2(composite, v), composite));

  CHECK_THROWS_AS((void)realize_2(parse_tree("vertex u {1,1}\nvertex w {2,2}\nedge u -- w"),
                                  recognize(parse_tree("vertex u {1,1}\nvertex w {2,2}\nedge u -- w"))),
                  ValidationError);
}

TEST_CASE("realize_multi") {
  auto xy = parse_tree("vertex x {1,2}\nvertex y {2,3}\nedge x -> y");
  CHECK(to_text(realize_multi(xy, recognize(xy))) == "components: 3\n1: x\n2: x y\n3: y\n");

  auto xyx = parse_tree("vertex x {1,2}\nvertex y {2,3}\nvertex xp {1,2}\nedge x -> y\nedge y -> xp");
  auto d   = realize_multi(xyx, recognize(xyx));
  CHECK(d.named_components()[1] == std::vector<std::string>{"x", "y", "xp"});
  CHECK(realizes(d, xyx));

  auto leaf = parse_tree("vertex x {1,2}\nvertex y {2,3}\nvertex u {2,2}\nedge x -> y\nedge y -- u");
  auto dl   = realize_multi(leaf, recognize(leaf));
  CHECK(realizes(dl, leaf));
  CHECK(gamma(dl).state(*gamma(dl).find("y"), *gamma(dl).find("u")) == EdgeState::undirected);
}

TEST_CASE("realize: component count and dispatch") {
  auto one = parse_tree("vertex v {1,1}");
  CHECK(realize(one).num_components() == 1);
  auto sparse = parse_tree("vertex a {3,3}\nvertex b {3,5}\nedge a -- b");
  auto d      = realize(sparse);
  CHECK(d.num_components() == 5);
  CHECK(realizes(d, sparse));
  auto skip = parse_tree("vertex x {1,2}\nvertex y {2,4}\nedge x -> y");
  CHECK(realize(skip).num_components() == 4);
  CHECK(realizes(realize(skip), skip));
  CHECK_THROWS_AS((void)realize(parse_tree("vertex u {1,1}\nvertex w {2,2}\nedge u -- w")),
                  ValidationError);
}

TEST_CASE("roundtrip on random accepted trees") {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 200; ++i) {
    auto t = i % 2 ? random_two_color_tree(rng, 30) : random_multi_color_tree(rng, 30, 6);
    REQUIRE(recognize(t).accepted);
    auto d = realize(t);
    REQUIRE(d.degree() == t.size());
    REQUIRE(d.num_components() == static_cast<std::size_t>(*t.colors().rbegin()));
    REQUIRE(realizes(d, t));
  }
}
