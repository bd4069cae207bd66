#ifndef CHORDWEAVE_RECOGNIZE_HPP_
#define CHORDWEAVE_RECOGNIZE_HPP_

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "chordweave/label.hpp"
#include "chordweave/tree.hpp"

namespace chordweave {

  //! Evidence attached to a verdict, by vertex id.
  struct Witness {
    std::vector<std::string>                         vertices;
    std::vector<std::pair<std::string, std::string>> edges;
    std::vector<std::vector<std::string>>            boughs;
    std::vector<std::string>                         spine;

    [[nodiscard]] bool empty() const noexcept {
      return vertices.empty() && edges.empty() && boughs.empty() && spine.empty();
    }
  };

  //! Outcome of recognition.
  //!
  //! `reason` is a stable identifier: `T3.1`, `T3.2` or `T3.3` on
  //! acceptance, and `T3.1`, `T3.2-condN` or `T3.3-condN` naming the first
  //! violated condition on rejection.
  struct Verdict {
    bool        accepted = false;
    std::string reason;
    std::string detail;
    Witness     witness;
    //! Input color -> dense color 1..c.
    std::map<Color, Color> color_map;
    //! Three or more colors, accepted: the input colors in path order, so
    //! color_order[p] is relabeled as p + 1.
    std::vector<Color> color_order;
    //! Three or more colors, accepted: the number of vertices labeled
    //! {p, p + 1} after relabeling, for p = 1..c-1.
    std::vector<std::size_t> multiplicities;
  };

  //! Marked-tree test on at most two colors: every vertex has at most two
  //! heavy boughs. Edge directions are ignored. Throws ValidationError on
  //! more than two colors.
  [[nodiscard]] Verdict check_marked_2(DLTree const& t);

  //! Labeled test on at most two colors:
  //! (0) every edge undirected, (1) check_marked_2 accepts, (2) adjacent
  //! unmarked vertices share their label, (3) along the spine, two unmarked
  //! vertices have equal labels iff an even number of marked vertices lies
  //! strictly between them.
  [[nodiscard]] Verdict check_labeled_2(DLTree const& t);

  struct ColorPath {
    std::vector<Color> order;    // empty on failure
    std::string        failure;  // why no path exists
    std::vector<Color> offending;

    explicit operator bool() const noexcept {
      return !order.empty();
    }
  };

  //! The graph on the used colors with an edge per marked label must be a
  //! path through all of them; returns it starting at the smaller endpoint.
  [[nodiscard]] ColorPath color_path(DLTree const& t);

  //! Test for three or more colors, after relabeling colors along the color
  //! path: (1) adjacent labels share a color, (2) semisymmetry, (3) vertices
  //! {i,j} and {i,k} with i, j, k distinct are joined by a directed edge,
  //! (4) no label {i,j} with |i - j| > 1, (5) exactly one {i,i+1} vertex for
  //! 2 <= i <= n-2, (6) no undirected path joins two marked vertices.
  [[nodiscard]] Verdict check_multi(DLTree const& t);

  //! Dispatches on the number of colors used.
  [[nodiscard]] Verdict recognize(DLTree const& t);

  [[nodiscard]] nlohmann::json to_json(Verdict const& v);
  //! Multi-line explanation for terminal output.
  [[nodiscard]] std::string explain(Verdict const& v);

}  // namespace chordweave

#endif  // CHORDWEAVE_RECOGNIZE_HPP_
