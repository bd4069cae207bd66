#ifndef CHORDWEAVE_TREE_HPP_
#define CHORDWEAVE_TREE_HPP_

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "chordweave/igraph.hpp"
#include "chordweave/label.hpp"

namespace chordweave {

  //! Tree edge between vertex indices; the state is oriented a -> b and is
  //! never `none`.
  struct TreeEdge {
    std::size_t a     = 0;
    std::size_t b     = 0;
    EdgeState   state = EdgeState::undirected;

    bool operator==(TreeEdge const&) const = default;
  };

  //! Adjacency entry; `state` is oriented from the owning vertex.
  struct Neighbor {
    std::size_t vertex = 0;
    EdgeState   state  = EdgeState::undirected;
  };

  //! Labeled directed tree: the underlying undirected graph is connected and
  //! acyclic, with at most one edge per vertex pair.
  class DLTree {
   public:
    //! Validates ids, labels, and tree shape; throws ValidationError naming
    //! the first defect (self-loop, repeated edge, cycle, disconnected).
    DLTree(std::vector<Vertex> vertices, std::vector<TreeEdge> edges);

    [[nodiscard]] std::size_t size() const noexcept {
      return _vertices.size();
    }
    [[nodiscard]] std::vector<Vertex> const& vertices() const noexcept {
      return _vertices;
    }
    [[nodiscard]] std::string const& id(std::size_t v) const {
      return _vertices.at(v).id;
    }
    [[nodiscard]] LabelPair label(std::size_t v) const {
      return _vertices.at(v).label;
    }
    [[nodiscard]] bool marked(std::size_t v) const {
      return label(v).marked();
    }
    [[nodiscard]] std::vector<TreeEdge> const& edges() const noexcept {
      return _edges;
    }
    [[nodiscard]] std::span<Neighbor const> neighbors(std::size_t v) const {
      return _adjacency.at(v);
    }
    [[nodiscard]] std::size_t degree(std::size_t v) const {
      return _adjacency.at(v).size();
    }
    //! State oriented u -> v, or `none` if not adjacent.
    [[nodiscard]] EdgeState state(std::size_t u, std::size_t v) const;
    [[nodiscard]] bool adjacent(std::size_t u, std::size_t v) const {
      return state(u, v) != EdgeState::none;
    }
    [[nodiscard]] std::optional<std::size_t> find(std::string_view id) const;
    //! Like find, but throws ValidationError for unknown ids.
    [[nodiscard]] std::size_t index_of(std::string_view id) const;
    //! Distinct colors used by the labels.
    [[nodiscard]] std::set<Color> colors() const;
    [[nodiscard]] std::size_t     num_marked() const;

   private:
    std::vector<Vertex>                _vertices;
    std::vector<TreeEdge>              _edges;
    std::vector<std::vector<Neighbor>> _adjacency;
  };

  //! Parses the `.tree` format:
  //!
  //!     vertex a {1,2}
  //!     vertex b {2,3}
  //!     edge a -> b      # also `a <- b` and `a -- b`
  //!
  //! `#` comments and blank lines are ignored.
  [[nodiscard]] DLTree parse_tree(std::string_view text);
  //! Parses the JSON mirror `{"vertices":[{"id","label":[i,j]}],
  //! "edges":[{"a","b","state"}]}`.
  [[nodiscard]] DLTree tree_from_json(nlohmann::json const& j);

  [[nodiscard]] std::string    to_text(DLTree const& t);
  [[nodiscard]] nlohmann::json to_json(DLTree const& t);

  //! The graph as a DLTree, if it is a tree.
  [[nodiscard]] std::optional<DLTree> as_tree(IntersectionGraph const& g);
  [[nodiscard]] IntersectionGraph     as_graph(DLTree const& t);

  //! Applies a color substitution to every label. Colors missing from the
  //! map are kept.
  [[nodiscard]] DLTree recolor(DLTree const& t, std::map<Color, Color> const& mapping);
  //! Maps the used colors onto 1..c preserving order.
  [[nodiscard]] std::map<Color, Color> dense_colors(DLTree const& t);
  //! The subtree induced on a connected vertex subset, in the given order.
  [[nodiscard]] DLTree induced_subtree(DLTree const& t, std::span<std::size_t const> vertices);

  //! A connected component of T minus its anchor vertex.
  //!
  //! It is *light* when it holds at most one marked vertex and that vertex,
  //! if present, is adjacent to the anchor; otherwise it is *heavy*.
  struct Bough {
    std::size_t              anchor = 0;
    std::size_t              root   = 0;  // the bough's neighbor of the anchor
    std::vector<std::size_t> vertices;    // sorted
    bool                     heavy = false;
  };

  //! The deg(v) boughs of v, ordered by the id of their root.
  [[nodiscard]] std::vector<Bough> boughs(DLTree const& t, std::size_t v);

  //! Unique path between two vertices, both included.
  [[nodiscard]] std::vector<std::size_t> tree_path(DLTree const& t, std::size_t from, std::size_t to);

  //! Longest path whose two ends are marked; ties go to the lexicographically
  //! smallest id sequence. A single marked vertex is its own spine, and a tree
  //! without marked vertices has an empty spine.
  [[nodiscard]] std::vector<std::size_t> spine(DLTree const& t);

  //! Encoding equal for two trees iff a bijection preserves labels and
  //! oriented edge states.
  [[nodiscard]] std::string canonical_tree(DLTree const& t);
  [[nodiscard]] bool        tree_iso(DLTree const& x, DLTree const& y);

}  // namespace chordweave

#endif  // CHORDWEAVE_TREE_HPP_
