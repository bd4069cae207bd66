#ifndef CHORDWEAVE_IGRAPH_HPP_
#define CHORDWEAVE_IGRAPH_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "chordweave/diagram.hpp"
#include "chordweave/label.hpp"

namespace chordweave {

  //! Mod-2 summary of the directed edges between an ordered vertex pair
  //! (a, b): `forward` is a -> b, `backward` is b -> a, `undirected` means one
  //! surviving edge in each direction.
  enum class EdgeState : std::uint8_t { none, forward, backward, undirected };

  //! The same state seen from the other endpoint.
  [[nodiscard]] constexpr EdgeState reversed(EdgeState s) noexcept {
    switch (s) {
      case EdgeState::forward:
        return EdgeState::backward;
      case EdgeState::backward:
        return EdgeState::forward;
      default:
        return s;
    }
  }

  [[nodiscard]] constexpr bool is_directed(EdgeState s) noexcept {
    return s == EdgeState::forward || s == EdgeState::backward;
  }

  [[nodiscard]] std::string_view            to_string(EdgeState s) noexcept;
  [[nodiscard]] std::optional<EdgeState>    edge_state_from_string(std::string_view s) noexcept;

  //! A labeled vertex. Ids reuse the chord names of the source diagram.
  struct Vertex {
    std::string id;
    LabelPair   label;

    bool operator==(Vertex const&) const = default;
  };

  //! Edge between vertex indices a < b; the state is oriented a -> b.
  struct GraphEdge {
    std::size_t a     = 0;
    std::size_t b     = 0;
    EdgeState   state = EdgeState::none;

    bool operator==(GraphEdge const&) const = default;
  };

  //! Labeled directed graph with at most one (four-state) edge per vertex
  //! pair. Self-edges and `none` edges are never stored.
  class IntersectionGraph {
   public:
    IntersectionGraph() = default;
    //! Normalizes every edge to a < b and drops `none` edges. Throws on
    //! out-of-range indices, self-edges, and repeated pairs.
    IntersectionGraph(std::vector<Vertex> vertices, std::vector<GraphEdge> edges);

    [[nodiscard]] std::size_t size() const noexcept {
      return _vertices.size();
    }
    [[nodiscard]] std::vector<Vertex> const& vertices() const noexcept {
      return _vertices;
    }
    [[nodiscard]] Vertex const& vertex(std::size_t i) const {
      return _vertices.at(i);
    }
    //! Sorted by (a, b).
    [[nodiscard]] std::vector<GraphEdge> const& edges() const noexcept {
      return _edges;
    }
    //! Edge state oriented from i to j.
    [[nodiscard]] EdgeState state(std::size_t i, std::size_t j) const;
    [[nodiscard]] std::optional<std::size_t> find(std::string_view id) const;

    bool operator==(IntersectionGraph const&) const = default;

   private:
    std::vector<Vertex>    _vertices;
    std::vector<GraphEdge> _edges;
  };

  //! Raw directed-edge tallies before mod-2 cancellation:
  //! `below(a, b)` counts endpoint pairs (e of a, f of b) on a common
  //! component with e below f.
  class EndpointTallies {
   public:
    explicit EndpointTallies(std::size_t n) : _n(n), _counts(n * n, 0) {}

    [[nodiscard]] std::size_t size() const noexcept {
      return _n;
    }
    [[nodiscard]] unsigned below(std::size_t a, std::size_t b) const {
      return _counts[a * _n + b];
    }
    void increment(std::size_t a, std::size_t b) {
      ++_counts[a * _n + b];
    }

   private:
    std::size_t           _n;
    std::vector<unsigned> _counts;
  };

  [[nodiscard]] EndpointTallies raw_tallies(ChordDiagram const& d);

  //! The intersection graph: one vertex per chord, mod-2 directed edges
  //! between chords sharing a component.
  [[nodiscard]] IntersectionGraph gamma(ChordDiagram const& d);

  //! Number of directed edges between chords with these labels before
  //! cancellation: occurrences of v's colors in w's label, summed.
  [[nodiscard]] int raw_edge_count(LabelPair v, LabelPair w) noexcept;

  //! Every vertex labeled {i,i} has only undirected incident edges.
  [[nodiscard]] bool is_semisymmetric(IntersectionGraph const& g);

  //! One `name{i,j}` line per vertex, then one line per edge:
  //! `a{1,1} -- b{1,1}` or `x{1,2} -> y{2,3}`.
  [[nodiscard]] std::string    to_text(IntersectionGraph const& g);
  [[nodiscard]] std::string    to_dot(IntersectionGraph const& g);
  [[nodiscard]] nlohmann::json to_json(IntersectionGraph const& g);

}  // namespace chordweave

#endif  // CHORDWEAVE_IGRAPH_HPP_
