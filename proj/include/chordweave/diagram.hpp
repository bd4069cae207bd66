#ifndef CHORDWEAVE_DIAGRAM_HPP_
#define CHORDWEAVE_DIAGRAM_HPP_

#include <array>
#include <cstddef>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"

#include "chordweave/label.hpp"

namespace chordweave {

  //! Chord names are nonempty tokens over [A-Za-z0-9_].
  [[nodiscard]] bool is_valid_name(std::string_view name) noexcept;

  //! One endpoint slot: a component and a 0-based position, bottom = 0.
  struct Endpoint {
    Color       component = 1;
    std::size_t position  = 0;

    auto operator<=>(Endpoint const&) const = default;
  };

  //! Closed, contiguous range of slots on one component.
  struct Arc {
    Color       component = 1;
    std::size_t start     = 0;
    std::size_t end       = 0;

    auto operator<=>(Arc const&) const = default;
  };

  //! Simple undirected graph on the colors 1..n.
  class ColorGraph {
   public:
    explicit ColorGraph(int n_colors = 0);

    void add_edge(Color a, Color b);

    [[nodiscard]] int n_colors() const noexcept {
      return _n;
    }
    [[nodiscard]] bool adjacent(Color a, Color b) const;
    [[nodiscard]] std::size_t degree(Color c) const;
    [[nodiscard]] std::vector<Color> neighbors(Color c) const;
    //! Edges as (lo, hi) pairs in increasing order.
    [[nodiscard]] std::vector<std::pair<Color, Color>> edges() const;
    [[nodiscard]] std::size_t num_edges() const noexcept {
      return _edges.size();
    }
    //! Connected as a graph on all n colors. A single color is connected.
    [[nodiscard]] bool is_connected() const;
    //! The colors in path order if the graph is a path through every color,
    //! starting at the smaller endpoint.
    [[nodiscard]] std::optional<std::vector<Color>> hamiltonian_path() const;

    bool operator==(ColorGraph const&) const = default;

   private:
    int                             _n;
    std::set<std::pair<Color, Color>> _edges;
  };

  //! A string-link chord diagram: k ordered components carrying n chords,
  //! every chord occupying exactly two endpoint slots.
  //!
  //! Chords are indexed in order of first appearance when the components are
  //! scanned in index order, bottom to top. Values are immutable.
  class ChordDiagram {
   public:
    using Chord = std::size_t;

    //! Validates: k >= 1, names well formed, every name used exactly twice.
    explicit ChordDiagram(std::vector<std::vector<std::string>> components);

    [[nodiscard]] std::size_t num_components() const noexcept {
      return _sequences.size();
    }
    //! Number of chords.
    [[nodiscard]] std::size_t degree() const noexcept {
      return _names.size();
    }
    //! Chord indices on component c (1-based), bottom to top.
    [[nodiscard]] std::span<Chord const> sequence(Color c) const;
    [[nodiscard]] std::string const& name(Chord c) const {
      return _names.at(c);
    }
    [[nodiscard]] std::vector<std::string> const& names() const noexcept {
      return _names;
    }
    [[nodiscard]] std::optional<Chord> find(std::string_view name) const;
    //! Like find, but throws ValidationError for unknown names.
    [[nodiscard]] Chord index_of(std::string_view name) const;
    //! Both endpoints of c, ordered by (component, position).
    [[nodiscard]] std::array<Endpoint, 2> const& endpoints(Chord c) const {
      return _endpoints.at(c);
    }
    [[nodiscard]] LabelPair label(Chord c) const;
    //! Components as chord-name sequences.
    [[nodiscard]] std::vector<std::vector<std::string>> named_components() const;

    friend bool operator==(ChordDiagram const& x, ChordDiagram const& y) {
      return x._names == y._names && x._sequences == y._sequences;
    }

   private:
    std::vector<std::string>             _names;
    std::vector<std::vector<Chord>>      _sequences;
    std::vector<std::array<Endpoint, 2>> _endpoints;
  };

  //! Parses the `.cd` text format:
  //!
  //!     components: 2
  //!     1: a b
  //!     2: b a
  //!
  //! Blank lines and `#` comments are ignored. Component lines may appear in
  //! any order but each index 1..k exactly once.
  [[nodiscard]] ChordDiagram parse_diagram(std::string_view text);
  //! Parses `{"components": [["a","b"],["b","a"]]}`.
  [[nodiscard]] ChordDiagram diagram_from_json(nlohmann::json const& j);

  [[nodiscard]] std::string    to_text(ChordDiagram const& d);
  [[nodiscard]] nlohmann::json to_json(ChordDiagram const& d);

  //! Colors of the components carrying the two endpoints of the named chord.
  [[nodiscard]] LabelPair chord_label(ChordDiagram const& d, std::string_view chord);

  [[nodiscard]] ColorGraph connection_graph(ChordDiagram const& d);
  [[nodiscard]] bool       is_connected(ChordDiagram const& d);

  //! True iff the endpoints of the given chords can be covered by two arcs
  //! that contain no endpoint of any other chord. The chords must be a
  //! nonempty subset of d's chords.
  [[nodiscard]] bool is_share(ChordDiagram const& d, std::set<std::string> const& chords);
  [[nodiscard]] bool is_share(ChordDiagram const& d, std::span<ChordDiagram::Chord const> chords);

  //! Encoding invariant under chord renaming. Components are not permuted.
  [[nodiscard]] std::string canonical_diagram(ChordDiagram const& d);

}  // namespace chordweave

#endif  // CHORDWEAVE_DIAGRAM_HPP_
