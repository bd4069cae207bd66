#include "chordweave/igraph.hpp"

#include <algorithm>

#include "chordweave/error.hpp"

namespace chordweave {

  std::string_view to_string(EdgeState s) noexcept {
    switch (s) {
      case EdgeState::none:
        return "none";
      case EdgeState::forward:
        return "forward";
      case EdgeState::backward:
        return "backward";
      case EdgeState::undirected:
        return "undirected";
    }
    return "none";
  }

  std::optional<EdgeState> edge_state_from_string(std::string_view s) noexcept {
    for (auto st : {EdgeState::none, EdgeState::forward, EdgeState::backward, EdgeState::undirected}) {
      if (to_string(st) == s) {
        return st;
      }
    }
    return std::nullopt;
  }

  IntersectionGraph::IntersectionGraph(std::vector<Vertex> vertices, std::vector<GraphEdge> edges)
      : _vertices(std::move(vertices)), _edges() {
    for (auto e : edges) {
      if (e.a >= _vertices.size() || e.b >= _vertices.size()) {
        throw ValidationError("edge endpoint out of range");
      }
      if (e.a == e.b) {
        throw ValidationError("self-edge on `" + _vertices[e.a].id + "`");
      }
      if (e.state == EdgeState::none) {
        continue;
      }
      if (e.a > e.b) {
        e = {e.b, e.a, reversed(e.state)};
      }
      _edges.push_back(e);
    }
    std::sort(_edges.begin(), _edges.end(), [](auto const& x, auto const& y) {
      return std::tie(x.a, x.b) < std::tie(y.a, y.b);
    });
    for (std::size_t i = 1; i < _edges.size(); ++i) {
      if (_edges[i].a == _edges[i - 1].a && _edges[i].b == _edges[i - 1].b) {
        throw ValidationError("repeated edge between `" + _vertices[_edges[i].a].id + "` and `"
                              + _vertices[_edges[i].b].id + "`");
      }
    }
  }

  EdgeState IntersectionGraph::state(std::size_t i, std::size_t j) const {
    bool flip = i > j;
    auto lo   = std::min(i, j);
    auto hi   = std::max(i, j);
    auto it   = std::lower_bound(_edges.begin(), _edges.end(), lo, [](auto const& e, std::size_t v) {
      return e.a < v;
    });
    for (; it != _edges.end() && it->a == lo; ++it) {
      if (it->b == hi) {
        return flip ? reversed(it->state) : it->state;
      }
    }
    return EdgeState::none;
  }

  std::optional<std::size_t> IntersectionGraph::find(std::string_view id) const {
    for (std::size_t i = 0; i < _vertices.size(); ++i) {
      if (_vertices[i].id == id) {
        return i;
      }
    }
    return std::nullopt;
  }

  EndpointTallies raw_tallies(ChordDiagram const& d) {
    EndpointTallies t(d.degree());
    for (Color c = 1; static_cast<std::size_t>(c) <= d.num_components(); ++c) {
      auto seq = d.sequence(c);
      for (std::size_t p = 0; p < seq.size(); ++p) {
        for (std::size_t q = p + 1; q < seq.size(); ++q) {
          if (seq[p] != seq[q]) {
            t.increment(seq[p], seq[q]);
          }
        }
      }
    }
    return t;
  }

  IntersectionGraph gamma(ChordDiagram const& d) {
    auto const          t = raw_tallies(d);
    std::vector<Vertex> vertices;
    vertices.reserve(d.degree());
    for (ChordDiagram::Chord c = 0; c < d.degree(); ++c) {
      vertices.push_back({d.name(c), d.label(c)});
    }
    std::vector<GraphEdge> edges;
    for (std::size_t a = 0; a < d.degree(); ++a) {
      for (std::size_t b = a + 1; b < d.degree(); ++b) {
        bool fwd = t.below(a, b) % 2 == 1;
        bool bwd = t.below(b, a) % 2 == 1;
        if (fwd && bwd) {
          edges.push_back({a, b, EdgeState::undirected});
        } else if (fwd) {
          edges.push_back({a, b, EdgeState::forward});
        } else if (bwd) {
          edges.push_back({a, b, EdgeState::backward});
        }
      }
    }
    return IntersectionGraph(std::move(vertices), std::move(edges));
  }

  int raw_edge_count(LabelPair v, LabelPair w) noexcept {
    return w.occurrences(v.lo()) + w.occurrences(v.hi());
  }

  bool is_semisymmetric(IntersectionGraph const& g) {
    return std::all_of(g.edges().begin(), g.edges().end(), [&g](GraphEdge const& e) {
      return e.state == EdgeState::undirected
             || (g.vertex(e.a).label.marked() && g.vertex(e.b).label.marked());
    });
  }

  namespace {
    std::string tagged(Vertex const& v) {
      return v.id + v.label.to_string();
    }
  }  // namespace

  std::string to_text(IntersectionGraph const& g) {
    std::string out;
    for (auto const& v : g.vertices()) {
      out += tagged(v) + "\n";
    }
    for (auto const& e : g.edges()) {
      auto const& a = g.vertex(e.a);
      auto const& b = g.vertex(e.b);
      switch (e.state) {
        case EdgeState::forward:
          out += tagged(a) + " -> " + tagged(b) + "\n";
          break;
        case EdgeState::backward:
          out += tagged(b) + " -> " + tagged(a) + "\n";
          break;
        default:
          out += tagged(a) + " -- " + tagged(b) + "\n";
          break;
      }
    }
    return out;
  }

  std::string to_dot(IntersectionGraph const& g) {
    if (g.size() == 0) {
      return "digraph { }\n";
    }
    std::string out = "digraph {\n";
    for (auto const& v : g.vertices()) {
      out += "  \"" + v.id + "\" [label=\"" + v.id + ":" + v.label.to_string() + "\"];\n";
    }
    for (auto const& e : g.edges()) {
      auto const& a = g.vertex(e.a).id;
      auto const& b = g.vertex(e.b).id;
      switch (e.state) {
        case EdgeState::forward:
          out += "  \"" + a + "\" -> \"" + b + "\";\n";
          break;
        case EdgeState::backward:
          out += "  \"" + b + "\" -> \"" + a + "\";\n";
          break;
        default:
          out += "  \"" + a + "\" -> \"" + b + "\" [dir=none];\n";
          break;
      }
    }
    out += "}\n";
    return out;
  }

  nlohmann::json to_json(IntersectionGraph const& g) {
    nlohmann::json vertices = nlohmann::json::array();
    for (auto const& v : g.vertices()) {
      vertices.push_back({{"id", v.id}, {"label", {v.label.lo(), v.label.hi()}}});
    }
    nlohmann::json edges = nlohmann::json::array();
    for (auto const& e : g.edges()) {
      edges.push_back({{"a", g.vertex(e.a).id},
                       {"b", g.vertex(e.b).id},
                       {"state", std::string(to_string(e.state))}});
    }
    return {{"schema", 1}, {"vertices", vertices}, {"edges", edges}};
  }

}  // namespace chordweave
