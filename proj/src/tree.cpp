#include "chordweave/tree.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>

#include "chordweave/error.hpp"
#include "text.hpp"

namespace chordweave {

  namespace {

    class UnionFind {
     public:
      explicit UnionFind(std::size_t n) : _parent(n) {
        std::iota(_parent.begin(), _parent.end(), 0);
      }
      std::size_t find(std::size_t x) {
        while (_parent[x] != x) {
          _parent[x] = _parent[_parent[x]];
          x          = _parent[x];
        }
        return x;
      }
      bool unite(std::size_t x, std::size_t y) {
        x = find(x);
        y = find(y);
        if (x == y) {
          return false;
        }
        _parent[x] = y;
        return true;
      }

     private:
      std::vector<std::size_t> _parent;
    };

    // Index of the first edge that breaks tree shape and why, or nullopt.
    struct ShapeDefect {
      std::size_t edge;
      std::string message;
    };

    std::optional<ShapeDefect> first_shape_defect(std::vector<Vertex> const&   vertices,
                                                  std::vector<TreeEdge> const& edges) {
      std::set<std::pair<std::size_t, std::size_t>> seen;
      UnionFind                                     uf(vertices.size());
      for (std::size_t i = 0; i < edges.size(); ++i) {
        auto const& e = edges[i];
        if (e.a >= vertices.size() || e.b >= vertices.size()) {
          return ShapeDefect{i, "edge endpoint out of range"};
        }
        auto const& a = vertices[e.a].id;
        auto const& b = vertices[e.b].id;
        if (e.a == e.b) {
          return ShapeDefect{i, "self-loop on `" + a + "`"};
        }
        if (e.state == EdgeState::none) {
          return ShapeDefect{i, "edge `" + a + "` - `" + b + "` has state none"};
        }
        if (!seen.emplace(std::min(e.a, e.b), std::max(e.a, e.b)).second) {
          return ShapeDefect{i, "repeated edge between `" + a + "` and `" + b + "`"};
        }
        if (!uf.unite(e.a, e.b)) {
          return ShapeDefect{i, "cycle detected: edge `" + a + "` - `" + b + "` closes a cycle"};
        }
      }
      return std::nullopt;
    }

  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // DLTree
  ////////////////////////////////////////////////////////////////////////

  DLTree::DLTree(std::vector<Vertex> vertices, std::vector<TreeEdge> edges)
      : _vertices(std::move(vertices)), _edges(std::move(edges)), _adjacency(_vertices.size()) {
    if (_vertices.empty()) {
      throw ValidationError("a tree needs at least one vertex");
    }
    std::set<std::string_view> ids;
    for (auto const& v : _vertices) {
      if (!is_valid_name(v.id)) {
        throw ValidationError("invalid vertex id `" + v.id + "`");
      }
      if (!ids.insert(v.id).second) {
        throw ValidationError("duplicate vertex `" + v.id + "`");
      }
      if (v.label.lo() < 1) {
        throw ValidationError("vertex `" + v.id + "` has a color below 1");
      }
    }
    if (auto defect = first_shape_defect(_vertices, _edges)) {
      throw ValidationError(defect->message);
    }
    if (_edges.size() + 1 != _vertices.size()) {
      throw ValidationError("disconnected: " + std::to_string(_vertices.size() - _edges.size())
                            + " components");
    }
    for (auto const& e : _edges) {
      _adjacency[e.a].push_back({e.b, e.state});
      _adjacency[e.b].push_back({e.a, reversed(e.state)});
    }
  }

  EdgeState DLTree::state(std::size_t u, std::size_t v) const {
    for (auto const& nb : _adjacency.at(u)) {
      if (nb.vertex == v) {
        return nb.state;
      }
    }
    return EdgeState::none;
  }

  std::optional<std::size_t> DLTree::find(std::string_view id) const {
    for (std::size_t i = 0; i < _vertices.size(); ++i) {
      if (_vertices[i].id == id) {
        return i;
      }
    }
    return std::nullopt;
  }

  std::size_t DLTree::index_of(std::string_view id) const {
    auto v = find(id);
    if (!v) {
      throw ValidationError("unknown vertex `" + std::string(id) + "`");
    }
    return *v;
  }

  std::set<Color> DLTree::colors() const {
    std::set<Color> out;
    for (auto const& v : _vertices) {
      out.insert(v.label.lo());
      out.insert(v.label.hi());
    }
    return out;
  }

  std::size_t DLTree::num_marked() const {
    return std::count_if(_vertices.begin(), _vertices.end(), [](auto const& v) {
      return v.label.marked();
    });
  }

  ////////////////////////////////////////////////////////////////////////
  // Parsing and serialization
  ////////////////////////////////////////////////////////////////////////

  namespace {

    LabelPair parse_label(std::string_view s, std::size_t line, std::size_t column) {
      std::string compact;
      for (char ch : s) {
        if (!std::isspace(static_cast<unsigned char>(ch))) {
          compact += ch;
        }
      }
      auto comma = compact.find(',');
      if (compact.size() < 5 || compact.front() != '{' || compact.back() != '}'
          || comma == std::string::npos) {
        throw ParseError("expected a label `{i,j}`, found `" + compact + "`", line, column);
      }
      std::string_view body(compact);
      body = body.substr(1, body.size() - 2);
      comma -= 1;
      int i = detail::parse_positive(body.substr(0, comma), line, column);
      int j = detail::parse_positive(body.substr(comma + 1), line, column);
      return {i, j};
    }

  }  // namespace

  DLTree parse_tree(std::string_view text) {
    std::vector<Vertex> vertices;
    struct PendingEdge {
      detail::Token a, b;
      EdgeState     state;
      std::size_t   line;
    };
    std::vector<PendingEdge> pending;
    std::map<std::string, std::size_t, std::less<>> index;

    for (auto const& line : detail::significant_lines(text)) {
      auto const& tok = line.tokens;
      if (tok[0].text == "vertex") {
        if (tok.size() < 3) {
          throw ParseError("expected `vertex <id> {i,j}`", line.number, tok[0].column);
        }
        if (!is_valid_name(tok[1].text)) {
          throw ParseError("invalid vertex id `" + std::string(tok[1].text) + "`",
                           line.number,
                           tok[1].column);
        }
        auto label_text = line.text.substr(tok[2].column - 1);
        auto label      = parse_label(label_text, line.number, tok[2].column);
        if (!index.try_emplace(std::string(tok[1].text), vertices.size()).second) {
          throw ParseError("duplicate vertex `" + std::string(tok[1].text) + "`",
                           line.number,
                           tok[1].column);
        }
        vertices.push_back({std::string(tok[1].text), label});
      } else if (tok[0].text == "edge") {
        if (tok.size() != 4) {
          throw ParseError("expected `edge <a> (->|<-|--) <b>`", line.number, tok[0].column);
        }
        EdgeState state;
        if (tok[2].text == "->") {
          state = EdgeState::forward;
        } else if (tok[2].text == "<-") {
          state = EdgeState::backward;
        } else if (tok[2].text == "--") {
          state = EdgeState::undirected;
        } else {
          throw ParseError("expected `->`, `<-` or `--`, found `" + std::string(tok[2].text) + "`",
                           line.number,
                           tok[2].column);
        }
        pending.push_back({tok[1], tok[3], state, line.number});
      } else {
        throw ParseError("expected `vertex` or `edge`, found `" + std::string(tok[0].text) + "`",
                         line.number,
                         tok[0].column);
      }
    }
    if (vertices.empty()) {
      throw ParseError("no vertices declared", 0, 0);
    }
    std::vector<TreeEdge> edges;
    for (auto const& p : pending) {
      auto resolve = [&](detail::Token const& t) {
        auto it = index.find(t.text);
        if (it == index.end()) {
          throw ParseError("unknown vertex `" + std::string(t.text) + "` in edge", p.line, t.column);
        }
        return it->second;
      };
      edges.push_back({resolve(p.a), resolve(p.b), p.state});
    }
    if (auto defect = first_shape_defect(vertices, edges)) {
      auto const& p = pending[defect->edge];
      throw ParseError(defect->message, p.line, p.a.column);
    }
    return DLTree(std::move(vertices), std::move(edges));
  }

  DLTree tree_from_json(nlohmann::json const& j) {
    if (!j.is_object() || !j.contains("vertices") || !j["vertices"].is_array()) {
      throw ValidationError("expected an object with a `vertices` array");
    }
    std::vector<Vertex> vertices;
    for (auto const& v : j["vertices"]) {
      if (!v.contains("id") || !v.contains("label") || !v["label"].is_array()
          || v["label"].size() != 2) {
        throw ValidationError("each vertex needs `id` and a two-element `label`");
      }
      vertices.push_back(
          {v["id"].get<std::string>(), {v["label"][0].get<Color>(), v["label"][1].get<Color>()}});
    }
    std::vector<TreeEdge> edges;
    if (j.contains("edges")) {
      auto lookup = [&](std::string const& id) {
        for (std::size_t i = 0; i < vertices.size(); ++i) {
          if (vertices[i].id == id) {
            return i;
          }
        }
        throw ValidationError("unknown vertex `" + id + "` in edge");
      };
      for (auto const& e : j["edges"]) {
        auto state = edge_state_from_string(e.value("state", std::string("undirected")));
        if (!state) {
          throw ValidationError("unknown edge state");
        }
        edges.push_back({lookup(e.at("a").get<std::string>()), lookup(e.at("b").get<std::string>()), *state});
      }
    }
    return DLTree(std::move(vertices), std::move(edges));
  }

  std::string to_text(DLTree const& t) {
    std::string out;
    for (auto const& v : t.vertices()) {
      out += "vertex " + v.id + " " + v.label.to_string() + "\n";
    }
    for (auto const& e : t.edges()) {
      char const* op = e.state == EdgeState::forward    ? " -> "
                       : e.state == EdgeState::backward ? " <- "
                                                        : " -- ";
      out += "edge " + t.id(e.a) + op + t.id(e.b) + "\n";
    }
    return out;
  }

  nlohmann::json to_json(DLTree const& t) {
    return to_json(as_graph(t));
  }

  std::optional<DLTree> as_tree(IntersectionGraph const& g) {
    if (g.size() == 0 || g.edges().size() + 1 != g.size()) {
      return std::nullopt;
    }
    UnionFind uf(g.size());
    for (auto const& e : g.edges()) {
      if (!uf.unite(e.a, e.b)) {
        return std::nullopt;
      }
    }
    std::vector<TreeEdge> edges;
    edges.reserve(g.edges().size());
    for (auto const& e : g.edges()) {
      edges.push_back({e.a, e.b, e.state});
    }
    return DLTree(g.vertices(), std::move(edges));
  }

  IntersectionGraph as_graph(DLTree const& t) {
    std::vector<GraphEdge> edges;
    for (auto const& e : t.edges()) {
      edges.push_back({e.a, e.b, e.state});
    }
    return IntersectionGraph(t.vertices(), std::move(edges));
  }

  DLTree recolor(DLTree const& t, std::map<Color, Color> const& mapping) {
    auto map = [&](Color c) {
      auto it = mapping.find(c);
      return it == mapping.end() ? c : it->second;
    };
    auto vertices = t.vertices();
    for (auto& v : vertices) {
      v.label = {map(v.label.lo()), map(v.label.hi())};
    }
    return DLTree(std::move(vertices), t.edges());
  }

  std::map<Color, Color> dense_colors(DLTree const& t) {
    std::map<Color, Color> out;
    Color                  next = 1;
    for (Color c : t.colors()) {
      out[c] = next++;
    }
    return out;
  }

  DLTree induced_subtree(DLTree const& t, std::span<std::size_t const> vertices) {
    std::vector<std::size_t> local(t.size(), t.size());
    std::vector<Vertex>      vs;
    for (auto v : vertices) {
      local.at(v) = vs.size();
      vs.push_back(t.vertices()[v]);
    }
    std::vector<TreeEdge> es;
    for (auto const& e : t.edges()) {
      if (local[e.a] < t.size() && local[e.b] < t.size()) {
        es.push_back({local[e.a], local[e.b], e.state});
      }
    }
    return DLTree(std::move(vs), std::move(es));
  }

  ////////////////////////////////////////////////////////////////////////
  // Boughs and spines
  ////////////////////////////////////////////////////////////////////////

  std::vector<Bough> boughs(DLTree const& t, std::size_t v) {
    if (v >= t.size()) {
      throw ValidationError("vertex index out of range");
    }
    std::vector<Bough> out;
    for (auto const& nb : t.neighbors(v)) {
      Bough b;
      b.anchor = v;
      b.root   = nb.vertex;
      std::vector<std::size_t> stack{nb.vertex};
      std::vector<bool>        seen(t.size(), false);
      seen[v] = seen[nb.vertex] = true;
      while (!stack.empty()) {
        auto x = stack.back();
        stack.pop_back();
        b.vertices.push_back(x);
        for (auto const& y : t.neighbors(x)) {
          if (!seen[y.vertex]) {
            seen[y.vertex] = true;
            stack.push_back(y.vertex);
          }
        }
      }
      std::sort(b.vertices.begin(), b.vertices.end());
      std::size_t marked          = 0;
      bool        far_marked_seen = false;
      for (auto x : b.vertices) {
        if (t.marked(x)) {
          ++marked;
          far_marked_seen |= (x != b.root);
        }
      }
      b.heavy = marked > 1 || far_marked_seen;
      out.push_back(std::move(b));
    }
    std::sort(out.begin(), out.end(), [&t](Bough const& x, Bough const& y) {
      return t.id(x.root) < t.id(y.root);
    });
    return out;
  }

  namespace {
    // Parent pointers of a traversal rooted at `root`; root maps to itself.
    std::vector<std::size_t> parents_from(DLTree const& t, std::size_t root) {
      std::vector<std::size_t> parent(t.size(), t.size());
      std::vector<std::size_t> queue{root};
      parent[root] = root;
      for (std::size_t i = 0; i < queue.size(); ++i) {
        for (auto const& nb : t.neighbors(queue[i])) {
          if (parent[nb.vertex] == t.size()) {
            parent[nb.vertex] = queue[i];
            queue.push_back(nb.vertex);
          }
        }
      }
      return parent;
    }

    std::vector<std::size_t> walk(std::vector<std::size_t> const& parent,
                                  std::size_t                     from) {
      std::vector<std::size_t> path{from};
      while (parent[path.back()] != path.back()) {
        path.push_back(parent[path.back()]);
      }
      return path;
    }
  }  // namespace

  std::vector<std::size_t> tree_path(DLTree const& t, std::size_t from, std::size_t to) {
    if (from >= t.size() || to >= t.size()) {
      throw ValidationError("vertex index out of range");
    }
    // Walking parents from `from` towards root `to` yields from..to.
    return walk(parents_from(t, to), from);
  }

  std::vector<std::size_t> spine(DLTree const& t) {
    std::vector<std::size_t> marked;
    for (std::size_t v = 0; v < t.size(); ++v) {
      if (t.marked(v)) {
        marked.push_back(v);
      }
    }
    if (marked.size() <= 1) {
      return marked;
    }
    std::vector<std::size_t> best;
    std::vector<std::string> best_ids;
    for (auto target : marked) {
      auto parent = parents_from(t, target);
      for (auto source : marked) {
        if (source == target) {
          continue;
        }
        // Cheap length check before materializing ids.
        std::size_t length = 1;
        for (auto x = source; parent[x] != x; x = parent[x]) {
          ++length;
        }
        if (length < best.size()) {
          continue;
        }
        auto                     path = walk(parent, source);
        std::vector<std::string> ids;
        for (auto x : path) {
          ids.push_back(t.id(x));
        }
        if (path.size() > best.size() || ids < best_ids) {
          best     = std::move(path);
          best_ids = std::move(ids);
        }
      }
    }
    return best;
  }

  ////////////////////////////////////////////////////////////////////////
  // Canonical form
  ////////////////////////////////////////////////////////////////////////

  namespace {

    char token(EdgeState from_parent) {
      switch (from_parent) {
        case EdgeState::forward:
          return '>';
        case EdgeState::backward:
          return '<';
        case EdgeState::undirected:
          return '-';
        default:
          return '.';
      }
    }

    std::string encode(DLTree const& t, std::size_t v, std::size_t parent, EdgeState from_parent) {
      std::vector<std::string> children;
      for (auto const& nb : t.neighbors(v)) {
        if (nb.vertex != parent) {
          children.push_back(encode(t, nb.vertex, v, nb.state));
        }
      }
      std::sort(children.begin(), children.end());
      auto        l = t.label(v);
      std::string out;
      out += '(';
      out += token(from_parent);
      out += std::to_string(l.lo());
      out += ',';
      out += std::to_string(l.hi());
      for (auto const& c : children) {
        out += c;
      }
      out += ')';
      return out;
    }

    std::vector<std::size_t> centers(DLTree const& t) {
      std::vector<std::size_t> degree(t.size());
      std::vector<std::size_t> layer;
      for (std::size_t v = 0; v < t.size(); ++v) {
        degree[v] = t.degree(v);
        if (degree[v] <= 1) {
          layer.push_back(v);
        }
      }
      std::size_t remaining = t.size();
      while (remaining > 2) {
        remaining -= layer.size();
        std::vector<std::size_t> next;
        for (auto v : layer) {
          for (auto const& nb : t.neighbors(v)) {
            if (--degree[nb.vertex] == 1) {
              next.push_back(nb.vertex);
            }
          }
        }
        layer = std::move(next);
      }
      return layer;
    }

  }  // namespace

  std::string canonical_tree(DLTree const& t) {
    std::string best;
    for (auto c : centers(t)) {
      auto code = encode(t, c, t.size(), EdgeState::none);
      if (best.empty() || code < best) {
        best = std::move(code);
      }
    }
    return best;
  }

  bool tree_iso(DLTree const& x, DLTree const& y) {
    return x.size() == y.size() && canonical_tree(x) == canonical_tree(y);
  }

}  // namespace chordweave
