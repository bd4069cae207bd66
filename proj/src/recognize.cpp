#include "chordweave/recognize.hpp"

#include <algorithm>
#include <numeric>

#include "chordweave/error.hpp"

namespace chordweave {

  namespace {

    Verdict reject(std::string reason, std::string detail) {
      Verdict v;
      v.accepted = false;
      v.reason   = std::move(reason);
      v.detail   = std::move(detail);
      return v;
    }

    std::vector<std::string> ids(DLTree const& t, std::vector<std::size_t> const& vs) {
      std::vector<std::string> out;
      for (auto v : vs) {
        out.push_back(t.id(v));
      }
      return out;
    }

    std::string tagged(DLTree const& t, std::size_t v) {
      return t.id(v) + t.label(v).to_string();
    }

    std::string join(std::vector<std::string> const& xs, std::string const& sep = " ") {
      std::string out;
      for (std::size_t i = 0; i < xs.size(); ++i) {
        out += (i == 0 ? "" : sep) + xs[i];
      }
      return out;
    }

    void require_at_most_two_colors(DLTree const& t) {
      if (t.colors().size() > 2) {
        throw ValidationError("the two-component tests need at most 2 colors, found "
                              + std::to_string(t.colors().size()));
      }
    }

  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // Two colors
  ////////////////////////////////////////////////////////////////////////

  Verdict check_marked_2(DLTree const& t) {
    require_at_most_two_colors(t);
    for (std::size_t v = 0; v < t.size(); ++v) {
      auto                                  bs = boughs(t, v);
      std::vector<std::vector<std::string>> heavy;
      for (auto const& b : bs) {
        if (b.heavy) {
          heavy.push_back(ids(t, b.vertices));
        }
      }
      if (heavy.size() > 2) {
        auto out = reject("T3.1",
                          "vertex `" + t.id(v) + "` has " + std::to_string(heavy.size())
                              + " heavy boughs (at most 2 allowed)");
        out.witness.vertices = {t.id(v)};
        out.witness.boughs   = std::move(heavy);
        return out;
      }
    }
    Verdict out;
    out.accepted = true;
    out.reason   = "T3.1";
    out.detail   = "every vertex has at most 2 heavy boughs";
    return out;
  }

  Verdict check_labeled_2(DLTree const& t) {
    require_at_most_two_colors(t);

    for (auto const& e : t.edges()) {
      if (is_directed(e.state)) {
        auto [src, dst] = e.state == EdgeState::forward ? std::pair{e.a, e.b} : std::pair{e.b, e.a};
        auto out        = reject("T3.2-cond0",
                          "edge " + tagged(t, src) + " -> " + tagged(t, dst)
                              + " is directed, but every edge between chords of a "
                                "2-component diagram is undirected");
        out.witness.edges = {{t.id(src), t.id(dst)}};
        return out;
      }
    }

    if (auto marked = check_marked_2(t); !marked.accepted) {
      marked.reason = "T3.2-cond1";
      marked.detail = "underlying marked tree fails: " + marked.detail;
      return marked;
    }

    for (auto const& e : t.edges()) {
      if (!t.marked(e.a) && !t.marked(e.b) && t.label(e.a) != t.label(e.b)) {
        auto out = reject("T3.2-cond2",
                          "adjacent unmarked vertices " + tagged(t, e.a) + " and "
                              + tagged(t, e.b) + " have different labels");
        out.witness.edges = {{t.id(e.a), t.id(e.b)}};
        return out;
      }
    }

    auto const s = spine(t);
    // Checking consecutive unmarked spine vertices suffices: parity composes.
    std::optional<std::size_t> last;
    std::size_t                marked_between = 0;
    for (std::size_t q = 0; q < s.size(); ++q) {
      if (t.marked(s[q])) {
        ++marked_between;
        continue;
      }
      if (last) {
        auto v           = s[*last];
        auto w           = s[q];
        bool same        = t.label(v) == t.label(w);
        bool even        = marked_between % 2 == 0;
        if (same != even) {
          auto out = reject("T3.2-cond3",
                            "unmarked spine vertices " + tagged(t, v) + " and " + tagged(t, w)
                                + " have " + (same ? "equal" : "different") + " labels but "
                                + std::to_string(marked_between)
                                + (marked_between == 1 ? " marked vertex lies" : " marked vertices lie")
                                + " between them");
          out.witness.vertices = {t.id(v), t.id(w)};
          out.witness.spine    = ids(t, {s.begin() + static_cast<std::ptrdiff_t>(*last),
                                      s.begin() + static_cast<std::ptrdiff_t>(q) + 1});
          return out;
        }
      }
      last           = q;
      marked_between = 0;
    }

    Verdict out;
    out.accepted      = true;
    out.reason        = "T3.2";
    out.detail        = "all conditions hold";
    out.witness.spine = ids(t, s);
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Three or more colors
  ////////////////////////////////////////////////////////////////////////

  ColorPath color_path(DLTree const& t) {
    auto                   dense = dense_colors(t);
    std::vector<Color>     original(dense.size() + 1);
    for (auto [c, d] : dense) {
      original[d] = c;
    }
    int        n = static_cast<int>(dense.size());
    ColorGraph g(n);
    for (auto const& v : t.vertices()) {
      if (v.label.marked()) {
        g.add_edge(dense[v.label.lo()], dense[v.label.hi()]);
      }
    }
    ColorPath out;
    for (Color c = 1; c <= n; ++c) {
      if (g.degree(c) > 2) {
        out.failure = "color " + std::to_string(original[c]) + " is joined to "
                      + std::to_string(g.degree(c)) + " other colors";
        out.offending.push_back(original[c]);
        for (Color d : g.neighbors(c)) {
          out.offending.push_back(original[d]);
        }
        return out;
      }
    }
    if (!g.is_connected()) {
      // Report the colors outside the component of the smallest color.
      ColorGraph               reach = g;
      std::vector<bool>        seen(n + 1, false);
      std::vector<Color>       stack{1};
      seen[1] = true;
      while (!stack.empty()) {
        Color c = stack.back();
        stack.pop_back();
        for (Color d : reach.neighbors(c)) {
          if (!seen[d]) {
            seen[d] = true;
            stack.push_back(d);
          }
        }
      }
      for (Color c = 1; c <= n; ++c) {
        if (!seen[c]) {
          out.offending.push_back(original[c]);
        }
      }
      out.failure = "the colors are not connected by marked labels";
      return out;
    }
    auto path = g.hamiltonian_path();
    if (!path) {
      out.failure = "the marked labels form a cycle of colors";
      for (Color c = 1; c <= n; ++c) {
        out.offending.push_back(original[c]);
      }
      return out;
    }
    for (Color c : *path) {
      out.order.push_back(original[c]);
    }
    return out;
  }

  Verdict check_multi(DLTree const& t) {
    if (t.colors().size() < 3) {
      throw ValidationError("the multi-component test needs at least 3 colors");
    }
    auto const dense = dense_colors(t);

    for (auto const& e : t.edges()) {
      if (!t.label(e.a).shares_color(t.label(e.b))) {
        auto out = reject("T3.3-cond1",
                          "adjacent vertices " + tagged(t, e.a) + " and " + tagged(t, e.b)
                              + " share no color");
        out.witness.edges = {{t.id(e.a), t.id(e.b)}};
        return out;
      }
    }

    for (auto const& e : t.edges()) {
      if (is_directed(e.state) && (!t.marked(e.a) || !t.marked(e.b))) {
        auto u   = t.marked(e.a) ? e.b : e.a;
        auto out = reject("T3.3-cond2",
                          "edge between " + tagged(t, e.a) + " and " + tagged(t, e.b)
                              + " is directed, but " + t.id(u)
                              + " is unmarked (not semisymmetric)");
        out.witness.edges = {{t.id(e.a), t.id(e.b)}};
        return out;
      }
    }

    std::vector<std::size_t> marked;
    for (std::size_t v = 0; v < t.size(); ++v) {
      if (t.marked(v)) {
        marked.push_back(v);
      }
    }
    for (std::size_t i = 0; i < marked.size(); ++i) {
      for (std::size_t j = i + 1; j < marked.size(); ++j) {
        auto u = marked[i];
        auto v = marked[j];
        if (t.label(u) == t.label(v) || !t.label(u).shares_color(t.label(v))) {
          continue;
        }
        auto st = t.state(u, v);
        if (!is_directed(st)) {
          auto out = reject("T3.3-cond3",
                            tagged(t, u) + " and " + tagged(t, v) + " share exactly one color "
                                + (st == EdgeState::none ? "but are not adjacent"
                                                         : "but their edge is undirected")
                                + "; a directed edge is required");
          out.witness.vertices = {t.id(u), t.id(v)};
          if (st != EdgeState::none) {
            out.witness.edges = {{t.id(u), t.id(v)}};
          }
          return out;
        }
      }
    }

    auto path = color_path(t);
    if (!path) {
      bool disconnected = path.failure.find("not connected") != std::string::npos;
      auto out          = reject(disconnected ? "T3.3-cond5" : "T3.3-cond4",
                        "no relabeling of the colors works: " + path.failure);
      std::set<Color> bad(path.offending.begin(), path.offending.end());
      for (auto v : marked) {
        auto l = t.label(v);
        if (bad.count(l.lo()) != 0 && bad.count(l.hi()) != 0) {
          out.witness.vertices.push_back(t.id(v));
        }
      }
      if (out.witness.vertices.empty()) {
        for (auto v : marked) {
          auto l = t.label(v);
          if (bad.count(l.lo()) != 0 || bad.count(l.hi()) != 0) {
            out.witness.vertices.push_back(t.id(v));
          }
        }
      }
      if (out.witness.vertices.empty()) {
        for (std::size_t v = 0; v < t.size(); ++v) {
          if (bad.count(t.label(v).lo()) != 0) {
            out.witness.vertices.push_back(t.id(v));
          }
        }
      }
      return out;
    }

    int const              n = static_cast<int>(path.order.size());
    std::map<Color, Color> position;
    for (int p = 0; p < n; ++p) {
      position[path.order[p]] = p + 1;
    }
    std::vector<std::size_t>              m(n, 0);  // m[p] counts {p, p+1}
    std::vector<std::vector<std::string>> by_label(n);
    for (auto v : marked) {
      auto a = position[t.label(v).lo()];
      auto b = position[t.label(v).hi()];
      if (std::abs(a - b) > 1) {
        auto out = reject("T3.3-cond4",
                          tagged(t, v) + " joins colors that are not consecutive along the "
                                         "color path");
        out.witness.vertices = {t.id(v)};
        return out;
      }
      auto p = std::min(a, b);
      ++m[p];
      by_label[p].push_back(t.id(v));
    }
    for (int p = 2; p <= n - 2; ++p) {
      if (m[p] != 1) {
        auto out             = reject("T3.3-cond5",
                          std::to_string(m[p]) + " vertices join the interior consecutive colors "
                              + std::to_string(path.order[p - 1]) + " and "
                              + std::to_string(path.order[p]) + " (exactly 1 required)");
        out.witness.vertices = by_label[p];
        return out;
      }
    }
    if (m[1] < 1 || m[n - 1] < 1) {
      auto out = reject("T3.3-cond5", "an end of the color path carries no marked vertex");
      return out;
    }

    // Marked vertices joined through undirected edges only.
    std::vector<std::size_t> comp(t.size());
    std::iota(comp.begin(), comp.end(), 0);
    auto root = [&comp](std::size_t x) {
      while (comp[x] != x) {
        x = comp[x] = comp[comp[x]];
      }
      return x;
    };
    for (auto const& e : t.edges()) {
      if (e.state == EdgeState::undirected) {
        comp[root(e.a)] = root(e.b);
      }
    }
    std::map<std::size_t, std::size_t> first_marked;
    for (auto v : marked) {
      auto [it, inserted] = first_marked.try_emplace(root(v), v);
      if (!inserted) {
        auto seg = tree_path(t, it->second, v);
        auto out = reject("T3.3-cond6",
                          "marked vertices " + tagged(t, it->second) + " and " + tagged(t, v)
                              + " are joined by a path of undirected edges");
        out.witness.vertices = {t.id(it->second), t.id(v)};
        out.witness.spine    = ids(t, seg);
        return out;
      }
    }

    Verdict out;
    out.accepted    = true;
    out.reason      = "T3.3";
    out.detail      = "all conditions hold";
    out.color_map   = dense;
    out.color_order = path.order;
    out.multiplicities.assign(m.begin() + 1, m.end());
    return out;
  }

  Verdict recognize(DLTree const& t) {
    auto const colors = t.colors();
    if (colors.size() >= 3) {
      return check_multi(t);
    }
    auto dense = dense_colors(t);
    auto out   = check_labeled_2(recolor(t, dense));
    out.color_map = std::move(dense);
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Rendering
  ////////////////////////////////////////////////////////////////////////

  nlohmann::json to_json(Verdict const& v) {
    nlohmann::json edges = nlohmann::json::array();
    for (auto const& [a, b] : v.witness.edges) {
      edges.push_back({a, b});
    }
    nlohmann::json color_map = nlohmann::json::object();
    for (auto [from, to] : v.color_map) {
      color_map[std::to_string(from)] = to;
    }
    return {{"schema", 1},
            {"accepted", v.accepted},
            {"reason", v.reason},
            {"detail", v.detail},
            {"witness",
             {{"vertices", v.witness.vertices},
              {"edges", edges},
              {"boughs", v.witness.boughs},
              {"spine", v.witness.spine}}},
            {"color_map", color_map},
            {"color_order", v.color_order},
            {"multiplicities", v.multiplicities}};
  }

  std::string explain(Verdict const& v) {
    std::string out = (v.accepted ? "ACCEPT " : "REJECT ") + v.reason + ": " + v.detail + "\n";
    if (!v.witness.vertices.empty()) {
      out += "  witness vertices: " + join(v.witness.vertices) + "\n";
    }
    for (auto const& [a, b] : v.witness.edges) {
      out += "  witness edge: " + a + " " + b + "\n";
    }
    for (auto const& b : v.witness.boughs) {
      out += "  heavy bough: {" + join(b, ", ") + "}\n";
    }
    if (!v.witness.spine.empty()) {
      out += (v.accepted ? "  spine: " : "  path: ") + join(v.witness.spine) + "\n";
    }
    if (!v.color_order.empty()) {
      std::vector<std::string> cs;
      for (auto c : v.color_order) {
        cs.push_back(std::to_string(c));
      }
      out += "  color order: " + join(cs) + "\n";
      std::vector<std::string> ms;
      for (auto m : v.multiplicities) {
        ms.push_back(std::to_string(m));
      }
      out += "  multiplicities: " + join(ms) + "\n";
    }
    return out;
  }

}  // namespace chordweave
