#include "chordweave/realize.hpp"

#include <algorithm>
#include <map>

#include "chordweave/error.hpp"
#include "chordweave/igraph.hpp"

namespace chordweave {

  namespace {

    using Components = std::vector<std::vector<std::string>>;

    std::vector<std::size_t> children_by_id(DLTree const& t, std::size_t v, std::size_t parent) {
      std::vector<std::size_t> out;
      for (auto const& nb : t.neighbors(v)) {
        if (nb.vertex != parent) {
          out.push_back(nb.vertex);
        }
      }
      std::sort(out.begin(), out.end(), [&t](auto x, auto y) { return t.id(x) < t.id(y); });
      return out;
    }

    // W(c) = d1 ... dm c W(dm) ... W(d1)
    void barbell_tail(DLTree const& t, std::size_t c, std::size_t parent, std::vector<std::string>& out) {
      auto kids = children_by_id(t, c, parent);
      for (auto d : kids) {
        out.push_back(t.id(d));
      }
      out.push_back(t.id(c));
      for (auto it = kids.rbegin(); it != kids.rend(); ++it) {
        barbell_tail(t, *it, c, out);
      }
    }

    Color other(Color c) {
      return c == 1 ? 2 : 1;
    }

    // Grows a two-component diagram one chord at a time. The most recent
    // chord (the frontier) owns the top slot of component `_color`; every new
    // chord is placed just below that slot and at the top of a component, so
    // it lies above all other chords and meets the frontier only.
    class FrontierGrowth {
     public:
      explicit FrontierGrowth(Components& comps) : _comps(comps) {}

      void start_marked(std::string const& name, Color frontier) {
        _comps[0].push_back(name);
        _comps[1].push_back(name);
        _color = frontier;
      }

      void start_unmarked(std::string const& name, Color color) {
        comp(color).push_back(name);
        comp(color).push_back(name);
        _color = color;
      }

      void extend_marked(std::string const& name) {
        place_below_top(name);
        comp(other(_color)).push_back(name);
        _color = other(_color);
      }

      void extend_unmarked(std::string const& name, Color color) {
        if (color != _color) {
          throw RealizationError("unmarked chord `" + name + "` must lie on component "
                                 + std::to_string(_color) + " to meet only its predecessor");
        }
        place_below_top(name);
        comp(_color).push_back(name);
      }

      // A marked chord meeting the frontier only; the frontier stays put.
      void add_rib(std::string const& name) {
        place_below_top(name);
        comp(other(_color)).push_back(name);
      }

     private:
      std::vector<std::string>& comp(Color c) {
        return _comps[c - 1];
      }

      void place_below_top(std::string const& name) {
        auto& seq = comp(_color);
        seq.insert(seq.end() - 1, name);
      }

      Components& _comps;
      Color       _color = 1;
    };

    Color initial_frontier(DLTree const& t, std::span<std::size_t const> path) {
      std::size_t flips = 0;
      for (std::size_t i = 1; i < path.size(); ++i) {
        if (!t.marked(path[i])) {
          Color c = t.label(path[i]).lo();
          return flips % 2 == 0 ? c : other(c);
        }
        ++flips;
      }
      return 1;
    }

    void check_two_colors(DLTree const& t) {
      for (auto const& v : t.vertices()) {
        if (v.label.hi() > 2) {
          throw ValidationError("expected colors 1 and 2 only, found " + v.label.to_string()
                                + " on `" + v.id + "`");
        }
      }
    }

    // Grows the path with ribs[i] attached right after path[i] is placed.
    Components grow_spine(DLTree const&                                t,
                          std::span<std::size_t const>                 path,
                          std::vector<std::vector<std::size_t>> const& ribs) {
      Components comps(2);
      if (path.empty()) {
        return comps;
      }
      FrontierGrowth grow(comps);
      for (std::size_t i = 0; i < path.size(); ++i) {
        auto v = path[i];
        if (i > 0 && !t.adjacent(path[i - 1], v)) {
          throw ValidationError("`" + t.id(path[i - 1]) + "` and `" + t.id(v)
                                + "` are consecutive on the path but not adjacent");
        }
        if (i == 0) {
          if (t.marked(v)) {
            grow.start_marked(t.id(v), initial_frontier(t, path));
          } else {
            grow.start_unmarked(t.id(v), t.label(v).lo());
          }
        } else if (t.marked(v)) {
          grow.extend_marked(t.id(v));
        } else {
          grow.extend_unmarked(t.id(v), t.label(v).lo());
        }
        if (i < ribs.size()) {
          for (auto r : ribs[i]) {
            grow.add_rib(t.id(r));
          }
        }
      }
      return comps;
    }

    struct Branch {
      std::size_t              anchor;
      std::size_t              root;
      std::vector<std::size_t> vertices;  // root first
    };

    // Connected components of t minus `core`, each with its unique
    // attachment edge anchor -- root.
    std::vector<Branch> branches_off(DLTree const& t, std::vector<bool> const& core) {
      std::vector<bool>   seen(core);
      std::vector<Branch> out;
      for (std::size_t a = 0; a < t.size(); ++a) {
        if (!core[a]) {
          continue;
        }
        for (auto const& nb : t.neighbors(a)) {
          if (seen[nb.vertex]) {
            continue;
          }
          Branch b{a, nb.vertex, {}};
          std::vector<std::size_t> stack{nb.vertex};
          seen[nb.vertex] = true;
          while (!stack.empty()) {
            auto x = stack.back();
            stack.pop_back();
            b.vertices.push_back(x);
            for (auto const& y : t.neighbors(x)) {
              if (core[y.vertex] && y.vertex != a && x != b.root) {
                throw RealizationError("unmarked branch at `" + t.id(b.root)
                                       + "` touches the core twice");
              }
              if (core[y.vertex] && x == b.root && y.vertex != a) {
                throw RealizationError("unmarked branch at `" + t.id(b.root)
                                       + "` touches the core twice");
              }
              if (!seen[y.vertex]) {
                seen[y.vertex] = true;
                stack.push_back(y.vertex);
              }
            }
          }
          out.push_back(std::move(b));
        }
      }
      std::sort(out.begin(), out.end(), [&t](Branch const& x, Branch const& y) {
        return t.id(x.root) < t.id(y.root);
      });
      return out;
    }

    ChordDiagram add_branches(ChordDiagram d, DLTree const& t, std::vector<bool> const& core) {
      for (auto const& b : branches_off(t, core)) {
        auto sub = induced_subtree(t, b.vertices);
        d        = attach_barbell(d, t.id(b.anchor), t.label(b.root).lo(), sub, 0);
      }
      return d;
    }

    void verify(ChordDiagram const& d, DLTree const& t, char const* what) {
      auto g = as_tree(gamma(d));
      if (!g || !tree_iso(*g, t)) {
        throw RealizationError(std::string(what)
                               + ": the constructed diagram does not reproduce the tree");
      }
    }

    // Component list indexed by original color, at least `minimum` long.
    Components recolor_components(Components const&             built,
                                  std::map<Color, Color> const& original_of,
                                  std::size_t                   minimum) {
      std::size_t k = minimum;
      for (auto [dense, orig] : original_of) {
        k = std::max(k, static_cast<std::size_t>(orig));
      }
      Components out(k);
      for (std::size_t i = 0; i < built.size(); ++i) {
        auto it = original_of.find(static_cast<Color>(i + 1));
        if (it == original_of.end()) {
          if (!built[i].empty()) {
            throw RealizationError("chords on an unused component");
          }
          continue;
        }
        out[it->second - 1] = built[i];
      }
      return out;
    }

  }  // namespace

  std::vector<std::string> barbell_word(DLTree const& t, std::size_t root) {
    if (root >= t.size()) {
      throw ValidationError("barbell root out of range");
    }
    std::vector<std::string> out{t.id(root)};
    barbell_tail(t, root, t.size(), out);
    return out;
  }

  ChordDiagram realize_unmarked(DLTree const& t, std::size_t root) {
    for (auto const& v : t.vertices()) {
      if (v.label.marked()) {
        throw ValidationError("marked vertex `" + v.id + "` in an unmarked tree");
      }
      if (v.label != t.label(0)) {
        throw ValidationError("unmarked tree mixes labels " + t.label(0).to_string() + " and "
                              + v.label.to_string());
      }
    }
    return ChordDiagram({barbell_word(t, root)});
  }

  ChordDiagram realize_spine(DLTree const& t, std::span<std::size_t const> path) {
    check_two_colors(t);
    for (auto v : path) {
      if (v >= t.size()) {
        throw ValidationError("path vertex out of range");
      }
    }
    ChordDiagram d(grow_spine(t, path, {}));
    std::vector<std::size_t> order(path.begin(), path.end());
    if (!path.empty()) {
      verify(d, induced_subtree(t, order), "realize_spine");
    }
    return d;
  }

  ChordDiagram attach_rib(ChordDiagram const&          d,
                          std::span<std::string const> spine,
                          std::string_view             anchor,
                          std::string_view             rib) {
    auto at = std::find(spine.begin(), spine.end(), anchor);
    if (at == spine.end() || at == spine.begin() || at + 1 == spine.end()) {
      throw ValidationError("rib anchor `" + std::string(anchor)
                            + "` must be an interior chord of the spine");
    }
    if (!is_valid_name(rib) || d.find(rib)) {
      throw ValidationError("rib name `" + std::string(rib) + "` is invalid or already used");
    }
    if (d.num_components() < 2) {
      throw ValidationError("a rib needs two components");
    }
    auto const u  = d.index_of(anchor);
    auto const s1 = d.sequence(1);
    auto const s2 = d.sequence(2);
    // Endpoints of each chord on components 1 and 2.
    std::vector<unsigned> on12(d.degree(), 0);
    for (auto x : s1) {
      ++on12[x];
    }
    for (auto x : s2) {
      ++on12[x];
    }
    std::vector<unsigned> below(d.degree());
    for (std::size_t g1 = 0; g1 <= s1.size(); ++g1) {
      for (std::size_t g2 = 0; g2 <= s2.size(); ++g2) {
        std::fill(below.begin(), below.end(), 0);
        for (std::size_t p = 0; p < g1; ++p) {
          ++below[s1[p]];
        }
        for (std::size_t p = 0; p < g2; ++p) {
          ++below[s2[p]];
        }
        bool ok = true;
        for (std::size_t z = 0; z < d.degree() && ok; ++z) {
          bool odd_below = below[z] % 2 == 1;
          bool odd_above = (on12[z] - below[z]) % 2 == 1;
          ok             = z == u ? (odd_below && odd_above) : (!odd_below && !odd_above);
        }
        if (ok) {
          auto comps = d.named_components();
          comps[0].insert(comps[0].begin() + static_cast<std::ptrdiff_t>(g1), std::string(rib));
          comps[1].insert(comps[1].begin() + static_cast<std::ptrdiff_t>(g2), std::string(rib));
          return ChordDiagram(std::move(comps));
        }
      }
    }
    throw RealizationError("no placement for rib `" + std::string(rib) + "` meets only `"
                           + std::string(anchor) + "`");
  }

  ChordDiagram attach_barbell(ChordDiagram const& d,
                              std::string_view    anchor,
                              Color               comp,
                              DLTree const&       c,
                              std::size_t         root) {
    auto const t = d.index_of(anchor);
    for (auto const& v : c.vertices()) {
      if (v.label != LabelPair(comp, comp)) {
        throw ValidationError("barbell vertex `" + v.id + "` must be labeled "
                              + LabelPair(comp, comp).to_string());
      }
      if (d.find(v.id)) {
        throw ValidationError("barbell vertex `" + v.id + "` already names a chord");
      }
    }
    auto const& ends = d.endpoints(t);
    auto        hit  = std::find_if(ends.begin(), ends.end(), [comp](Endpoint const& e) {
      return e.component == comp;
    });
    if (hit == ends.end()) {
      throw ValidationError("chord `" + std::string(anchor) + "` has no endpoint on component "
                            + std::to_string(comp));
    }
    auto word  = barbell_word(c, root);
    auto comps = d.named_components();
    if (comps.size() < static_cast<std::size_t>(comp)) {
      comps.resize(comp);
    }
    auto& seq = comps[comp - 1];
    auto  pos = static_cast<std::ptrdiff_t>(hit->position);
    seq.insert(seq.begin() + pos, word.front());
    seq.insert(seq.begin() + pos + 2, word.begin() + 1, word.end());
    return ChordDiagram(std::move(comps));
  }

  ChordDiagram realize_2(DLTree const& t, Verdict const& verdict) {
    if (!verdict.accepted) {
      throw ValidationError("realize_2 needs an accepted verdict");
    }
    if (t.colors().size() > 2) {
      throw ValidationError("realize_2 needs at most 2 colors");
    }
    auto const             dense = dense_colors(t);
    std::map<Color, Color> original_of;
    for (auto [orig, d] : dense) {
      original_of[d] = orig;
    }
    auto const td = recolor(t, dense);

    Components built(2);
    if (td.num_marked() == 0) {
      std::size_t root = 0;
      for (std::size_t v = 1; v < td.size(); ++v) {
        if (td.id(v) < td.id(root)) {
          root = v;
        }
      }
      built[td.label(root).lo() - 1] = barbell_word(td, root);
    } else {
      auto const        s = spine(td);
      std::vector<bool> core(td.size(), false);
      std::vector<int>  spine_index(td.size(), -1);
      for (std::size_t i = 0; i < s.size(); ++i) {
        core[s[i]]        = true;
        spine_index[s[i]] = static_cast<int>(i);
      }
      std::vector<std::vector<std::size_t>> ribs(s.size());
      std::vector<std::size_t>              off_spine;
      for (std::size_t v = 0; v < td.size(); ++v) {
        if (td.marked(v) && spine_index[v] < 0) {
          off_spine.push_back(v);
        }
      }
      std::sort(off_spine.begin(), off_spine.end(), [&td](auto x, auto y) {
        return td.id(x) < td.id(y);
      });
      for (auto v : off_spine) {
        bool placed = false;
        for (auto const& nb : td.neighbors(v)) {
          int i = spine_index[nb.vertex];
          if (i > 0 && static_cast<std::size_t>(i) + 1 < s.size()) {
            ribs[i].push_back(v);
            core[v] = placed = true;
            break;
          }
        }
        if (!placed) {
          throw RealizationError("marked vertex `" + td.id(v)
                                 + "` is not adjacent to an interior spine vertex");
        }
      }
      auto d = ChordDiagram(grow_spine(td, s, ribs));
      d      = add_branches(std::move(d), td, core);
      built  = d.named_components();
    }
    ChordDiagram out(recolor_components(built, original_of, 2));
    verify(out, t, "realize_2");
    return out;
  }

  ChordDiagram realize_multi(DLTree const& t, Verdict const& verdict) {
    if (!verdict.accepted || verdict.color_order.size() < 3) {
      throw ValidationError("realize_multi needs an accepted verdict on 3 or more colors");
    }
    int const              n = static_cast<int>(verdict.color_order.size());
    std::map<Color, Color> position;
    std::map<Color, Color> original_of;
    for (int p = 0; p < n; ++p) {
      position[verdict.color_order[p]] = p + 1;
      original_of[p + 1]               = verdict.color_order[p];
    }

    // groups[p]: vertices labeled {p, p+1} after relabeling, p = 1..n-1.
    std::vector<std::vector<std::size_t>> groups(n);
    for (std::size_t v = 0; v < t.size(); ++v) {
      if (!t.marked(v)) {
        continue;
      }
      auto a = position.at(t.label(v).lo());
      auto b = position.at(t.label(v).hi());
      if (std::abs(a - b) != 1) {
        throw RealizationError("`" + t.id(v) + "` joins non-consecutive colors");
      }
      groups[std::min(a, b)].push_back(v);
    }
    for (auto& g : groups) {
      std::sort(g.begin(), g.end(), [&t](auto x, auto y) { return t.id(x) < t.id(y); });
    }

    auto below = [&t](std::size_t x, std::size_t y) {
      // Edge x -> y puts x's endpoint below y's on their shared component.
      auto st = t.state(x, y);
      if (!is_directed(st)) {
        throw RealizationError("`" + t.id(x) + "` and `" + t.id(y) + "` need a directed edge");
      }
      return st == EdgeState::forward;
    };
    // Members below `pivot` first, each part in id order.
    auto split_around = [&below](std::vector<std::size_t> const& members, std::size_t pivot) {
      std::vector<std::size_t> lower, upper;
      for (auto x : members) {
        (below(x, pivot) ? lower : upper).push_back(x);
      }
      lower.insert(lower.end(), upper.begin(), upper.end());
      return std::pair{lower, lower.size() - upper.size()};
    };

    for (int p = 1; p < n; ++p) {
      if (groups[p].empty()) {
        throw RealizationError("no chord joins consecutive colors " + std::to_string(p) + " and "
                               + std::to_string(p + 1));
      }
    }

    Components built(n);
    for (int c = 1; c <= n; ++c) {
      std::vector<std::size_t> const empty;
      auto const&                    lower_group = c >= 2 ? groups[c - 1] : empty;
      auto const&                    upper_group = c <= n - 1 ? groups[c] : empty;
      std::vector<std::size_t>       seq;
      if (lower_group.empty()) {
        seq = upper_group;
        if (upper_group.size() > 1) {
          // Same order as on component c + 1, where they meet the next group.
          seq = split_around(upper_group, groups[c + 1].front()).first;
        }
      } else if (upper_group.empty()) {
        seq = lower_group;
        if (lower_group.size() > 1) {
          seq = split_around(lower_group, groups[c - 2].front()).first;
        }
      } else if (lower_group.size() == 1) {
        auto [order, cut] = split_around(upper_group, lower_group.front());
        seq.assign(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(cut));
        seq.push_back(lower_group.front());
        seq.insert(seq.end(), order.begin() + static_cast<std::ptrdiff_t>(cut), order.end());
      } else if (upper_group.size() == 1) {
        auto [order, cut] = split_around(lower_group, upper_group.front());
        seq.assign(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(cut));
        seq.push_back(upper_group.front());
        seq.insert(seq.end(), order.begin() + static_cast<std::ptrdiff_t>(cut), order.end());
      } else {
        throw RealizationError("two groups of parallel chords meet on component "
                               + std::to_string(c));
      }
      for (auto v : seq) {
        built[c - 1].push_back(t.id(v));
      }
    }

    std::vector<bool> core(t.size(), false);
    for (std::size_t v = 0; v < t.size(); ++v) {
      core[v] = t.marked(v);
    }
    ChordDiagram d(recolor_components(built, original_of, 1));
    d = add_branches(std::move(d), t, core);
    verify(d, t, "realize_multi");
    return d;
  }

  ChordDiagram realize(DLTree const& t) {
    auto verdict = recognize(t);
    if (!verdict.accepted) {
      throw ValidationError("not an intersection graph (" + verdict.reason + "): "
                            + verdict.detail);
    }
    auto d = t.colors().size() <= 2 ? realize_2(t, verdict) : realize_multi(t, verdict);
    auto const k     = static_cast<std::size_t>(*t.colors().rbegin());
    auto       comps = d.named_components();
    for (std::size_t i = k; i < comps.size(); ++i) {
      if (!comps[i].empty()) {
        throw RealizationError("chords on a component beyond the largest color");
      }
    }
    comps.resize(k);
    return ChordDiagram(std::move(comps));
  }

}  // namespace chordweave
