#include "chordweave/diagram.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "chordweave/error.hpp"
#include "text.hpp"

namespace chordweave {

  bool is_valid_name(std::string_view name) noexcept {
    return !name.empty() && std::all_of(name.begin(), name.end(), [](char ch) {
      return std::isalnum(static_cast<unsigned char>(ch)) || ch == '_';
    });
  }

  ////////////////////////////////////////////////////////////////////////
  // ColorGraph
  ////////////////////////////////////////////////////////////////////////

  ColorGraph::ColorGraph(int n_colors) : _n(n_colors), _edges() {
    if (n_colors < 0) {
      throw ValidationError("a color graph needs a nonnegative number of colors");
    }
  }

  void ColorGraph::add_edge(Color a, Color b) {
    if (a < 1 || b < 1 || a > _n || b > _n) {
      throw ValidationError("color out of range in color graph edge");
    }
    if (a == b) {
      throw ValidationError("color graphs have no loops");
    }
    _edges.emplace(std::min(a, b), std::max(a, b));
  }

  bool ColorGraph::adjacent(Color a, Color b) const {
    return _edges.count({std::min(a, b), std::max(a, b)}) != 0;
  }

  std::size_t ColorGraph::degree(Color c) const {
    return neighbors(c).size();
  }

  std::vector<Color> ColorGraph::neighbors(Color c) const {
    std::vector<Color> out;
    for (auto const& [a, b] : _edges) {
      if (a == c) {
        out.push_back(b);
      } else if (b == c) {
        out.push_back(a);
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  std::vector<std::pair<Color, Color>> ColorGraph::edges() const {
    return {_edges.begin(), _edges.end()};
  }

  bool ColorGraph::is_connected() const {
    if (_n <= 1) {
      return true;
    }
    std::vector<bool>  seen(_n + 1, false);
    std::vector<Color> stack{1};
    seen[1]         = true;
    std::size_t num = 1;
    while (!stack.empty()) {
      Color c = stack.back();
      stack.pop_back();
      for (Color d : neighbors(c)) {
        if (!seen[d]) {
          seen[d] = true;
          ++num;
          stack.push_back(d);
        }
      }
    }
    return num == static_cast<std::size_t>(_n);
  }

  std::optional<std::vector<Color>> ColorGraph::hamiltonian_path() const {
    if (_n == 0) {
      return std::nullopt;
    }
    if (_n == 1) {
      return std::vector<Color>{1};
    }
    if (_edges.size() != static_cast<std::size_t>(_n - 1) || !is_connected()) {
      return std::nullopt;
    }
    Color start = 0;
    for (Color c = 1; c <= _n; ++c) {
      auto d = degree(c);
      if (d > 2) {
        return std::nullopt;
      }
      if (d == 1 && start == 0) {
        start = c;
      }
    }
    std::vector<Color> path{start};
    Color              prev = 0;
    while (path.size() < static_cast<std::size_t>(_n)) {
      Color next = 0;
      for (Color d : neighbors(path.back())) {
        if (d != prev) {
          next = d;
          break;
        }
      }
      prev = path.back();
      path.push_back(next);
    }
    return path;
  }

  ////////////////////////////////////////////////////////////////////////
  // ChordDiagram
  ////////////////////////////////////////////////////////////////////////

  ChordDiagram::ChordDiagram(std::vector<std::vector<std::string>> components)
      : _names(), _sequences(), _endpoints() {
    if (components.empty()) {
      throw ValidationError("a chord diagram needs at least one component");
    }
    std::map<std::string, Chord, std::less<>> index;
    std::vector<std::size_t>                  seen;
    _sequences.resize(components.size());
    for (std::size_t c = 0; c < components.size(); ++c) {
      for (std::size_t p = 0; p < components[c].size(); ++p) {
        auto& name = components[c][p];
        if (!is_valid_name(name)) {
          throw ValidationError("invalid chord name `" + name + "`");
        }
        auto [it, inserted] = index.try_emplace(name, _names.size());
        Endpoint here{static_cast<Color>(c + 1), p};
        if (inserted) {
          _names.push_back(std::move(name));
          _endpoints.push_back({here, here});
          seen.push_back(1);
        } else {
          if (++seen[it->second] > 2) {
            throw ValidationError("chord `" + it->first + "` has more than 2 endpoints");
          }
          _endpoints[it->second][1] = here;
        }
        _sequences[c].push_back(it->second);
      }
    }
    for (Chord c = 0; c < _names.size(); ++c) {
      if (seen[c] != 2) {
        throw ValidationError("chord `" + _names[c] + "` has 1 endpoint");
      }
    }
  }

  std::span<ChordDiagram::Chord const> ChordDiagram::sequence(Color c) const {
    if (c < 1 || static_cast<std::size_t>(c) > _sequences.size()) {
      throw ValidationError("component " + std::to_string(c) + " out of range");
    }
    return _sequences[c - 1];
  }

  std::optional<ChordDiagram::Chord> ChordDiagram::find(std::string_view name) const {
    auto it = std::find(_names.begin(), _names.end(), name);
    if (it == _names.end()) {
      return std::nullopt;
    }
    return static_cast<Chord>(it - _names.begin());
  }

  ChordDiagram::Chord ChordDiagram::index_of(std::string_view name) const {
    auto c = find(name);
    if (!c) {
      throw ValidationError("unknown chord `" + std::string(name) + "`");
    }
    return *c;
  }

  LabelPair ChordDiagram::label(Chord c) const {
    auto const& e = _endpoints.at(c);
    return {e[0].component, e[1].component};
  }

  std::vector<std::vector<std::string>> ChordDiagram::named_components() const {
    std::vector<std::vector<std::string>> out(_sequences.size());
    for (std::size_t c = 0; c < _sequences.size(); ++c) {
      for (Chord x : _sequences[c]) {
        out[c].push_back(_names[x]);
      }
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Parsing and serialization
  ////////////////////////////////////////////////////////////////////////

  namespace {
    std::string_view trim(std::string_view s) {
      while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
        s.remove_prefix(1);
      }
      while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
        s.remove_suffix(1);
      }
      return s;
    }

    std::size_t column_of(std::string_view line, std::string_view part) {
      return static_cast<std::size_t>(part.data() - line.data()) + 1;
    }
  }  // namespace

  ChordDiagram parse_diagram(std::string_view text) {
    auto lines = detail::significant_lines(text);
    if (lines.empty()) {
      throw ParseError("empty input, expected `components: <k>`", 0, 0);
    }
    std::size_t                            k = 0;
    std::vector<std::vector<std::string>>  components;
    std::vector<bool>                      provided;
    struct Where {
      std::size_t line, column, count;
    };
    std::map<std::string, Where, std::less<>> where;

    for (auto const& line : lines) {
      auto colon = line.text.find(':');
      if (colon == std::string_view::npos) {
        throw ParseError("expected `<key>: <values>`", line.number, line.tokens.front().column);
      }
      auto key  = trim(line.text.substr(0, colon));
      auto rest = line.text.substr(colon + 1);
      if (key.empty()) {
        throw ParseError("missing key before `:`", line.number, colon + 1);
      }
      auto values = detail::tokenize(rest);
      for (auto& v : values) {
        v.column += colon + 1;
      }
      if (key == "components") {
        if (k != 0) {
          throw ParseError("duplicate `components` header", line.number, column_of(line.text, key));
        }
        if (&line != &lines.front()) {
          throw ParseError("`components` header must come first",
                           line.number,
                           column_of(line.text, key));
        }
        if (values.size() != 1) {
          throw ParseError("expected `components: <k>`", line.number, colon + 2);
        }
        k = static_cast<std::size_t>(
            detail::parse_positive(values[0].text, line.number, values[0].column));
        components.resize(k);
        provided.assign(k, false);
        continue;
      }
      if (k == 0) {
        throw ParseError("expected `components: <k>` before component lines",
                         line.number,
                         column_of(line.text, key));
      }
      auto index = static_cast<std::size_t>(
          detail::parse_positive(key, line.number, column_of(line.text, key)));
      if (index > k) {
        throw ParseError("component " + std::to_string(index) + " exceeds declared count "
                             + std::to_string(k),
                         line.number,
                         column_of(line.text, key));
      }
      if (provided[index - 1]) {
        throw ParseError("duplicate component " + std::to_string(index),
                         line.number,
                         column_of(line.text, key));
      }
      provided[index - 1] = true;
      for (auto const& v : values) {
        if (!is_valid_name(v.text)) {
          throw ParseError("invalid chord name `" + std::string(v.text) + "`",
                           line.number,
                           v.column);
        }
        auto [it, inserted] = where.try_emplace(std::string(v.text), Where{line.number, v.column, 0});
        ++it->second.count;
        components[index - 1].emplace_back(v.text);
      }
    }
    if (k == 0) {
      throw ParseError("missing `components: <k>` header", 0, 0);
    }
    std::size_t given = std::count(provided.begin(), provided.end(), true);
    if (given != k) {
      throw ParseError("declared " + std::to_string(k) + " components but found "
                           + std::to_string(given),
                       0,
                       0);
    }
    for (auto const& [name, w] : where) {
      if (w.count != 2) {
        throw ParseError("chord `" + name + "` has " + std::to_string(w.count) + " endpoint"
                             + (w.count == 1 ? "" : "s"),
                         w.line,
                         w.column);
      }
    }
    return ChordDiagram(std::move(components));
  }

  ChordDiagram diagram_from_json(nlohmann::json const& j) {
    if (!j.is_object() || !j.contains("components") || !j["components"].is_array()) {
      throw ValidationError("expected an object with a `components` array");
    }
    std::vector<std::vector<std::string>> components;
    for (auto const& comp : j["components"]) {
      if (!comp.is_array()) {
        throw ValidationError("each component must be an array of chord names");
      }
      auto& seq = components.emplace_back();
      for (auto const& name : comp) {
        if (!name.is_string()) {
          throw ValidationError("chord names must be strings");
        }
        seq.push_back(name.get<std::string>());
      }
    }
    return ChordDiagram(std::move(components));
  }

  std::string to_text(ChordDiagram const& d) {
    std::string out = "components: " + std::to_string(d.num_components()) + "\n";
    for (Color c = 1; static_cast<std::size_t>(c) <= d.num_components(); ++c) {
      out += std::to_string(c) + ":";
      for (auto x : d.sequence(c)) {
        out += " " + d.name(x);
      }
      out += "\n";
    }
    return out;
  }

  nlohmann::json to_json(ChordDiagram const& d) {
    return {{"components", d.named_components()}};
  }

  ////////////////////////////////////////////////////////////////////////
  // Structural queries
  ////////////////////////////////////////////////////////////////////////

  LabelPair chord_label(ChordDiagram const& d, std::string_view chord) {
    return d.label(d.index_of(chord));
  }

  ColorGraph connection_graph(ChordDiagram const& d) {
    ColorGraph g(static_cast<int>(d.num_components()));
    for (ChordDiagram::Chord c = 0; c < d.degree(); ++c) {
      auto l = d.label(c);
      if (l.marked()) {
        g.add_edge(l.lo(), l.hi());
      }
    }
    return g;
  }

  bool is_connected(ChordDiagram const& d) {
    return connection_graph(d).is_connected();
  }

  bool is_share(ChordDiagram const& d, std::span<ChordDiagram::Chord const> chords) {
    if (chords.empty()) {
      throw ValidationError("a share needs at least one chord");
    }
    std::vector<bool> in(d.degree(), false);
    for (auto c : chords) {
      if (c >= d.degree()) {
        throw ValidationError("chord index out of range");
      }
      in[c] = true;
    }
    // Every arc may only hold chosen endpoints, so each maximal run of chosen
    // slots needs its own arc.
    std::size_t runs = 0;
    for (Color c = 1; static_cast<std::size_t>(c) <= d.num_components(); ++c) {
      bool inside = false;
      for (auto x : d.sequence(c)) {
        if (in[x] && !inside) {
          ++runs;
        }
        inside = in[x];
      }
    }
    return runs <= 2;
  }

  bool is_share(ChordDiagram const& d, std::set<std::string> const& chords) {
    std::vector<ChordDiagram::Chord> idx;
    for (auto const& name : chords) {
      idx.push_back(d.index_of(name));
    }
    return is_share(d, idx);
  }

  std::string canonical_diagram(ChordDiagram const& d) {
    // Chord indices already follow first appearance in component order.
    std::string out = std::to_string(d.num_components());
    for (Color c = 1; static_cast<std::size_t>(c) <= d.num_components(); ++c) {
      out += '|';
      bool first = true;
      for (auto x : d.sequence(c)) {
        if (!first) {
          out += ' ';
        }
        first = false;
        out += std::to_string(x);
      }
    }
    return out;
  }

}  // namespace chordweave
