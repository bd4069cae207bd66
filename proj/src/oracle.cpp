#include "chordweave/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <istream>
#include <numeric>
#include <ostream>
#include <thread>

#include "chordweave/error.hpp"
#include "chordweave/igraph.hpp"
#include "chordweave/realize.hpp"
#include "chordweave/recognize.hpp"
#include "chordweave/version.hpp"

namespace chordweave {

  namespace {

    std::string symbol_name(std::size_t i) {
      if (i < 26) {
        return std::string(1, static_cast<char>('a' + i));
      }
      return "c" + std::to_string(i);
    }

    // Matching words with symbols introduced in order 0, 1, 2, ...
    class WordWalker {
     public:
      WordWalker(int n, std::function<void(std::vector<int> const&)> visit)
          : _n(n), _visit(std::move(visit)), _open(n, 0) {
        _word.reserve(2 * n);
      }

      void run() {
        step(0);
      }

     private:
      void step(int next) {
        if (static_cast<int>(_word.size()) == 2 * _n) {
          _visit(_word);
          return;
        }
        if (next < _n) {
          _open[next] = 1;
          _word.push_back(next);
          step(next + 1);
          _word.pop_back();
          _open[next] = 0;
        }
        for (int s = 0; s < next; ++s) {
          if (_open[s]) {
            _open[s] = 0;
            _word.push_back(s);
            step(next);
            _word.pop_back();
            _open[s] = 1;
          }
        }
      }

      int                                           _n;
      std::function<void(std::vector<int> const&)> _visit;
      std::vector<int>                              _open;
      std::vector<int>                              _word;
    };

    // Weakly increasing cut points c_1 <= ... <= c_{k-1} in [0, len].
    void for_each_cut(std::size_t                                        len,
                      int                                                k,
                      std::function<void(std::vector<std::size_t> const&)> const& visit) {
      std::vector<std::size_t> cuts;
      std::function<void(std::size_t)> rec = [&](std::size_t low) {
        if (static_cast<int>(cuts.size()) == k - 1) {
          visit(cuts);
          return;
        }
        for (std::size_t c = low; c <= len; ++c) {
          cuts.push_back(c);
          rec(c);
          cuts.pop_back();
        }
      };
      rec(0);
    }

    void merge_into(CensusTable& into, CensusTable&& part) {
      into.diagrams += part.diagrams;
      into.connected += part.connected;
      into.tree_producing += part.tree_producing;
      into.entries.merge(part.entries);
    }

    std::vector<std::vector<int>> permutations(int c) {
      std::vector<int> p(c);
      std::iota(p.begin(), p.end(), 1);
      std::vector<std::vector<int>> out;
      do {
        out.push_back(p);
      } while (std::next_permutation(p.begin(), p.end()));
      return out;
    }

    // Free trees on v vertices as edge lists, one per isomorphism class.
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> free_trees(int v) {
      std::vector<std::vector<std::pair<std::size_t, std::size_t>>> out;
      if (v == 1) {
        out.emplace_back();
        return out;
      }
      if (v == 2) {
        out.push_back({{0, 1}});
        return out;
      }
      std::set<std::string>    seen;
      std::vector<std::size_t> code(v - 2, 0);
      std::vector<Vertex>      plain;
      for (int i = 0; i < v; ++i) {
        plain.push_back({symbol_name(i), LabelPair(1, 1)});
      }
      while (true) {
        // Prufer decoding.
        std::vector<int> deg(v, 1);
        for (auto x : code) {
          ++deg[x];
        }
        std::vector<std::pair<std::size_t, std::size_t>> edges;
        for (auto x : code) {
          for (std::size_t leaf = 0; leaf < static_cast<std::size_t>(v); ++leaf) {
            if (deg[leaf] == 1) {
              edges.emplace_back(leaf, x);
              --deg[leaf];
              --deg[x];
              break;
            }
          }
        }
        std::vector<std::size_t> last;
        for (std::size_t u = 0; u < static_cast<std::size_t>(v); ++u) {
          if (deg[u] == 1) {
            last.push_back(u);
          }
        }
        edges.emplace_back(last[0], last[1]);

        std::vector<TreeEdge> te;
        for (auto [a, b] : edges) {
          te.push_back({a, b, EdgeState::undirected});
        }
        if (seen.insert(canonical_tree(DLTree(plain, te))).second) {
          out.push_back(std::move(edges));
        }

        std::size_t i = 0;
        while (i < code.size() && ++code[i] == static_cast<std::size_t>(v)) {
          code[i++] = 0;
        }
        if (i == code.size()) {
          break;
        }
      }
      return out;
    }

    template <typename Work>
    void run_jobs(unsigned jobs, Work work) {
      jobs = std::max(1u, jobs);
      if (jobs == 1) {
        work(0u, 1u);
        return;
      }
      std::vector<std::thread>        pool;
      std::vector<std::exception_ptr> errors(jobs);
      for (unsigned j = 0; j < jobs; ++j) {
        pool.emplace_back([&, j] {
          try {
            work(j, jobs);
          } catch (...) {
            errors[j] = std::current_exception();
          }
        });
      }
      for (auto& th : pool) {
        th.join();
      }
      for (auto& e : errors) {
        if (e) {
          std::rethrow_exception(e);
        }
      }
    }

  }  // namespace

  GuardRails GuardRails::from_environment() {
    GuardRails r;
    if (char const* env = std::getenv("CHORDWEAVE_GUARD_OVERRIDE")) {
      r.override_limits = std::string_view(env) == "1";
    }
    return r;
  }

  void GuardRails::check(int chords, int components) const {
    if (chords < 1 || components < 1) {
      throw ValidationError("chord and component counts must be positive");
    }
    if (override_limits) {
      return;
    }
    if (chords > max_chords || components > max_components) {
      throw GuardRailError("enumeration of " + std::to_string(chords) + " chords on "
                           + std::to_string(components) + " components exceeds the limits ("
                           + std::to_string(max_chords) + " chords, "
                           + std::to_string(max_components)
                           + " components); set CHORDWEAVE_GUARD_OVERRIDE=1 to lift them");
    }
  }

  void for_each_diagram(int                                      n,
                        int                                      k,
                        std::function<void(ChordDiagram const&)> visit,
                        unsigned                                 shard,
                        unsigned                                 shards) {
    if (n < 1 || k < 1) {
      throw ValidationError("chord and component counts must be positive");
    }
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i) {
      names.push_back(symbol_name(i));
    }
    std::uint64_t index = 0;
    WordWalker    walker(n, [&](std::vector<int> const& word) {
      if (index++ % shards != shard) {
        return;
      }
      for_each_cut(word.size(), k, [&](std::vector<std::size_t> const& cuts) {
        std::vector<std::vector<std::string>> comps(k);
        std::size_t                           c = 0;
        for (std::size_t p = 0; p < word.size(); ++p) {
          while (c < cuts.size() && cuts[c] <= p) {
            ++c;
          }
          comps[c].push_back(names[word[p]]);
        }
        visit(ChordDiagram(std::move(comps)));
      });
    });
    walker.run();
  }

  std::vector<ChordDiagram> enumerate_diagrams(int n, int k) {
    std::vector<ChordDiagram> out;
    for_each_diagram(n, k, [&out](ChordDiagram const& d) { out.push_back(d); });
    return out;
  }

  CensusTable census(int n, int k, bool connected_only, unsigned jobs, GuardRails const& rails) {
    rails.check(n, k);
    jobs = std::max(1u, jobs);
    std::vector<CensusTable> parts(jobs);
    run_jobs(jobs, [&](unsigned shard, unsigned shards) {
      auto& part = parts[shard];
      for_each_diagram(
          n, k,
          [&](ChordDiagram const& d) {
            bool conn = is_connected(d);
            if (connected_only && !conn) {
              return;
            }
            ++part.diagrams;
            part.connected += conn ? 1 : 0;
            auto g = gamma(d);
            if (g.edges().size() + 1 != g.size()) {
              return;
            }
            if (auto t = as_tree(g)) {
              ++part.tree_producing;
              part.entries.insert(canonical_tree(*t));
            }
          },
          shard, shards);
    });
    CensusTable table;
    table.chords         = n;
    table.components     = k;
    table.connected_only = connected_only;
    for (auto& p : parts) {
      merge_into(table, std::move(p));
    }
    return table;
  }

  nlohmann::json to_json(CensusTable const& table, bool with_entries) {
    nlohmann::json j{
        {"schema", 1},
        {"tool", "chordweave"},
        {"version", std::string(version)},
        {"chords", table.chords},
        {"components", table.components},
        {"connected_only", table.connected_only},
        {"diagrams", table.diagrams},
        {"connected", table.connected},
        {"tree_producing", table.tree_producing},
        {"entries", table.entries.size()},
    };
    if (with_entries) {
      j["trees"] = table.entries;
    }
    return j;
  }

  void write_census(std::ostream& out, CensusTable const& table) {
    out << to_json(table, false).dump() << '\n';
    for (auto const& e : table.entries) {
      out << e << '\n';
    }
  }

  CensusTable read_census(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) {
      throw ParseError("empty census file", 1, 1);
    }
    CensusTable t;
    try {
      auto h = nlohmann::json::parse(line);
      if (h.at("schema").get<int>() != 1) {
        throw ParseError("unsupported census schema", 1, 1);
      }
      t.chords         = h.at("chords").get<int>();
      t.components     = h.at("components").get<int>();
      t.connected_only = h.at("connected_only").get<bool>();
      t.diagrams       = h.at("diagrams").get<std::uint64_t>();
      t.connected      = h.at("connected").get<std::uint64_t>();
      t.tree_producing = h.at("tree_producing").get<std::uint64_t>();
      std::size_t expected = h.at("entries").get<std::size_t>();
      std::size_t number   = 1;
      while (std::getline(in, line)) {
        ++number;
        if (line.empty()) {
          continue;
        }
        if (!t.entries.insert(line).second) {
          throw ParseError("duplicate census entry", number, 1);
        }
      }
      if (t.entries.size() != expected) {
        throw ParseError("census header announces " + std::to_string(expected)
                             + " entries but the file has " + std::to_string(t.entries.size()),
                         1, 1);
      }
    } catch (nlohmann::json::exception const& e) {
      throw ParseError(std::string("census header: ") + e.what(), 1, 1);
    }
    return t;
  }

  Oracle::Oracle(GuardRails rails, unsigned jobs) : _rails(rails), _jobs(std::max(1u, jobs)) {}

  CensusTable const& Oracle::table(int n, int k, bool connected_only) {
    _rails.check(n, k);
    std::lock_guard lock(_mutex);
    auto&           slot = _tables[{n, k, connected_only}];
    if (!slot) {
      slot = std::make_unique<CensusTable>(census(n, k, connected_only, _jobs, _rails));
    }
    return *slot;
  }

  bool Oracle::recognize(DLTree const& t) {
    auto const td = recolor(t, dense_colors(t));
    int const  c  = static_cast<int>(td.colors().size());
    int const  n  = static_cast<int>(td.size());
    if (c <= 2) {
      auto const& table = this->table(n, 2, false);
      if (table.contains(canonical_tree(td))) {
        return true;
      }
      std::map<Color, Color> swap{{1, 2}};
      if (c == 2) {
        swap[2] = 1;
      }
      return table.contains(canonical_tree(recolor(td, swap)));
    }
    auto const& table = this->table(n, c, true);
    for (auto const& p : permutations(c)) {
      std::map<Color, Color> m;
      for (int i = 0; i < c; ++i) {
        m[i + 1] = p[i];
      }
      if (table.contains(canonical_tree(recolor(td, m)))) {
        return true;
      }
    }
    return false;
  }

  bool oracle_recognize(DLTree const& t) {
    static Oracle shared;
    return shared.recognize(t);
  }

  std::vector<DLTree> all_trees(int max_vertices, int colors) {
    if (max_vertices < 1 || colors < 1) {
      throw ValidationError("vertex and color budgets must be positive");
    }
    std::vector<LabelPair> labels;
    for (Color i = 1; i <= colors; ++i) {
      for (Color j = i; j <= colors; ++j) {
        labels.emplace_back(i, j);
      }
    }
    constexpr EdgeState states[] = {EdgeState::undirected, EdgeState::forward,
                                    EdgeState::backward};
    std::set<std::string> seen;
    std::vector<DLTree>   out;
    for (int v = 1; v <= max_vertices; ++v) {
      for (auto const& shape : free_trees(v)) {
        std::vector<std::size_t> lab(v, 0);
        while (true) {
          unsigned used = 0;
          for (auto l : lab) {
            used |= 1u << labels[l].lo();
            used |= 1u << labels[l].hi();
          }
          int  count = std::popcount(used);
          bool fits  = colors <= 2 ? true : count == colors;
          if (fits) {
            std::vector<Vertex> vs;
            for (int i = 0; i < v; ++i) {
              vs.push_back({symbol_name(i), labels[lab[i]]});
            }
            std::vector<std::size_t> st(shape.size(), 0);
            while (true) {
              std::vector<TreeEdge> te;
              for (std::size_t e = 0; e < shape.size(); ++e) {
                te.push_back({shape[e].first, shape[e].second, states[st[e]]});
              }
              DLTree t(vs, std::move(te));
              if (seen.insert(canonical_tree(t)).second) {
                out.push_back(std::move(t));
              }
              std::size_t i = 0;
              while (i < st.size() && ++st[i] == 3) {
                st[i++] = 0;
              }
              if (i == st.size()) {
                break;
              }
            }
          }
          std::size_t i = 0;
          while (i < lab.size() && ++lab[i] == labels.size()) {
            lab[i++] = 0;
          }
          if (i == lab.size()) {
            break;
          }
        }
      }
    }
    return out;
  }

  CrossReport cross_validate(std::vector<DLTree> const& trees, Oracle& oracle) {
    unsigned const           jobs = oracle.jobs();
    std::vector<CrossReport> parts(jobs);
    run_jobs(jobs, [&](unsigned shard, unsigned shards) {
      auto& part = parts[shard];
      for (std::size_t i = shard; i < trees.size(); i += shards) {
        auto const& t = trees[i];
        ++part.trees;
        auto verdict = recognize(t);
        bool truth   = oracle.recognize(t);
        if (verdict.accepted != truth) {
          part.mismatches.push_back({to_text(t), verdict.accepted, truth, verdict.reason});
        }
        if (!verdict.accepted) {
          continue;
        }
        ++part.accepted;
        try {
          auto g = as_tree(gamma(realize(t)));
          if (!g || !tree_iso(*g, t)) {
            part.roundtrip_failures.push_back(to_text(t) + "not isomorphic after realize");
          }
        } catch (Error const& e) {
          part.roundtrip_failures.push_back(to_text(t) + e.what());
        }
      }
    });
    CrossReport report;
    for (auto& p : parts) {
      report.trees += p.trees;
      report.accepted += p.accepted;
      std::move(p.mismatches.begin(), p.mismatches.end(), std::back_inserter(report.mismatches));
      std::move(p.roundtrip_failures.begin(), p.roundtrip_failures.end(),
                std::back_inserter(report.roundtrip_failures));
    }
    return report;
  }

  CrossReport cross_validate(int max_vertices, int colors, Oracle& oracle) {
    oracle.rails().check(max_vertices, std::max(colors, 2));
    return cross_validate(all_trees(max_vertices, colors), oracle);
  }

  nlohmann::json to_json(CrossReport const& report) {
    nlohmann::json mismatches = nlohmann::json::array();
    for (auto const& m : report.mismatches) {
      mismatches.push_back(
          {{"tree", m.tree}, {"recognize", m.recognized}, {"oracle", m.oracle}, {"reason", m.reason}});
    }
    return {
        {"schema", 1},
        {"passed", report.passed()},
        {"trees", report.trees},
        {"accepted", report.accepted},
        {"mismatches", mismatches},
        {"roundtrip_failures", report.roundtrip_failures},
    };
  }

}  // namespace chordweave
