#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"

#include "chordweave/diagram.hpp"
#include "chordweave/error.hpp"
#include "chordweave/igraph.hpp"
#include "chordweave/oracle.hpp"
#include "chordweave/realize.hpp"
#include "chordweave/recognize.hpp"
#include "chordweave/sample.hpp"
#include "chordweave/tree.hpp"
#include "chordweave/version.hpp"

namespace chordweave::cli {

  namespace {

    std::string slurp(std::string const& path) {
      std::ifstream in(path, std::ios::binary);
      if (!in) {
        throw Error("cannot open `" + path + "`");
      }
      std::ostringstream s;
      s << in.rdbuf();
      return s.str();
    }

    bool looks_like_json(std::string const& text) {
      auto p = text.find_first_not_of(" \t\r\n");
      return p != std::string::npos && text[p] == '{';
    }

    ChordDiagram load_diagram(std::string const& path) {
      auto text = slurp(path);
      return looks_like_json(text) ? diagram_from_json(nlohmann::json::parse(text))
                                   : parse_diagram(text);
    }

    DLTree load_tree(std::string const& path) {
      auto text = slurp(path);
      return looks_like_json(text) ? tree_from_json(nlohmann::json::parse(text)) : parse_tree(text);
    }

    nlohmann::json diagram_json(ChordDiagram const& d) {
      auto j      = to_json(d);
      j["schema"] = 1;
      return j;
    }

    GuardRails rails_for(bool override_flag) {
      auto r = GuardRails::from_environment();
      r.override_limits |= override_flag;
      return r;
    }

  }  // namespace

  int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Intersection graphs of string-link chord diagrams", "chordweave"};
    app.set_version_flag("--version", std::string(version));
    app.require_subcommand(1);

    std::string file;
    std::string output;
    bool        json     = false;
    bool        dot      = false;
    bool        as_tree_ = false;
    bool        connected = false;
    bool        override_flag = false;
    int         chords   = 0;
    int         components = 0;
    int         max_vertices = 0;
    int         colors   = 2;
    unsigned    jobs     = 1;
    std::uint64_t seed   = 0;

    auto* gamma_cmd = app.add_subcommand("gamma", "Print the intersection graph of a diagram");
    gamma_cmd->add_option("file", file, "Diagram (.cd or JSON)")->required();
    auto* g_dot  = gamma_cmd->add_flag("--dot", dot, "Graphviz output");
    auto* g_json = gamma_cmd->add_flag("--json", json, "JSON output");
    auto* g_tree = gamma_cmd->add_flag("--tree", as_tree_, "Print as a .tree file; fails unless a tree");
    g_dot->excludes(g_json)->excludes(g_tree);
    g_json->excludes(g_tree);

    auto* check_cmd = app.add_subcommand("check", "Decide whether a tree is an intersection graph");
    check_cmd->add_option("file", file, "Tree (.tree or JSON)")->required();
    check_cmd->add_flag("--json", json, "JSON verdict");

    auto* realize_cmd = app.add_subcommand("realize", "Build a diagram for an accepted tree");
    realize_cmd->add_option("file", file, "Tree (.tree or JSON)")->required();
    realize_cmd->add_option("-o,--output", output, "Write the diagram here instead of stdout");
    realize_cmd->add_flag("--json", json, "JSON diagram");

    auto* roundtrip_cmd =
        app.add_subcommand("roundtrip", "Realize a tree and compare its intersection graph");
    roundtrip_cmd->add_option("file", file, "Tree (.tree or JSON)")->required();

    auto* census_cmd = app.add_subcommand("census", "Enumerate all diagrams and collect tree graphs");
    census_cmd->add_option("--chords", chords, "Number of chords")->required()->check(CLI::PositiveNumber);
    census_cmd->add_option("--components", components, "Number of components")
        ->required()
        ->check(CLI::PositiveNumber);
    census_cmd->add_flag("--connected", connected, "Only diagrams with a connected connection graph");
    census_cmd->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
    census_cmd->add_option("-o,--output", output, "Write the census file here");
    census_cmd->add_flag("--json", json, "JSON summary with entries");
    census_cmd->add_flag("--override-guard", override_flag, "Lift the enumeration limits");

    auto* verify_cmd =
        app.add_subcommand("verify-oracle", "Compare recognition with exhaustive enumeration");
    verify_cmd->add_option("--max-vertices", max_vertices, "Largest tree size")
        ->required()
        ->check(CLI::PositiveNumber);
    verify_cmd->add_option("--colors", colors, "Color budget")->required()->check(CLI::PositiveNumber);
    verify_cmd->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
    verify_cmd->add_flag("--json", json, "JSON report");
    verify_cmd->add_flag("--override-guard", override_flag, "Lift the enumeration limits");

    auto* random_cmd = app.add_subcommand("random-tree", "Print a random accepted tree");
    random_cmd->add_option("--seed", seed, "Generator seed")->required();
    max_vertices = 0;
    random_cmd->add_option("--max-vertices", max_vertices, "Vertex budget (default 12)")
        ->check(CLI::PositiveNumber);
    random_cmd->add_option("--colors", colors, "2, or the largest color count (at least 3)")
        ->check(CLI::Range(2, 64));

    try {
      std::vector<std::string> reversed(args.rbegin(), args.rend());
      app.parse(reversed);
    } catch (CLI::CallForHelp const&) {
      out << app.help();
      return ok;
    } catch (CLI::CallForVersion const&) {
      out << version << '\n';
      return ok;
    } catch (CLI::ParseError const& e) {
      err << "error: " << e.what() << '\n';
      if (auto* sub = app.get_subcommands().empty() ? nullptr : app.get_subcommands().front()) {
        err << sub->help();
      } else {
        err << app.help();
      }
      return usage;
    }

    try {
      if (gamma_cmd->parsed()) {
        auto g = gamma(load_diagram(file));
        if (dot) {
          out << to_dot(g);
        } else if (json) {
          out << to_json(g).dump(2) << '\n';
        } else if (as_tree_) {
          auto t = as_tree(g);
          if (!t) {
            err << "error: the intersection graph is not a tree\n";
            return failure;
          }
          out << to_text(*t);
        } else {
          out << to_text(g);
        }
        return ok;
      }

      if (check_cmd->parsed()) {
        auto v = recognize(load_tree(file));
        if (json) {
          out << to_json(v).dump(2) << '\n';
        } else {
          out << explain(v);
        }
        return v.accepted ? ok : rejected;
      }

      if (realize_cmd->parsed()) {
        auto t = load_tree(file);
        auto v = recognize(t);
        if (!v.accepted) {
          err << "error: tree rejected\n" << explain(v);
          return rejected;
        }
        auto d    = realize(t);
        auto text = json ? diagram_json(d).dump(2) + "\n" : to_text(d);
        if (output.empty()) {
          out << text;
        } else {
          std::ofstream f(output, std::ios::binary);
          if (!(f << text)) {
            throw Error("cannot write `" + output + "`");
          }
        }
        return ok;
      }

      if (roundtrip_cmd->parsed()) {
        auto t = load_tree(file);
        auto v = recognize(t);
        if (!v.accepted) {
          out << "REJECT " << v.reason << '\n';
          return rejected;
        }
        try {
          auto g = as_tree(gamma(realize(t)));
          if (g && tree_iso(*g, t)) {
            out << "ISO\n";
            return ok;
          }
          out << "FAIL: intersection graph differs from the input\n";
        } catch (RealizationError const& e) {
          out << "FAIL: " << e.what() << '\n';
        }
        return failure;
      }

      if (census_cmd->parsed()) {
        auto table = census(chords, components, connected, jobs, rails_for(override_flag));
        if (!output.empty()) {
          std::ofstream f(output, std::ios::binary);
          write_census(f, table);
          if (!f) {
            throw Error("cannot write `" + output + "`");
          }
        }
        if (json) {
          out << to_json(table, true).dump(2) << '\n';
        } else {
          out << "chords: " << table.chords << '\n'
              << "components: " << table.components << '\n'
              << "connected only: " << (table.connected_only ? "yes" : "no") << '\n'
              << "diagrams: " << table.diagrams << '\n'
              << "connected: " << table.connected << '\n'
              << "tree-producing: " << table.tree_producing << '\n'
              << "distinct trees: " << table.entries.size() << '\n';
          for (auto const& e : table.entries) {
            out << e << '\n';
          }
        }
        return ok;
      }

      if (verify_cmd->parsed()) {
        Oracle oracle(rails_for(override_flag), jobs);
        auto   report = cross_validate(max_vertices, colors, oracle);
        if (json) {
          out << to_json(report).dump(2) << '\n';
        } else {
          out << "trees: " << report.trees << '\n'
              << "accepted: " << report.accepted << '\n'
              << "mismatches: " << report.mismatches.size() << '\n'
              << "roundtrip failures: " << report.roundtrip_failures.size() << '\n';
          for (auto const& m : report.mismatches) {
            out << "mismatch (recognize " << (m.recognized ? "accepts" : "rejects") << ", oracle "
                << (m.oracle ? "accepts" : "rejects") << ", " << m.reason << "):\n"
                << m.tree;
          }
          for (auto const& f : report.roundtrip_failures) {
            out << "roundtrip failure:\n" << f << '\n';
          }
          out << (report.passed() ? "PASS" : "FAIL") << '\n';
        }
        return report.passed() ? ok : mismatch;
      }

      if (random_cmd->parsed()) {
        std::mt19937_64 rng(seed);
        std::size_t     budget = max_vertices > 0 ? static_cast<std::size_t>(max_vertices) : 12;
        auto t = colors <= 2 ? random_two_color_tree(rng, budget)
                             : random_multi_color_tree(rng, budget, colors);
        out << to_text(t);
        return ok;
      }
    } catch (GuardRailError const& e) {
      err << "error: " << e.what() << '\n';
      return guard_rail;
    } catch (ParseError const& e) {
      err << "error: " << file << ": " << e.what() << '\n';
      return failure;
    } catch (Error const& e) {
      err << "error: " << e.what() << '\n';
      return failure;
    } catch (nlohmann::json::exception const& e) {
      err << "error: " << file << ": " << e.what() << '\n';
      return failure;
    }
    return usage;
  }

}  // namespace chordweave::cli
