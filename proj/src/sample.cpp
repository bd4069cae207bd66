#include "chordweave/sample.hpp"

#include <algorithm>
#include <numeric>

#include "chordweave/error.hpp"

namespace chordweave {

  namespace {

    std::size_t pick(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
      return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
    }

    bool coin(std::mt19937_64& rng, double p) {
      return std::bernoulli_distribution(p)(rng);
    }

    // Vertex/edge buffer with ids assigned at the end.
    struct Draft {
      std::vector<LabelPair> labels;
      std::vector<TreeEdge>  edges;

      std::size_t add(LabelPair l) {
        labels.push_back(l);
        return labels.size() - 1;
      }

      void link(std::size_t a, std::size_t b, EdgeState s = EdgeState::undirected) {
        edges.push_back({a, b, s});
      }

      // Hangs a random unmarked tree of `size` vertices labeled {c,c} off
      // `anchor`.
      void grow_branch(std::mt19937_64& rng, std::size_t anchor, Color c, std::size_t size) {
        std::vector<std::size_t> mine;
        for (std::size_t i = 0; i < size; ++i) {
          auto parent = mine.empty() ? anchor : mine[pick(rng, 0, mine.size() - 1)];
          auto v      = add(LabelPair(c, c));
          link(parent, v);
          mine.push_back(v);
        }
      }

      DLTree finish(std::mt19937_64& rng) const {
        std::vector<std::size_t> perm(labels.size());
        std::iota(perm.begin(), perm.end(), 1);
        std::shuffle(perm.begin(), perm.end(), rng);
        std::vector<Vertex> vs;
        for (std::size_t i = 0; i < labels.size(); ++i) {
          vs.push_back({"v" + std::to_string(perm[i]), labels[i]});
        }
        auto es = edges;
        std::shuffle(es.begin(), es.end(), rng);
        return DLTree(std::move(vs), std::move(es));
      }
    };

  }  // namespace

  DLTree random_two_color_tree(std::mt19937_64& rng, std::size_t max_vertices) {
    if (max_vertices < 1) {
      throw ValidationError("a tree needs at least one vertex");
    }
    Draft              d;
    LabelPair const    m(1, 2);
    std::size_t const  length = pick(rng, 1, std::max<std::size_t>(1, max_vertices / 2));
    std::vector<std::size_t> spine;
    // Label of the next unmarked spine vertex; flips after each marked one.
    Color next_plain = static_cast<Color>(pick(rng, 1, 2));
    for (std::size_t i = 0; i < length; ++i) {
      bool end    = i == 0 || i + 1 == length;
      bool marked = end || coin(rng, 0.3);
      auto v      = d.add(marked ? m : LabelPair(next_plain, next_plain));
      if (marked && i > 0) {
        next_plain = next_plain == 1 ? 2 : 1;
      }
      if (i > 0) {
        d.link(spine.back(), v);
      }
      spine.push_back(v);
    }
    for (std::size_t i = 1; i + 1 < spine.size() && d.labels.size() < max_vertices; ++i) {
      if (coin(rng, 0.3)) {
        d.link(spine[i], d.add(m));
      }
    }
    while (d.labels.size() < max_vertices && coin(rng, 0.7)) {
      auto        anchor = pick(rng, 0, d.labels.size() - 1);
      auto        l      = d.labels[anchor];
      Color       c      = l.marked() ? static_cast<Color>(pick(rng, 1, 2)) : l.lo();
      std::size_t room   = max_vertices - d.labels.size();
      d.grow_branch(rng, anchor, c, pick(rng, 1, std::min<std::size_t>(room, 4)));
    }
    return d.finish(rng);
  }

  DLTree random_multi_color_tree(std::mt19937_64& rng, std::size_t max_vertices, int max_colors) {
    if (max_colors < 3) {
      throw ValidationError("the multi-color sampler needs at least 3 colors");
    }
    if (max_vertices < static_cast<std::size_t>(max_colors - 1)) {
      throw ValidationError("too few vertices for the marked chain");
    }
    Color const n = static_cast<Color>(pick(rng, 3, max_colors));
    Draft       d;
    std::vector<std::vector<std::size_t>> groups(n);  // groups[p]: labels {p, p+1}
    for (Color p = 1; p < n; ++p) {
      groups[p].push_back(d.add(LabelPair(p, p + 1)));
    }
    // Extra parallel chords at the two ends of the chain; for three colors
    // only one end may have them.
    auto budget = [&] { return max_vertices - d.labels.size(); };
    for (Color p : {Color(1), Color(n - 1)}) {
      if (n == 3 && p == 2 && groups[1].size() > 1) {
        break;
      }
      auto extra = pick(rng, 0, std::min<std::size_t>(2, budget()));
      for (std::size_t i = 0; i < extra; ++i) {
        groups[p].push_back(d.add(LabelPair(p, p + 1)));
      }
    }
    auto direction = [&rng] { return coin(rng, 0.5) ? EdgeState::forward : EdgeState::backward; };
    for (Color p = 1; p + 1 < n; ++p) {
      auto const& a = groups[p];
      auto const& b = groups[p + 1];
      if (a.size() == 1) {
        for (auto x : b) {
          d.link(a.front(), x, direction());
        }
      } else {
        for (auto x : a) {
          d.link(x, b.front(), direction());
        }
      }
    }
    std::size_t const marked = d.labels.size();
    while (budget() > 0 && coin(rng, 0.7)) {
      auto  anchor = pick(rng, 0, marked - 1);
      auto  l      = d.labels[anchor];
      Color c      = coin(rng, 0.5) ? l.lo() : l.hi();
      d.grow_branch(rng, anchor, c, pick(rng, 1, std::min<std::size_t>(budget(), 4)));
    }
    // Random relabeling of the colors.
    std::vector<Color> perm(n);
    std::iota(perm.begin(), perm.end(), 1);
    std::shuffle(perm.begin(), perm.end(), rng);
    for (auto& l : d.labels) {
      l = LabelPair(perm[l.lo() - 1], perm[l.hi() - 1]);
    }
    return d.finish(rng);
  }

  ChordDiagram random_diagram(std::mt19937_64& rng, int max_chords, int max_components) {
    if (max_chords < 1 || max_components < 1) {
      throw ValidationError("chord and component counts must be positive");
    }
    auto n = pick(rng, 1, max_chords);
    auto k = pick(rng, 1, max_components);
    std::vector<std::string> word;
    for (std::size_t i = 0; i < n; ++i) {
      auto name = "c" + std::to_string(i);
      word.push_back(name);
      word.push_back(name);
    }
    std::shuffle(word.begin(), word.end(), rng);
    std::vector<std::size_t> cuts;
    for (std::size_t i = 1; i < k; ++i) {
      cuts.push_back(pick(rng, 0, word.size()));
    }
    std::sort(cuts.begin(), cuts.end());
    std::vector<std::vector<std::string>> comps(k);
    std::size_t                           c = 0;
    for (std::size_t p = 0; p < word.size(); ++p) {
      while (c < cuts.size() && cuts[c] <= p) {
        ++c;
      }
      comps[c].push_back(word[p]);
    }
    return ChordDiagram(std::move(comps));
  }

}  // namespace chordweave
