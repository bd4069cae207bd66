#ifndef CHORDWEAVE_SAMPLE_HPP_
#define CHORDWEAVE_SAMPLE_HPP_

#include <cstddef>
#include <random>

#include "chordweave/diagram.hpp"
#include "chordweave/tree.hpp"

namespace chordweave {

  //! Random test inputs. All generators draw only from the given engine, so
  //! a fixed seed reproduces the same sequence on a given standard library.

  //! A tree on colors 1 and 2 built to pass the two-color test: a spine with
  //! parity-consistent unmarked labels, marked ribs on interior spine
  //! vertices, and unmarked branches. At most `max_vertices` vertices.
  [[nodiscard]] DLTree random_two_color_tree(std::mt19937_64& rng, std::size_t max_vertices);

  //! A tree on 3..max_colors colors built to pass the multi-color test: the
  //! marked chain with random edge directions, unmarked branches on marked
  //! vertices, and a random color permutation.
  [[nodiscard]] DLTree random_multi_color_tree(std::mt19937_64& rng,
                                               std::size_t      max_vertices,
                                               int              max_colors);

  //! Uniform endpoint word over 1..max_chords chords, cut into
  //! 1..max_components components.
  [[nodiscard]] ChordDiagram random_diagram(std::mt19937_64& rng,
                                            int              max_chords,
                                            int              max_components);

}  // namespace chordweave

#endif  // CHORDWEAVE_SAMPLE_HPP_
