#ifndef CHORDWEAVE_REALIZE_HPP_
#define CHORDWEAVE_REALIZE_HPP_

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "chordweave/diagram.hpp"
#include "chordweave/recognize.hpp"
#include "chordweave/tree.hpp"

namespace chordweave {

  //! Barbell word of an unmarked tree rooted at `root`:
  //!
  //!     word(v) = v c1 ... ck v W(ck) ... W(c1)
  //!     W(c)    = d1 ... dm c W(dm) ... W(d1)
  //!
  //! where c1..ck are the children of v in id order. Every child crosses its
  //! parent and no other chord; all letters after the first are contiguous.
  [[nodiscard]] std::vector<std::string> barbell_word(DLTree const& t, std::size_t root);

  //! Single-component diagram whose intersection graph is the unmarked tree
  //! t (after mapping its one color to component 1).
  [[nodiscard]] ChordDiagram realize_unmarked(DLTree const& t, std::size_t root);

  //! Two-component diagram whose intersection graph is the path `path`
  //! (vertex indices into t; colors 1 and 2; ends marked unless the path is a
  //! single vertex). Every new chord only meets the previous one, and each
  //! marked chord moves the growth point to the other component, so the
  //! unmarked labels must alternate with the parity of marked vertices.
  //! Throws RealizationError when they do not.
  [[nodiscard]] ChordDiagram realize_spine(DLTree const& t, std::span<std::size_t const> path);

  //! Adds a marked chord `rib` (component 1 to component 2) crossing `anchor`
  //! and nothing else. `spine` lists the chords of the current spine in path
  //! order; the anchor must be one of its interior chords. The placement is
  //! the first gap pair, in (component-1 gap, component-2 gap) order, whose
  //! parities meet only the anchor.
  [[nodiscard]] ChordDiagram attach_rib(ChordDiagram const&            d,
                                        std::span<std::string const>   spine,
                                        std::string_view               anchor,
                                        std::string_view               rib);

  //! Inserts the barbell of the unmarked tree `c` rooted at `root` around the
  //! lowest endpoint of chord `anchor` on component `comp`: the root's first
  //! endpoint just below it, the rest of the word just above it. Every label
  //! of `c` must be {comp, comp}. The only new edge to old chords is
  //! anchor -- root.
  [[nodiscard]] ChordDiagram attach_barbell(ChordDiagram const& d,
                                            std::string_view    anchor,
                                            Color               comp,
                                            DLTree const&       c,
                                            std::size_t         root);

  //! Two-color construction for a tree accepted by check_labeled_2. The
  //! result has at least two components.
  [[nodiscard]] ChordDiagram realize_2(DLTree const& t, Verdict const& verdict);

  //! Construction for a tree accepted by check_multi: the marked skeleton
  //! along the verdict's color order, then barbells for unmarked branches.
  [[nodiscard]] ChordDiagram realize_multi(DLTree const& t, Verdict const& verdict);

  //! Recognizes t and dispatches. The result has as many components as the
  //! largest color used, and its intersection graph is isomorphic to t.
  //! Throws ValidationError if t is rejected.
  [[nodiscard]] ChordDiagram realize(DLTree const& t);

}  // namespace chordweave

#endif  // CHORDWEAVE_REALIZE_HPP_
