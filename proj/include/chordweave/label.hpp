#ifndef CHORDWEAVE_LABEL_HPP_
#define CHORDWEAVE_LABEL_HPP_

#include <algorithm>
#include <compare>
#include <string>

namespace chordweave {

  //! Component index, 1-based. Components are also called colors.
  using Color = int;

  //! Unordered pair of colors carried by a chord, stored with lo <= hi.
  //!
  //! A label is *marked* when its two colors differ, i.e. the chord joins
  //! two different components.
  class LabelPair {
   public:
    constexpr LabelPair() = default;
    constexpr LabelPair(Color a, Color b)
        : _lo(std::min(a, b)), _hi(std::max(a, b)) {}

    [[nodiscard]] constexpr Color lo() const noexcept {
      return _lo;
    }
    [[nodiscard]] constexpr Color hi() const noexcept {
      return _hi;
    }
    [[nodiscard]] constexpr bool marked() const noexcept {
      return _lo != _hi;
    }
    [[nodiscard]] constexpr bool has(Color c) const noexcept {
      return _lo == c || _hi == c;
    }
    //! Number of times c occurs in the pair (0, 1 or 2).
    [[nodiscard]] constexpr int occurrences(Color c) const noexcept {
      return (_lo == c ? 1 : 0) + (_hi == c ? 1 : 0);
    }
    [[nodiscard]] constexpr bool shares_color(LabelPair const& other) const noexcept {
      return other.has(_lo) || other.has(_hi);
    }

    [[nodiscard]] std::string to_string() const {
      return "{" + std::to_string(_lo) + "," + std::to_string(_hi) + "}";
    }

    constexpr auto operator<=>(LabelPair const&) const = default;

   private:
    Color _lo = 1;
    Color _hi = 1;
  };

}  // namespace chordweave

#endif  // CHORDWEAVE_LABEL_HPP_
