#ifndef CHORDWEAVE_VERSION_HPP_
#define CHORDWEAVE_VERSION_HPP_

#include <string_view>

namespace chordweave {

  inline constexpr std::string_view version = "0.1.0";

}  // namespace chordweave

#endif  // CHORDWEAVE_VERSION_HPP_
