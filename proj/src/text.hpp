// Line scanner shared by the `.cd` and `.tree` parsers.

#ifndef CHORDWEAVE_SRC_TEXT_HPP_
#define CHORDWEAVE_SRC_TEXT_HPP_

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "chordweave/error.hpp"

namespace chordweave::detail {

  struct Token {
    std::string_view text;
    std::size_t      column;  // 1-based
  };

  struct Line {
    std::size_t        number;  // 1-based
    std::string_view   text;    // comment stripped
    std::vector<Token> tokens;  // whitespace separated
  };

  inline std::vector<Token> tokenize(std::string_view text) {
    std::vector<Token> out;
    std::size_t        i = 0;
    while (i < text.size()) {
      while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) {
        ++i;
      }
      if (i == text.size()) {
        break;
      }
      std::size_t start = i;
      while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) {
        ++i;
      }
      out.push_back({text.substr(start, i - start), start + 1});
    }
    return out;
  }

  // Nonblank lines with `#` comments removed.
  inline std::vector<Line> significant_lines(std::string_view text) {
    std::vector<Line> out;
    std::size_t       number = 0;
    std::size_t       pos    = 0;
    while (pos <= text.size()) {
      std::size_t end = text.find('\n', pos);
      if (end == std::string_view::npos) {
        end = text.size();
      }
      std::string_view line = text.substr(pos, end - pos);
      ++number;
      if (auto hash = line.find('#'); hash != std::string_view::npos) {
        line = line.substr(0, hash);
      }
      if (!line.empty() && line.back() == '\r') {
        line.remove_suffix(1);
      }
      auto tokens = tokenize(line);
      if (!tokens.empty()) {
        out.push_back({number, line, std::move(tokens)});
      }
      pos = end + 1;
    }
    return out;
  }

  // Parses a positive decimal integer, throwing ParseError on failure.
  inline int parse_positive(std::string_view s, std::size_t line, std::size_t column) {
    if (s.empty() || s.size() > 9) {
      throw ParseError("expected a positive integer, found `" + std::string(s) + "`",
                       line,
                       column);
    }
    int value = 0;
    for (char ch : s) {
      if (!std::isdigit(static_cast<unsigned char>(ch))) {
        throw ParseError("expected a positive integer, found `" + std::string(s) + "`",
                         line,
                         column);
      }
      value = value * 10 + (ch - '0');
    }
    if (value < 1) {
      throw ParseError("expected a positive integer, found `" + std::string(s) + "`",
                       line,
                       column);
    }
    return value;
  }

}  // namespace chordweave::detail

#endif  // CHORDWEAVE_SRC_TEXT_HPP_
