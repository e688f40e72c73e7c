#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "cgt/game.hpp"
#include "cgt/universe.hpp"

namespace cgt {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t position, const std::string& detail);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// Which atom group game text is read into: bare names and {|} braces for
// the trivial group, <|> angles with ^score atoms for rationals.
enum class NotationMode { kTrivial, kScoring };

// Grammar (whitespace free between tokens, spaces allowed around them):
//   trivial:  game := name | '{' list '|' list '}'
//             list := /*empty*/ | game (',' game)*
//             name := 0 * *2 up down up* down* mup mown mup* mown*
//   scoring:  game := '<' side '|' side '>'
//             side := '^' rational | game (',' game)*
// Names denote literal forms; an empty trivial list is an atom with the
// zero adorn. Throws ParseError with the byte position on bad input.
Game parse_game(std::string_view text, NotationMode mode);

// Literal form back to text. Named trivial forms print by their plain name
// (up*, down*), everything else as nested braces or angles.
std::string format_game(Game g);

// Like format_game but using the naming tradition of the universe: misere
// universes call {0,*|0} mup* and {0|0,*} mown* and name mup/mown as well.
std::string display_name(const Universe& u, Game g);

// {"left": [...]|{"atom": "q"}, "right": ...} as a compact JSON string.
std::string game_to_json(Game g);

}  // namespace cgt
