#include "cgt/notation.hpp"

#include <cctype>
#include <unordered_map>
#include <utility>
#include <vector>

#include "json.hpp"

namespace cgt {

ParseError::ParseError(std::size_t position, const std::string& detail)
    : std::runtime_error("parse error at position " + std::to_string(position) + ": " + detail),
      position_(position) {}

namespace {

struct NameTable {
  std::vector<std::pair<std::string, Game>> by_name;
  std::unordered_map<const GameNode*, std::string> plain;
  std::unordered_map<const GameNode*, std::string> misere;
};

const NameTable& names() {
  static const NameTable table = [] {
    NameTable t;
    Game zero = zero_game();
    Game star = star_game();
    Game star2 = star2_game();
    Game up = up_game();
    Game down = down_game();
    Game up_star = up_star_game();
    Game down_star = down_star_game();
    Game mup = mup_game();
    Game mown = mown_game();
    t.by_name = {
        {"0", zero},       {"*", star},        {"*2", star2},   {"up", up},
        {"down", down},    {"up*", up_star},   {"down*", down_star},
        {"mup", mup},      {"mown", mown},     {"mup*", up_star},
        {"mown*", down_star},
    };
    t.plain = {
        {zero.node(), "0"},         {star.node(), "*"},
        {star2.node(), "*2"},       {up.node(), "up"},
        {down.node(), "down"},      {up_star.node(), "up*"},
        {down_star.node(), "down*"},
    };
    t.misere = t.plain;
    t.misere[up_star.node()] = "mup*";
    t.misere[down_star.node()] = "mown*";
    t.misere[mup.node()] = "mup";
    t.misere[mown.node()] = "mown";
    return t;
  }();
  return table;
}

bool name_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '*';
}

struct Parser {
  std::string_view text;
  NotationMode mode;
  std::size_t pos = 0;

  [[noreturn]] void fail(const std::string& detail) const { throw ParseError(pos, detail); }

  char peek() const { return pos < text.size() ? text[pos] : '\0'; }

  void skip_ws() {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
  }

  bool take(char c) {
    if (peek() == c) {
      ++pos;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!take(c)) fail(std::string("expected '") + c + "'");
  }

  Game parse_game() {
    skip_ws();
    char c = peek();
    if (c == '{') {
      if (mode == NotationMode::kScoring) {
        fail("brace games carry no scores; use <...> in a scoring universe");
      }
      return parse_braces();
    }
    if (c == '<') {
      if (mode == NotationMode::kTrivial) {
        fail("score notation is only valid in a scoring universe");
      }
      return parse_angles();
    }
    if (c == '^') fail("score atoms only appear directly inside <...>");
    return parse_name();
  }

  Game parse_name() {
    if (mode == NotationMode::kScoring) {
      fail("named forms carry no scores; use <...> in a scoring universe");
    }
    std::size_t start = pos;
    while (pos < text.size() && name_char(text[pos])) ++pos;
    if (pos == start) fail("expected a game");
    std::string_view token = text.substr(start, pos - start);
    for (const auto& [name, game] : names().by_name) {
      if (name == token) return game;
    }
    pos = start;
    fail("unknown game name '" + std::string(token) + "'");
  }

  Game parse_braces() {
    expect('{');
    Side left = parse_trivial_side('}');
    expect('|');
    Side right = parse_trivial_side('}');
    expect('}');
    return make_game(std::move(left), std::move(right));
  }

  Side parse_trivial_side(char closer) {
    skip_ws();
    if (peek() == '|' || peek() == closer) {
      return Side::atom(make_adorn(AdornKind::kTrivial, 0));
    }
    return Side::with_options(parse_option_list());
  }

  Game parse_angles() {
    expect('<');
    Side left = parse_scoring_side();
    expect('|');
    Side right = parse_scoring_side();
    expect('>');
    return make_game(std::move(left), std::move(right));
  }

  Side parse_scoring_side() {
    skip_ws();
    if (take('^')) {
      Rational score = parse_rational();
      skip_ws();
      return Side::atom(make_adorn(AdornKind::kRational, std::move(score)));
    }
    if (peek() == '|' || peek() == '>') fail("an empty side needs an explicit score: ^q");
    return Side::with_options(parse_option_list());
  }

  std::vector<Game> parse_option_list() {
    std::vector<Game> options;
    options.push_back(parse_game());
    skip_ws();
    while (take(',')) {
      options.push_back(parse_game());
      skip_ws();
    }
    return options;
  }

  Rational parse_rational() {
    std::size_t start = pos;
    take('-');
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a rational number");
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos;
    if (take('/')) {
      if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a denominator");
      while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos;
    }
    std::string token(text.substr(start, pos - start));
    try {
      return Rational(token);
    } catch (const std::exception&) {
      pos = start;
      fail("invalid rational '" + token + "'");
    }
  }
};

}  // namespace

Game parse_game(std::string_view text, NotationMode mode) {
  Parser parser{text, mode};
  Game g = parser.parse_game();
  parser.skip_ws();
  if (parser.pos != text.size()) parser.fail("unexpected trailing characters");
  return g;
}

namespace {

void format_into(Game g, std::string& out);

void format_side(const Side& side, std::string& out) {
  if (side.is_atom()) {
    const Adorn& a = side.adorn();
    if (a.kind == AdornKind::kRational) {
      out += '^';
      out += to_string(a.value);
    }
    return;  // trivial atom: empty list
  }
  bool first = true;
  for (Game opt : side.options()) {
    if (!first) out += ',';
    format_into(opt, out);
    first = false;
  }
}

void format_into(Game g, std::string& out) {
  if (g.adorn_kind() == AdornKind::kTrivial) {
    auto it = names().plain.find(g.node());
    if (it != names().plain.end()) {
      out += it->second;
      return;
    }
    out += '{';
    format_side(g.left(), out);
    out += '|';
    format_side(g.right(), out);
    out += '}';
    return;
  }
  out += '<';
  format_side(g.left(), out);
  out += '|';
  format_side(g.right(), out);
  out += '>';
}

}  // namespace

std::string format_game(Game g) {
  std::string out;
  format_into(g, out);
  return out;
}

std::string display_name(const Universe& u, Game g) {
  if (u.convention() == Convention::kMiserePlay && g.adorn_kind() == AdornKind::kTrivial) {
    auto it = names().misere.find(g.node());
    if (it != names().misere.end()) return it->second;
  }
  return format_game(g);
}

namespace {

nlohmann::json side_json(const Side& side) {
  if (side.is_atom()) return nlohmann::json{{"atom", to_string(side.adorn().value)}};
  nlohmann::json list = nlohmann::json::array();
  for (Game opt : side.options()) {
    list.push_back(nlohmann::json{{"left", side_json(opt.left())},
                                  {"right", side_json(opt.right())}});
  }
  return list;
}

}  // namespace

std::string game_to_json(Game g) {
  nlohmann::json j{{"left", side_json(g.left())}, {"right", side_json(g.right())}};
  return j.dump();
}

}  // namespace cgt
