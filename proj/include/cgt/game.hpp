#pragma once

#include <cassert>
#include <cstddef>
#include <span>
#include <variant>
#include <vector>

#include "cgt/rational.hpp"

namespace cgt {

class Game;
struct GameNode;

// Which additive group the atom adornments of a game are drawn from. The
// trivial group carries normal and misere play; exact rationals carry
// scoring play. Games from different groups never mix in one expression.
enum class AdornKind { kTrivial, kRational };

// An atom: the marker a player finds when their options run out, adorned
// with a group element (always 0 in the trivial group).
struct Adorn {
  AdornKind kind;
  Rational value;
};

Adorn make_adorn(AdornKind kind, Rational value);

// One side of a game form: either an adorned atom or a non-empty list of
// option games. Normalized forms keep options sorted and deduplicated.
class Side {
 public:
  static Side atom(Adorn a);
  static Side with_options(std::vector<Game> options);

  bool is_atom() const { return std::holds_alternative<Adorn>(data_); }
  const Adorn& adorn() const { return std::get<Adorn>(data_); }
  std::span<const Game> options() const;

 private:
  std::variant<Adorn, std::vector<Game>> data_;
};

// Immutable handle to an interned game form. Structural equality is pointer
// equality: identical subtrees share one node, which is what makes the memo
// caches sound.
class Game {
 public:
  Game() = default;

  const Side& left() const;
  const Side& right() const;
  unsigned rank() const;
  AdornKind adorn_kind() const;
  bool is_left_atomic() const;
  bool is_right_atomic() const;
  bool is_purely_atomic() const;
  bool is_dicot() const;

  // Option lists; empty span when the corresponding side is atomic.
  std::span<const Game> left_options() const;
  std::span<const Game> right_options() const;

  const GameNode* node() const { return node_; }
  bool valid() const { return node_ != nullptr; }

  friend bool operator==(Game a, Game b) { return a.node_ == b.node_; }
  friend bool operator!=(Game a, Game b) { return a.node_ != b.node_; }

 private:
  friend Game make_game(Side, Side);
  explicit Game(const GameNode* node) : node_(node) {}
  const GameNode* node_ = nullptr;
};

struct GameNode {
  Side left;
  Side right;
  AdornKind kind;
  unsigned rank;
  bool dicot;
  std::size_t hash;
};

// Builds the normalized form with the given sides: options are sorted under
// the deterministic form order and deduplicated, then the node is interned.
// Throws std::invalid_argument when sides mix adorn groups.
Game make_game(Side left, Side right);

// Deterministic total order on forms: rank first, then recursive
// lexicographic comparison of sides. Returns <0, 0, >0.
int form_compare(Game a, Game b);
bool form_less(Game a, Game b);

// Disjunctive sum. An atomic side stays atomic exactly when both summands
// are atomic on that side (adorns add); otherwise the side collects the
// usual componentwise options. Throws on mixed adorn groups.
Game disjunctive_sum(Game g, Game h);

// Mirror image: sides swapped at every subposition, adorns negated.
Game conjugate(Game g);

// Named literal forms over the chosen adorn group (zero adorns throughout).
Game zero_game(AdornKind kind = AdornKind::kTrivial);
Game star_game(AdornKind kind = AdornKind::kTrivial);
Game star2_game(AdornKind kind = AdornKind::kTrivial);
Game up_game(AdornKind kind = AdornKind::kTrivial);         // {0|*}
Game down_game(AdornKind kind = AdornKind::kTrivial);       // {*|0}
Game up_star_game(AdornKind kind = AdornKind::kTrivial);    // {0,*|0}
Game down_star_game(AdornKind kind = AdornKind::kTrivial);  // {0|0,*}
Game mup_game(AdornKind kind = AdornKind::kTrivial);        // {0,*|*}
Game mown_game(AdornKind kind = AdornKind::kTrivial);       // {*|0,*}

// Purely atomic scoring game with the given adorns.
Game atomic_game(Rational left, Rational right);

}  // namespace cgt

template <>
struct std::hash<cgt::Game> {
  std::size_t operator()(cgt::Game g) const noexcept {
    return std::hash<const void*>{}(static_cast<const void*>(g.node()));
  }
};
