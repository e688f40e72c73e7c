#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "cgt/game.hpp"

namespace cgt {

struct NormalNode;

// A normal-play game: two (possibly empty) option lists, no atoms. Interned
// like Game, so structural equality is pointer equality.
class NormalGame {
 public:
  NormalGame() = default;

  std::span<const NormalGame> lefts() const;
  std::span<const NormalGame> rights() const;
  unsigned rank() const;
  const NormalNode* node() const { return node_; }
  bool valid() const { return node_ != nullptr; }

  friend bool operator==(NormalGame a, NormalGame b) { return a.node_ == b.node_; }
  friend bool operator!=(NormalGame a, NormalGame b) { return a.node_ != b.node_; }

 private:
  friend NormalGame make_normal_game(std::vector<NormalGame>, std::vector<NormalGame>);
  explicit NormalGame(const NormalNode* node) : node_(node) {}
  const NormalNode* node_ = nullptr;
};

NormalGame make_normal_game(std::vector<NormalGame> lefts, std::vector<NormalGame> rights);

int np_form_compare(NormalGame a, NormalGame b);
bool np_form_less(NormalGame a, NormalGame b);

// Partial order tests under optimal alternating play, last player to move
// wins. np_geq(g, h) decides g >= h.
bool np_geq(NormalGame g, NormalGame h);
bool np_equivalent(NormalGame g, NormalGame h);

// g >= 0 via the explicit second-player recursion: every Right move admits a
// Left reply that again wins moving second. Agrees with np_geq(g, zero).
bool np_geq_zero_second_player(NormalGame g);

NormalGame np_sum(NormalGame g, NormalGame h);
NormalGame np_negate(NormalGame g);

// Simplest form: dominated options removed, reversible options bypassed,
// recursively. Two games are np_equivalent exactly when their canonical
// forms are the same node.
NormalGame canonical_form(NormalGame g);

NormalGame np_zero();
NormalGame np_star();
NormalGame np_star2();
NormalGame np_up();
NormalGame np_down();
NormalGame np_up_star();
NormalGame np_down_star();
NormalGame np_integer(long n);

// Embedding of trivial-group game forms (atoms become empty option lists).
NormalGame to_normal_game(Game g);

// Slash notation with standard value names: "up", "{up|down*}",
// "{up||0,down*|0,down*}". Canonical integers print as numerals.
std::string to_string(NormalGame g);

}  // namespace cgt

template <>
struct std::hash<cgt::NormalGame> {
  std::size_t operator()(cgt::NormalGame g) const noexcept {
    return std::hash<const void*>{}(static_cast<const void*>(g.node()));
  }
};
