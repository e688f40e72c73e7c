#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "cgt/game.hpp"
#include "cgt/normal_play.hpp"
#include "cgt/universe.hpp"

namespace cgt {

// A position [g, h] of the provisional comparison game for "g >= h" in a
// universe. Left moves in g or counters moves in h; a Left move must keep
// the universe's proviso satisfied, Right moves are unrestricted. Whoever
// runs out of moves loses, so "g >= h" becomes a normal-play question.
struct LpgPosition {
  Game g;
  Game h;
  const Universe* universe = nullptr;

  friend bool operator==(const LpgPosition& a, const LpgPosition& b) {
    return a.g == b.g && a.h == b.h && a.universe == b.universe;
  }
};

struct LpgPositionHash {
  std::size_t operator()(const LpgPosition& p) const noexcept;
};

// Checks membership of both games; the proviso filter on interior moves is
// only meaningful for members.
LpgPosition make_lpg(const Universe& u, Game g, Game h);

// Left options: [gL, h] and [g, hR], keeping only those whose pair passes
// the proviso. Deterministic order: moves in g first, options ascending.
std::vector<LpgPosition> lpg_left_options(const LpgPosition& p);

// Right options: [gR, h] and [g, hL], never filtered.
std::vector<LpgPosition> lpg_right_options(const LpgPosition& p);

// The position's value as a plain normal-play game.
NormalGame unfold(const LpgPosition& p);

// Left survives every Right line: each Right option admits a Left response
// that again maintains. Equivalent to unfold(p) >= 0 as second player.
bool maintain(const LpgPosition& p);

// Game tree in DOT, duplicated nodes and all, with [g,h] labels.
std::string lpg_tree_dot(const LpgPosition& p);

}  // namespace cgt
