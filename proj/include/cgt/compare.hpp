#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "cgt/game.hpp"
#include "cgt/lattice.hpp"
#include "cgt/normal_play.hpp"
#include "cgt/universe.hpp"

namespace cgt {

enum class Relation { kEqual, kGreater, kLess, kIncomparable };

// "G=H", "G>H", "G<H" or "G<>H".
std::string relation_string(Relation r);

// g >= h in u: the proviso test plus a survivable provisional game.
// Throws NonMemberError when either game lies outside u.
bool geq(const Universe& u, Game g, Game h);

Relation relation(const Universe& u, Game g, Game h);

// Same order, computed without building the provisional game: a direct
// alternating recursion over the two forms. Kept separate so the two
// routes can be checked against each other.
bool geq_cnp_oracle(const Universe& u, Game g, Game h);

// Smallest member form X (in form order, rank <= max_rank) whose sums
// tell g and h apart: some outcome component of g + X drops below the
// matching component of h + X. Empty when no witness exists in range.
std::optional<Game> distinguish(const Universe& u, Game g, Game h, unsigned max_rank,
                                const EnumerationLimits& limits = {});

struct DistinguishResult {
  std::optional<Game> witness;
};

// One enumeration pass shared across many (g, h) queries. Results line up
// with `pairs`. Each entry gets the smallest witness, as in distinguish().
std::vector<DistinguishResult> distinguish_batch(const Universe& u,
                                                 const std::vector<std::pair<Game, Game>>& pairs,
                                                 unsigned max_rank,
                                                 const EnumerationLimits& limits = {});

struct CompareReport {
  bool proviso_gh = false;
  bool maintain_gh = false;
  bool proviso_hg = false;
  bool maintain_hg = false;
  OutcomePair outcome_g{0, 0};
  OutcomePair outcome_h{0, 0};
  NormalGame lpg_gh;  // canonical value of the game comparing g against h
  NormalGame lpg_hg;
  Relation relation = Relation::kIncomparable;
};

CompareReport compare_report(const Universe& u, Game g, Game h);

}  // namespace cgt
