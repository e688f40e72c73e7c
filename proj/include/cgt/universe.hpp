#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "cgt/game.hpp"
#include "cgt/rational.hpp"

namespace cgt {

// Raised when an operation that is only defined for members of a universe is
// handed a game from outside it.
class NonMemberError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A play result: +1/-1 for win/loss conventions, an exact score for scoring
// play. Totally ordered either way.
using Result = Rational;

// (o_L, o_R): the best result for Left moving first and for Right moving
// first. With +-1 results the four combinations are the classical outcome
// classes L, N, P, R.
struct OutcomePair {
  Result left;
  Result right;

  friend bool operator==(const OutcomePair& a, const OutcomePair& b) {
    return a.left == b.left && a.right == b.right;
  }
};

// Componentwise comparison; this is only a partial order (N and P are
// incomparable under the win/loss conventions).
bool outcome_geq(const OutcomePair& a, const OutcomePair& b);

// 'L', 'N', 'P' or 'R'. Only meaningful when both results are +-1.
char outcome_symbol(const OutcomePair& o);

// Symbol for win/loss conventions, "(a, b)" for scoring.
std::string to_string(const OutcomePair& o, bool scoring);

// How atoms convert to results when a player runs out of options: who wins
// (or what is scored) once you cannot move.
enum class Convention {
  kNormalPlay,   // the player unable to move loses
  kMiserePlay,   // the player unable to move wins
  kScoringPlay,  // the adorn is the score, for either player
};

// A universe: a class of game forms closed under options, sums and
// conjugates, together with the end-of-play convention and the proviso used
// when comparing members. The four built-ins live as process-wide constants;
// custom universes can be built for experimentation but the library trusts
// the caller that they really are closed and absolute (parental and dense),
// which is what the comparison theory needs.
class Universe {
 public:
  using MemberFn = std::function<bool(Game)>;
  using ProvisoFn = std::function<bool(const Universe&, Game, Game)>;

  static const Universe& normal_play();
  static const Universe& dicot_misere();
  static const Universe& free_misere();
  static const Universe& dicot_scoring();

  static Universe custom(std::string id, AdornKind adorn_kind, Convention convention,
                         MemberFn member, ProvisoFn proviso);

  const std::string& id() const { return id_; }
  AdornKind adorn_kind() const { return adorn_kind_; }
  Convention convention() const { return convention_; }

  // Atom valuations, monotone in the adorn.
  Result nu_left(const Adorn& a) const;
  Result nu_right(const Adorn& a) const;

  bool member(Game g) const { return member_(g); }

  // Constructive side condition for "g >= h". Throws NonMemberError unless
  // both games belong to this universe.
  bool proviso(Game g, Game h) const;

  // Distinguishes conventions (and custom universes) in memo keys.
  int convention_tag() const { return convention_tag_; }

 private:
  Universe(std::string id, AdornKind adorn_kind, Convention convention, int convention_tag,
           MemberFn member, ProvisoFn proviso);

  std::string id_;
  AdornKind adorn_kind_;
  Convention convention_;
  int convention_tag_;
  MemberFn member_;
  ProvisoFn proviso_;
};

// Built-in universe lookup by CLI name ("normal", "dicot-misere",
// "free-misere", "dicot-scoring"); nullptr when unknown.
const Universe* find_universe(std::string_view name);

// Best results with alternating optimal play, memoized per convention.
OutcomePair outcome(const Universe& u, Game g);
Result outcome_left(const Universe& u, Game g);
Result outcome_right(const Universe& u, Game g);

// outcome(u, g + h) computed pairwise without materializing the sum form;
// the workhorse behind the refutation searches.
Result sum_outcome_left(const Universe& u, Game g, Game h);
Result sum_outcome_right(const Universe& u, Game g, Game h);

// Refutation oracle for the proviso: hunts for a member X of rank at most
// max_rank, atomic on the tested side, whose sum with g and h orders the
// outcomes the wrong way. Returns false when a refuting X exists.
bool proviso_bruteforce(const Universe& u, Game g, Game h, unsigned max_rank);

}  // namespace cgt
