#include "cgt/universe.hpp"

#include <algorithm>
#include <utility>

#include "cgt/lattice.hpp"
#include "cgt/memo.hpp"

namespace cgt {

bool outcome_geq(const OutcomePair& a, const OutcomePair& b) {
  return a.left >= b.left && a.right >= b.right;
}

char outcome_symbol(const OutcomePair& o) {
  bool left_wins_first = o.left > 0;
  bool right_wins_first = o.right < 0;
  if (left_wins_first) return right_wins_first ? 'N' : 'L';
  return right_wins_first ? 'R' : 'P';
}

std::string to_string(const OutcomePair& o, bool scoring) {
  if (!scoring) return std::string(1, outcome_symbol(o));
  return "(" + to_string(o.left) + ", " + to_string(o.right) + ")";
}

namespace {

bool all_adorns_trivial(Game g) { return g.adorn_kind() == AdornKind::kTrivial; }

bool outcome_proviso(const Universe& u, Game g, Game h) {
  return outcome_geq(outcome(u, g), outcome(u, h));
}

bool atomic_shape_proviso(const Universe&, Game g, Game h) {
  if (h.is_left_atomic() && !g.is_left_atomic()) return false;
  if (g.is_right_atomic() && !h.is_right_atomic()) return false;
  return true;
}

struct OutcomeKey {
  const GameNode* node;
  int tag;
  friend bool operator==(const OutcomeKey& a, const OutcomeKey& b) {
    return a.node == b.node && a.tag == b.tag;
  }
};
struct OutcomeKeyHash {
  std::size_t operator()(const OutcomeKey& k) const noexcept {
    std::size_t seed = std::hash<const void*>{}(k.node);
    hash_combine(seed, static_cast<std::size_t>(k.tag));
    return seed;
  }
};

MemoCache<OutcomeKey, OutcomePair, OutcomeKeyHash>& outcome_cache() {
  static MemoCache<OutcomeKey, OutcomePair, OutcomeKeyHash> cache;
  return cache;
}

struct SumOutcomeKey {
  const GameNode* a;
  const GameNode* b;
  int tag;
  friend bool operator==(const SumOutcomeKey& x, const SumOutcomeKey& y) {
    return x.a == y.a && x.b == y.b && x.tag == y.tag;
  }
};
struct SumOutcomeKeyHash {
  std::size_t operator()(const SumOutcomeKey& k) const noexcept {
    std::size_t seed = std::hash<const void*>{}(k.a);
    hash_combine(seed, std::hash<const void*>{}(k.b));
    hash_combine(seed, static_cast<std::size_t>(k.tag));
    return seed;
  }
};

MemoCache<SumOutcomeKey, OutcomePair, SumOutcomeKeyHash>& sum_outcome_cache() {
  static MemoCache<SumOutcomeKey, OutcomePair, SumOutcomeKeyHash> cache;
  return cache;
}

OutcomePair sum_outcome(const Universe& u, Game g, Game h);

Result sum_outcome_left_impl(const Universe& u, Game g, Game h) {
  if (g.is_left_atomic() && h.is_left_atomic()) {
    return u.nu_left(make_adorn(g.adorn_kind(),
                                g.left().adorn().value + h.left().adorn().value));
  }
  bool first = true;
  Result best = 0;
  auto consider = [&](Result r) {
    if (first || r > best) best = std::move(r);
    first = false;
  };
  for (Game gl : g.left_options()) consider(sum_outcome(u, gl, h).right);
  for (Game hl : h.left_options()) consider(sum_outcome(u, g, hl).right);
  return best;
}

Result sum_outcome_right_impl(const Universe& u, Game g, Game h) {
  if (g.is_right_atomic() && h.is_right_atomic()) {
    return u.nu_right(make_adorn(g.adorn_kind(),
                                 g.right().adorn().value + h.right().adorn().value));
  }
  bool first = true;
  Result best = 0;
  auto consider = [&](Result r) {
    if (first || r < best) best = std::move(r);
    first = false;
  };
  for (Game gr : g.right_options()) consider(sum_outcome(u, gr, h).left);
  for (Game hr : h.right_options()) consider(sum_outcome(u, g, hr).left);
  return best;
}

OutcomePair sum_outcome(const Universe& u, Game g, Game h) {
  SumOutcomeKey key{g.node() <= h.node() ? g.node() : h.node(),
                    g.node() <= h.node() ? h.node() : g.node(), u.convention_tag()};
  if (auto hit = sum_outcome_cache().find(key)) return *hit;
  OutcomePair result{sum_outcome_left_impl(u, g, h), sum_outcome_right_impl(u, g, h)};
  sum_outcome_cache().insert(key, result);
  return result;
}

}  // namespace

Universe::Universe(std::string id, AdornKind adorn_kind, Convention convention,
                   int convention_tag, MemberFn member, ProvisoFn proviso)
    : id_(std::move(id)),
      adorn_kind_(adorn_kind),
      convention_(convention),
      convention_tag_(convention_tag),
      member_(std::move(member)),
      proviso_(std::move(proviso)) {}

const Universe& Universe::normal_play() {
  static const Universe u(
      "normal", AdornKind::kTrivial, Convention::kNormalPlay, 0, all_adorns_trivial,
      [](const Universe&, Game, Game) { return true; });
  return u;
}

const Universe& Universe::dicot_misere() {
  static const Universe u(
      "dicot-misere", AdornKind::kTrivial, Convention::kMiserePlay, 1,
      [](Game g) { return all_adorns_trivial(g) && g.is_dicot(); }, outcome_proviso);
  return u;
}

const Universe& Universe::free_misere() {
  static const Universe u("free-misere", AdornKind::kTrivial, Convention::kMiserePlay, 1,
                          all_adorns_trivial, atomic_shape_proviso);
  return u;
}

const Universe& Universe::dicot_scoring() {
  static const Universe u(
      "dicot-scoring", AdornKind::kRational, Convention::kScoringPlay, 2,
      [](Game g) { return g.adorn_kind() == AdornKind::kRational && g.is_dicot(); },
      outcome_proviso);
  return u;
}

Universe Universe::custom(std::string id, AdornKind adorn_kind, Convention convention,
                          MemberFn member, ProvisoFn proviso) {
  return Universe(std::move(id), adorn_kind, convention, static_cast<int>(convention),
                  std::move(member), std::move(proviso));
}

Result Universe::nu_left(const Adorn& a) const {
  switch (convention_) {
    case Convention::kNormalPlay:
      return -1;
    case Convention::kMiserePlay:
      return 1;
    case Convention::kScoringPlay:
      return a.value;
  }
  return 0;
}

Result Universe::nu_right(const Adorn& a) const {
  switch (convention_) {
    case Convention::kNormalPlay:
      return 1;
    case Convention::kMiserePlay:
      return -1;
    case Convention::kScoringPlay:
      return a.value;
  }
  return 0;
}

bool Universe::proviso(Game g, Game h) const {
  if (!member(g)) throw NonMemberError("first game is not a member of universe " + id_);
  if (!member(h)) throw NonMemberError("second game is not a member of universe " + id_);
  return proviso_(*this, g, h);
}

const Universe* find_universe(std::string_view name) {
  if (name == "normal") return &Universe::normal_play();
  if (name == "dicot-misere") return &Universe::dicot_misere();
  if (name == "free-misere") return &Universe::free_misere();
  if (name == "dicot-scoring") return &Universe::dicot_scoring();
  return nullptr;
}

OutcomePair outcome(const Universe& u, Game g) {
  OutcomeKey key{g.node(), u.convention_tag()};
  if (auto hit = outcome_cache().find(key)) return *hit;

  OutcomePair result{0, 0};
  if (g.is_left_atomic()) {
    result.left = u.nu_left(g.left().adorn());
  } else {
    bool first = true;
    for (Game gl : g.left_options()) {
      Result r = outcome(u, gl).right;
      if (first || r > result.left) result.left = std::move(r);
      first = false;
    }
  }
  if (g.is_right_atomic()) {
    result.right = u.nu_right(g.right().adorn());
  } else {
    bool first = true;
    for (Game gr : g.right_options()) {
      Result r = outcome(u, gr).left;
      if (first || r < result.right) result.right = std::move(r);
      first = false;
    }
  }
  outcome_cache().insert(key, result);
  return result;
}

Result outcome_left(const Universe& u, Game g) { return outcome(u, g).left; }
Result outcome_right(const Universe& u, Game g) { return outcome(u, g).right; }

Result sum_outcome_left(const Universe& u, Game g, Game h) {
  return sum_outcome(u, g, h).left;
}

Result sum_outcome_right(const Universe& u, Game g, Game h) {
  return sum_outcome(u, g, h).right;
}

bool proviso_bruteforce(const Universe& u, Game g, Game h, unsigned max_rank) {
  for (Game x : enumerate_members(u, max_rank)) {
    if (x.is_left_atomic() &&
        sum_outcome_left(u, g, x) < sum_outcome_left(u, h, x)) {
      return false;
    }
    if (x.is_right_atomic() &&
        sum_outcome_right(u, g, x) < sum_outcome_right(u, h, x)) {
      return false;
    }
  }
  return true;
}

}  // namespace cgt
