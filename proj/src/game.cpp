#include "cgt/game.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <unordered_map>
#include <utility>

#include "cgt/memo.hpp"

namespace cgt {

namespace {

std::size_t side_hash(const Side& s) {
  std::size_t seed = 0;
  if (s.is_atom()) {
    hash_combine(seed, 0x51de'a703);
    hash_combine(seed, static_cast<std::size_t>(s.adorn().kind));
    hash_combine(seed, hash_value(s.adorn().value));
  } else {
    hash_combine(seed, 0x06f7'10e5);  // options marker
    for (Game opt : s.options()) hash_combine(seed, std::hash<Game>{}(opt));
  }
  return seed;
}

bool side_equal(const Side& a, const Side& b) {
  if (a.is_atom() != b.is_atom()) return false;
  if (a.is_atom()) {
    return a.adorn().kind == b.adorn().kind && a.adorn().value == b.adorn().value;
  }
  auto ao = a.options(), bo = b.options();
  return std::equal(ao.begin(), ao.end(), bo.begin(), bo.end());
}

// Interning arena: one node per distinct normalized form, process lifetime.
// Buckets are chained by full content hash so no transparent-lookup support
// is needed from the standard library.
class Arena {
 public:
  static Arena& instance() {
    static Arena arena;
    return arena;
  }

  const GameNode* intern(GameNode&& candidate) {
    std::lock_guard<std::mutex> lock(mu_);
    auto& bucket = buckets_[candidate.hash];
    for (const auto& node : bucket) {
      if (side_equal(node->left, candidate.left) && side_equal(node->right, candidate.right)) {
        return node.get();
      }
    }
    bucket.push_back(std::make_unique<GameNode>(std::move(candidate)));
    return bucket.back().get();
  }

 private:
  std::mutex mu_;
  std::unordered_map<std::size_t, std::vector<std::unique_ptr<GameNode>>> buckets_;
};

int side_compare(const Side& a, const Side& b);

int compare_nodes(const GameNode* a, const GameNode* b) {
  if (a == b) return 0;
  if (a->rank != b->rank) return a->rank < b->rank ? -1 : 1;
  if (int c = side_compare(a->left, b->left); c != 0) return c;
  return side_compare(a->right, b->right);
}

int side_compare(const Side& a, const Side& b) {
  if (a.is_atom() != b.is_atom()) return a.is_atom() ? -1 : 1;
  if (a.is_atom()) {
    if (a.adorn().kind != b.adorn().kind) {
      return a.adorn().kind == AdornKind::kTrivial ? -1 : 1;
    }
    if (a.adorn().value != b.adorn().value) {
      return a.adorn().value < b.adorn().value ? -1 : 1;
    }
    return 0;
  }
  auto ao = a.options(), bo = b.options();
  for (std::size_t i = 0; i < ao.size() && i < bo.size(); ++i) {
    if (int c = compare_nodes(ao[i].node(), bo[i].node()); c != 0) return c;
  }
  if (ao.size() != bo.size()) return ao.size() < bo.size() ? -1 : 1;
  return 0;
}

AdornKind side_kind(const Side& s) {
  if (s.is_atom()) return s.adorn().kind;
  return s.options().front().adorn_kind();
}

void check_uniform_kind(const Side& s, AdornKind kind) {
  if (s.is_atom()) {
    if (s.adorn().kind != kind) throw std::invalid_argument("game mixes adorn groups");
    return;
  }
  for (Game opt : s.options()) {
    if (opt.adorn_kind() != kind) throw std::invalid_argument("game mixes adorn groups");
  }
}

unsigned side_rank_bound(const Side& s) {
  unsigned r = 0;
  if (!s.is_atom()) {
    for (Game opt : s.options()) r = std::max(r, opt.rank() + 1);
  }
  return r;
}

bool side_dicotic(const Side& s) {
  if (s.is_atom()) return true;
  for (Game opt : s.options()) {
    if (!opt.is_dicot()) return false;
  }
  return true;
}

using GamePairKey = std::pair<const GameNode*, const GameNode*>;
struct GamePairHash {
  std::size_t operator()(const GamePairKey& k) const noexcept {
    std::size_t seed = std::hash<const void*>{}(k.first);
    hash_combine(seed, std::hash<const void*>{}(k.second));
    return seed;
  }
};

MemoCache<GamePairKey, Game, GamePairHash>& sum_cache() {
  static MemoCache<GamePairKey, Game, GamePairHash> cache;
  return cache;
}

MemoCache<const GameNode*, Game>& conjugate_cache() {
  static MemoCache<const GameNode*, Game> cache;
  return cache;
}

Game named_form(std::initializer_list<Game> lefts, std::initializer_list<Game> rights) {
  return make_game(Side::with_options(std::vector<Game>(lefts)),
                   Side::with_options(std::vector<Game>(rights)));
}

}  // namespace

Adorn make_adorn(AdornKind kind, Rational value) {
  if (kind == AdornKind::kTrivial && value != 0) {
    throw std::invalid_argument("trivial adorn group has only the zero element");
  }
  return Adorn{kind, std::move(value)};
}

Side Side::atom(Adorn a) {
  Side s;
  s.data_ = std::move(a);
  return s;
}

Side Side::with_options(std::vector<Game> options) {
  if (options.empty()) throw std::invalid_argument("option side must be non-empty");
  Side s;
  s.data_ = std::move(options);
  return s;
}

std::span<const Game> Side::options() const {
  return std::get<std::vector<Game>>(data_);
}

const Side& Game::left() const { return node_->left; }
const Side& Game::right() const { return node_->right; }
unsigned Game::rank() const { return node_->rank; }
AdornKind Game::adorn_kind() const { return node_->kind; }
bool Game::is_left_atomic() const { return node_->left.is_atom(); }
bool Game::is_right_atomic() const { return node_->right.is_atom(); }
bool Game::is_purely_atomic() const { return is_left_atomic() && is_right_atomic(); }
bool Game::is_dicot() const { return node_->dicot; }

std::span<const Game> Game::left_options() const {
  if (is_left_atomic()) return {};
  return node_->left.options();
}

std::span<const Game> Game::right_options() const {
  if (is_right_atomic()) return {};
  return node_->right.options();
}

namespace {

Side normalize_side(Side side) {
  if (side.is_atom()) return side;
  std::vector<Game> opts(side.options().begin(), side.options().end());
  for (Game g : opts) {
    if (!g.valid()) throw std::invalid_argument("null option game");
  }
  if (!std::is_sorted(opts.begin(), opts.end(), form_less)) {
    std::sort(opts.begin(), opts.end(), form_less);
  }
  opts.erase(std::unique(opts.begin(), opts.end()), opts.end());
  opts.shrink_to_fit();
  return Side::with_options(std::move(opts));
}

}  // namespace

Game make_game(Side left, Side right) {
  Side l = normalize_side(std::move(left));
  Side r = normalize_side(std::move(right));
  AdornKind kind = side_kind(l);
  check_uniform_kind(l, kind);
  check_uniform_kind(r, kind);

  GameNode node{std::move(l), std::move(r), kind, 0, false, 0};
  node.rank = std::max(side_rank_bound(node.left), side_rank_bound(node.right));
  bool shape_ok = node.left.is_atom() == node.right.is_atom();
  node.dicot = shape_ok && side_dicotic(node.left) && side_dicotic(node.right);
  std::size_t seed = side_hash(node.left);
  hash_combine(seed, side_hash(node.right));
  node.hash = seed;
  return Game(Arena::instance().intern(std::move(node)));
}

int form_compare(Game a, Game b) { return compare_nodes(a.node(), b.node()); }
bool form_less(Game a, Game b) { return form_compare(a, b) < 0; }

Game disjunctive_sum(Game g, Game h) {
  if (g.adorn_kind() != h.adorn_kind()) {
    throw std::invalid_argument("disjunctive sum of games from different adorn groups");
  }
  GamePairKey key = g.node() <= h.node() ? GamePairKey{g.node(), h.node()}
                                         : GamePairKey{h.node(), g.node()};
  if (auto hit = sum_cache().find(key)) return *hit;

  Side left = [&] {
    if (g.is_left_atomic() && h.is_left_atomic()) {
      return Side::atom(
          make_adorn(g.adorn_kind(), g.left().adorn().value + h.left().adorn().value));
    }
    std::vector<Game> opts;
    for (Game gl : g.left_options()) opts.push_back(disjunctive_sum(gl, h));
    for (Game hl : h.left_options()) opts.push_back(disjunctive_sum(g, hl));
    return Side::with_options(std::move(opts));
  }();
  Side right = [&] {
    if (g.is_right_atomic() && h.is_right_atomic()) {
      return Side::atom(
          make_adorn(g.adorn_kind(), g.right().adorn().value + h.right().adorn().value));
    }
    std::vector<Game> opts;
    for (Game gr : g.right_options()) opts.push_back(disjunctive_sum(gr, h));
    for (Game hr : h.right_options()) opts.push_back(disjunctive_sum(g, hr));
    return Side::with_options(std::move(opts));
  }();

  Game sum = make_game(std::move(left), std::move(right));
  sum_cache().insert(key, sum);
  return sum;
}

Game conjugate(Game g) {
  if (auto hit = conjugate_cache().find(g.node())) return *hit;

  auto flip = [](const Side& s) {
    if (s.is_atom()) return Side::atom(make_adorn(s.adorn().kind, -s.adorn().value));
    std::vector<Game> opts;
    for (Game opt : s.options()) opts.push_back(conjugate(opt));
    return Side::with_options(std::move(opts));
  };
  Game result = make_game(flip(g.right()), flip(g.left()));
  conjugate_cache().insert(g.node(), result);
  return result;
}

Game zero_game(AdornKind kind) {
  Side a = Side::atom(make_adorn(kind, 0));
  return make_game(a, a);
}

Game star_game(AdornKind kind) {
  Game z = zero_game(kind);
  return named_form({z}, {z});
}

Game star2_game(AdornKind kind) {
  Game z = zero_game(kind), s = star_game(kind);
  return named_form({z, s}, {z, s});
}

Game up_game(AdornKind kind) {
  return named_form({zero_game(kind)}, {star_game(kind)});
}

Game down_game(AdornKind kind) {
  return named_form({star_game(kind)}, {zero_game(kind)});
}

Game up_star_game(AdornKind kind) {
  Game z = zero_game(kind), s = star_game(kind);
  return named_form({z, s}, {z});
}

Game down_star_game(AdornKind kind) {
  Game z = zero_game(kind), s = star_game(kind);
  return named_form({z}, {z, s});
}

Game mup_game(AdornKind kind) {
  Game z = zero_game(kind), s = star_game(kind);
  return named_form({z, s}, {s});
}

Game mown_game(AdornKind kind) {
  Game z = zero_game(kind), s = star_game(kind);
  return named_form({s}, {z, s});
}

Game atomic_game(Rational left, Rational right) {
  return make_game(Side::atom(make_adorn(AdornKind::kRational, std::move(left))),
                   Side::atom(make_adorn(AdornKind::kRational, std::move(right))));
}

}  // namespace cgt
