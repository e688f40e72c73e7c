#include "cgt/normal_play.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <unordered_map>
#include <utility>

#include "cgt/memo.hpp"

namespace cgt {

struct NormalNode {
  std::vector<NormalGame> lefts;
  std::vector<NormalGame> rights;
  unsigned rank;
  std::size_t hash;
};

namespace {

class NormalArena {
 public:
  static NormalArena& instance() {
    static NormalArena arena;
    return arena;
  }

  const NormalNode* intern(NormalNode&& candidate) {
    std::lock_guard<std::mutex> lock(mu_);
    auto& bucket = buckets_[candidate.hash];
    for (const auto& node : bucket) {
      if (node->lefts == candidate.lefts && node->rights == candidate.rights) {
        return node.get();
      }
    }
    bucket.push_back(std::make_unique<NormalNode>(std::move(candidate)));
    return bucket.back().get();
  }

 private:
  std::mutex mu_;
  std::unordered_map<std::size_t, std::vector<std::unique_ptr<NormalNode>>> buckets_;
};

int compare_nodes(const NormalNode* a, const NormalNode* b) {
  if (a == b) return 0;
  if (a->rank != b->rank) return a->rank < b->rank ? -1 : 1;
  auto list_compare = [](const std::vector<NormalGame>& x, const std::vector<NormalGame>& y) {
    for (std::size_t i = 0; i < x.size() && i < y.size(); ++i) {
      if (int c = compare_nodes(x[i].node(), y[i].node()); c != 0) return c;
    }
    if (x.size() != y.size()) return x.size() < y.size() ? -1 : 1;
    return 0;
  };
  if (int c = list_compare(a->lefts, b->lefts); c != 0) return c;
  return list_compare(a->rights, b->rights);
}

using PairKey = std::pair<const NormalNode*, const NormalNode*>;
struct PairKeyHash {
  std::size_t operator()(const PairKey& k) const noexcept {
    std::size_t seed = std::hash<const void*>{}(k.first);
    hash_combine(seed, std::hash<const void*>{}(k.second));
    return seed;
  }
};

MemoCache<PairKey, bool, PairKeyHash>& geq_cache() {
  static MemoCache<PairKey, bool, PairKeyHash> cache;
  return cache;
}

MemoCache<const NormalNode*, bool>& second_player_cache() {
  static MemoCache<const NormalNode*, bool> cache;
  return cache;
}

MemoCache<PairKey, NormalGame, PairKeyHash>& sum_cache() {
  static MemoCache<PairKey, NormalGame, PairKeyHash> cache;
  return cache;
}

MemoCache<const NormalNode*, NormalGame>& negate_cache() {
  static MemoCache<const NormalNode*, NormalGame> cache;
  return cache;
}

MemoCache<const NormalNode*, NormalGame>& canonical_cache() {
  static MemoCache<const NormalNode*, NormalGame> cache;
  return cache;
}

MemoCache<const GameNode*, NormalGame>& embed_cache() {
  static MemoCache<const GameNode*, NormalGame> cache;
  return cache;
}

}  // namespace

std::span<const NormalGame> NormalGame::lefts() const { return node_->lefts; }
std::span<const NormalGame> NormalGame::rights() const { return node_->rights; }
unsigned NormalGame::rank() const { return node_->rank; }

NormalGame make_normal_game(std::vector<NormalGame> lefts, std::vector<NormalGame> rights) {
  auto normalize = [](std::vector<NormalGame>& opts) {
    for (NormalGame g : opts) {
      if (!g.valid()) throw std::invalid_argument("null option game");
    }
    if (!std::is_sorted(opts.begin(), opts.end(), np_form_less)) {
      std::sort(opts.begin(), opts.end(), np_form_less);
    }
    opts.erase(std::unique(opts.begin(), opts.end()), opts.end());
    opts.shrink_to_fit();
  };
  normalize(lefts);
  normalize(rights);

  NormalNode node{std::move(lefts), std::move(rights), 0, 0};
  for (NormalGame g : node.lefts) node.rank = std::max(node.rank, g.rank() + 1);
  for (NormalGame g : node.rights) node.rank = std::max(node.rank, g.rank() + 1);
  std::size_t seed = 0x4e6f'726d;
  for (NormalGame g : node.lefts) hash_combine(seed, std::hash<NormalGame>{}(g));
  hash_combine(seed, 0x5e9a'1a70);  // separates the two lists
  hash_combine(seed, node.rights.size());
  for (NormalGame g : node.rights) hash_combine(seed, std::hash<NormalGame>{}(g));
  node.hash = seed;
  return NormalGame(NormalArena::instance().intern(std::move(node)));
}

int np_form_compare(NormalGame a, NormalGame b) { return compare_nodes(a.node(), b.node()); }
bool np_form_less(NormalGame a, NormalGame b) { return np_form_compare(a, b) < 0; }

bool np_geq(NormalGame g, NormalGame h) {
  PairKey key{g.node(), h.node()};
  if (auto hit = geq_cache().find(key)) return *hit;
  bool result = true;
  for (NormalGame gr : g.rights()) {
    if (np_geq(h, gr)) {  // some Right option of g is already <= h
      result = false;
      break;
    }
  }
  if (result) {
    for (NormalGame hl : h.lefts()) {
      if (np_geq(hl, g)) {  // some Left option of h is already >= g
        result = false;
        break;
      }
    }
  }
  geq_cache().insert(key, result);
  return result;
}

bool np_equivalent(NormalGame g, NormalGame h) { return np_geq(g, h) && np_geq(h, g); }

bool np_geq_zero_second_player(NormalGame g) {
  if (auto hit = second_player_cache().find(g.node())) return *hit;
  bool result = true;
  for (NormalGame gr : g.rights()) {
    bool replied = false;
    for (NormalGame grl : gr.lefts()) {
      if (np_geq_zero_second_player(grl)) {
        replied = true;
        break;
      }
    }
    if (!replied) {
      result = false;
      break;
    }
  }
  second_player_cache().insert(g.node(), result);
  return result;
}

NormalGame np_sum(NormalGame g, NormalGame h) {
  PairKey key = g.node() <= h.node() ? PairKey{g.node(), h.node()}
                                     : PairKey{h.node(), g.node()};
  if (auto hit = sum_cache().find(key)) return *hit;
  std::vector<NormalGame> lefts, rights;
  for (NormalGame gl : g.lefts()) lefts.push_back(np_sum(gl, h));
  for (NormalGame hl : h.lefts()) lefts.push_back(np_sum(g, hl));
  for (NormalGame gr : g.rights()) rights.push_back(np_sum(gr, h));
  for (NormalGame hr : h.rights()) rights.push_back(np_sum(g, hr));
  NormalGame result = make_normal_game(std::move(lefts), std::move(rights));
  sum_cache().insert(key, result);
  return result;
}

NormalGame np_negate(NormalGame g) {
  if (auto hit = negate_cache().find(g.node())) return *hit;
  std::vector<NormalGame> lefts, rights;
  for (NormalGame gr : g.rights()) lefts.push_back(np_negate(gr));
  for (NormalGame gl : g.lefts()) rights.push_back(np_negate(gl));
  NormalGame result = make_normal_game(std::move(lefts), std::move(rights));
  negate_cache().insert(g.node(), result);
  return result;
}

NormalGame canonical_form(NormalGame g) {
  if (auto hit = canonical_cache().find(g.node())) return *hit;

  std::vector<NormalGame> lefts, rights;
  for (NormalGame gl : g.lefts()) lefts.push_back(canonical_form(gl));
  for (NormalGame gr : g.rights()) rights.push_back(canonical_form(gr));

  // Alternate removal of dominated options and bypass of reversible ones
  // until a pass changes nothing. Comparisons are against the original game,
  // whose value every rewrite preserves.
  bool changed = true;
  while (changed) {
    changed = false;

    auto drop_dominated = [&changed](std::vector<NormalGame>& opts, auto&& dominated) {
      for (std::size_t i = 0; i < opts.size(); ++i) {
        for (std::size_t j = 0; j < opts.size(); ++j) {
          if (i == j || opts[i] == opts[j]) continue;
          if (dominated(opts[i], opts[j])) {
            opts.erase(opts.begin() + static_cast<std::ptrdiff_t>(i));
            changed = true;
            --i;
            break;
          }
        }
      }
    };
    // A Left option is dominated by any other Left option >= it; dually for
    // Right. Structural duplicates first.
    for (auto* opts : {&lefts, &rights}) {
      std::sort(opts->begin(), opts->end(), np_form_less);
      opts->erase(std::unique(opts->begin(), opts->end()), opts->end());
    }
    drop_dominated(lefts, [](NormalGame a, NormalGame b) { return np_geq(b, a); });
    drop_dominated(rights, [](NormalGame a, NormalGame b) { return np_geq(a, b); });

    for (std::size_t i = 0; i < lefts.size() && !changed; ++i) {
      for (NormalGame lr : lefts[i].rights()) {
        if (np_geq(g, lr)) {  // reversible out through lr <= g
          std::vector<NormalGame> replacement(lr.lefts().begin(), lr.lefts().end());
          lefts.erase(lefts.begin() + static_cast<std::ptrdiff_t>(i));
          lefts.insert(lefts.end(), replacement.begin(), replacement.end());
          changed = true;
          break;
        }
      }
    }
    for (std::size_t i = 0; i < rights.size() && !changed; ++i) {
      for (NormalGame rl : rights[i].lefts()) {
        if (np_geq(rl, g)) {  // reversible out through rl >= g
          std::vector<NormalGame> replacement(rl.rights().begin(), rl.rights().end());
          rights.erase(rights.begin() + static_cast<std::ptrdiff_t>(i));
          rights.insert(rights.end(), replacement.begin(), replacement.end());
          changed = true;
          break;
        }
      }
    }
  }

  NormalGame result = make_normal_game(std::move(lefts), std::move(rights));
  canonical_cache().insert(g.node(), result);
  return result;
}

NormalGame np_zero() {
  static const NormalGame g = make_normal_game({}, {});
  return g;
}

NormalGame np_star() {
  static const NormalGame g = make_normal_game({np_zero()}, {np_zero()});
  return g;
}

NormalGame np_star2() {
  static const NormalGame g =
      make_normal_game({np_zero(), np_star()}, {np_zero(), np_star()});
  return g;
}

NormalGame np_up() {
  static const NormalGame g = make_normal_game({np_zero()}, {np_star()});
  return g;
}

NormalGame np_down() {
  static const NormalGame g = make_normal_game({np_star()}, {np_zero()});
  return g;
}

NormalGame np_up_star() {
  static const NormalGame g = make_normal_game({np_zero(), np_star()}, {np_zero()});
  return g;
}

NormalGame np_down_star() {
  static const NormalGame g = make_normal_game({np_zero()}, {np_zero(), np_star()});
  return g;
}

NormalGame np_integer(long n) {
  if (n == 0) return np_zero();
  if (n > 0) return make_normal_game({np_integer(n - 1)}, {});
  return make_normal_game({}, {np_integer(n + 1)});
}

NormalGame to_normal_game(Game g) {
  if (g.adorn_kind() != AdornKind::kTrivial) {
    throw std::invalid_argument("normal-play embedding requires the trivial adorn group");
  }
  if (auto hit = embed_cache().find(g.node())) return *hit;
  std::vector<NormalGame> lefts, rights;
  for (Game gl : g.left_options()) lefts.push_back(to_normal_game(gl));
  for (Game gr : g.right_options()) rights.push_back(to_normal_game(gr));
  NormalGame result = make_normal_game(std::move(lefts), std::move(rights));
  embed_cache().insert(g.node(), result);
  return result;
}

namespace {

// Recognizes the canonical form of an integer; returns true and the value.
bool as_integer(NormalGame g, long& value) {
  long magnitude = 0;
  NormalGame cur = g;
  while (true) {
    if (cur.lefts().empty() && cur.rights().empty()) {
      value = magnitude;
      return true;
    }
    if (cur.lefts().size() == 1 && cur.rights().empty()) {
      ++magnitude;
      cur = cur.lefts()[0];
      continue;
    }
    break;
  }
  magnitude = 0;
  cur = g;
  while (true) {
    if (cur.lefts().empty() && cur.rights().empty()) {
      value = -magnitude;
      return true;
    }
    if (cur.rights().size() == 1 && cur.lefts().empty()) {
      ++magnitude;
      cur = cur.rights()[0];
      continue;
    }
    return false;
  }
}

const std::map<const NormalNode*, std::string>& np_names() {
  static const std::map<const NormalNode*, std::string> names = {
      {np_star().node(), "*"},           {np_star2().node(), "*2"},
      {np_up().node(), "up"},            {np_down().node(), "down"},
      {np_up_star().node(), "up*"},      {np_down_star().node(), "down*"},
  };
  return names;
}

void print_game(NormalGame g, std::string& out);

// Prints an option list; a lone unnamed compound option is inlined into the
// parent braces with one extra bar, giving the usual {a||b|c} notation.
void print_side(std::span<const NormalGame> opts, std::string& out, int& extra_bars) {
  extra_bars = 0;
  if (opts.size() == 1) {
    NormalGame only = opts[0];
    long n;
    bool named = np_names().count(only.node()) || as_integer(only, n);
    if (!named && !only.lefts().empty() && !only.rights().empty()) {
      std::string inner;
      int inner_bars;
      print_side(only.lefts(), inner, inner_bars);
      int left_bars = inner_bars;
      out += inner;
      inner.clear();
      print_side(only.rights(), inner, inner_bars);
      int bars = 1 + std::max(left_bars, inner_bars);
      out.append(static_cast<std::size_t>(bars), '|');
      out += inner;
      extra_bars = bars;
      return;
    }
  }
  bool first = true;
  for (NormalGame opt : opts) {
    if (!first) out += ",";
    first = false;
    print_game(opt, out);
  }
}

void print_game(NormalGame g, std::string& out) {
  long n;
  if (as_integer(g, n)) {
    out += std::to_string(n);
    return;
  }
  if (auto it = np_names().find(g.node()); it != np_names().end()) {
    out += it->second;
    return;
  }
  std::string left, right;
  int left_bars, right_bars;
  print_side(g.lefts(), left, left_bars);
  print_side(g.rights(), right, right_bars);
  out += "{";
  out += left;
  out.append(static_cast<std::size_t>(1 + std::max(left_bars, right_bars)), '|');
  out += right;
  out += "}";
}

}  // namespace

std::string to_string(NormalGame g) {
  std::string out;
  print_game(g, out);
  return out;
}

}  // namespace cgt
