#include "cgt/lpg.hpp"

#include <utility>

#include "cgt/memo.hpp"
#include "cgt/notation.hpp"

namespace cgt {

namespace {

struct LpgKey {
  const GameNode* g;
  const GameNode* h;
  const Universe* universe;
  friend bool operator==(const LpgKey& a, const LpgKey& b) {
    return a.g == b.g && a.h == b.h && a.universe == b.universe;
  }
};
struct LpgKeyHash {
  std::size_t operator()(const LpgKey& k) const noexcept {
    std::size_t seed = std::hash<const void*>{}(k.g);
    hash_combine(seed, std::hash<const void*>{}(k.h));
    hash_combine(seed, std::hash<const void*>{}(k.universe));
    return seed;
  }
};

LpgKey key_of(const LpgPosition& p) {
  return LpgKey{p.g.node(), p.h.node(), p.universe};
}

MemoCache<LpgKey, NormalGame, LpgKeyHash>& unfold_cache() {
  static MemoCache<LpgKey, NormalGame, LpgKeyHash> cache;
  return cache;
}

MemoCache<LpgKey, bool, LpgKeyHash>& maintain_cache() {
  static MemoCache<LpgKey, bool, LpgKeyHash> cache;
  return cache;
}

bool proviso_holds(const Universe& u, Game g, Game h) {
  // Options of members are members again, so this never throws on positions
  // generated from a valid root.
  return u.proviso(g, h);
}

}  // namespace

std::size_t LpgPositionHash::operator()(const LpgPosition& p) const noexcept {
  return LpgKeyHash{}(LpgKey{p.g.node(), p.h.node(), p.universe});
}

LpgPosition make_lpg(const Universe& u, Game g, Game h) {
  if (!u.member(g)) throw NonMemberError("first game is not a member of universe " + u.id());
  if (!u.member(h)) throw NonMemberError("second game is not a member of universe " + u.id());
  return LpgPosition{g, h, &u};
}

std::vector<LpgPosition> lpg_left_options(const LpgPosition& p) {
  std::vector<LpgPosition> out;
  for (Game gl : p.g.left_options()) {
    if (proviso_holds(*p.universe, gl, p.h)) out.push_back({gl, p.h, p.universe});
  }
  for (Game hr : p.h.right_options()) {
    if (proviso_holds(*p.universe, p.g, hr)) out.push_back({p.g, hr, p.universe});
  }
  return out;
}

std::vector<LpgPosition> lpg_right_options(const LpgPosition& p) {
  std::vector<LpgPosition> out;
  for (Game gr : p.g.right_options()) out.push_back({gr, p.h, p.universe});
  for (Game hl : p.h.left_options()) out.push_back({p.g, hl, p.universe});
  return out;
}

NormalGame unfold(const LpgPosition& p) {
  LpgKey key = key_of(p);
  if (auto hit = unfold_cache().find(key)) return *hit;
  std::vector<NormalGame> lefts, rights;
  for (const LpgPosition& q : lpg_left_options(p)) lefts.push_back(unfold(q));
  for (const LpgPosition& q : lpg_right_options(p)) rights.push_back(unfold(q));
  NormalGame result = make_normal_game(std::move(lefts), std::move(rights));
  unfold_cache().insert(key, result);
  return result;
}

bool maintain(const LpgPosition& p) {
  LpgKey key = key_of(p);
  if (auto hit = maintain_cache().find(key)) return *hit;
  bool result = true;
  for (const LpgPosition& threat : lpg_right_options(p)) {
    bool answered = false;
    for (const LpgPosition& reply : lpg_left_options(threat)) {
      if (maintain(reply)) {
        answered = true;
        break;
      }
    }
    if (!answered) {
      result = false;
      break;
    }
  }
  maintain_cache().insert(key, result);
  return result;
}

namespace {

std::string position_label(const LpgPosition& p) {
  return "[" + format_game(p.g) + "," + format_game(p.h) + "]";
}

void emit_tree(const LpgPosition& p, std::size_t& counter, std::size_t id, std::string& out) {
  out += "  n" + std::to_string(id) + " [label=\"" + position_label(p) + "\"];\n";
  for (const LpgPosition& q : lpg_left_options(p)) {
    std::size_t child = ++counter;
    emit_tree(q, counter, child, out);
    out += "  n" + std::to_string(id) + " -> n" + std::to_string(child) + " [label=\"L\"];\n";
  }
  for (const LpgPosition& q : lpg_right_options(p)) {
    std::size_t child = ++counter;
    emit_tree(q, counter, child, out);
    out += "  n" + std::to_string(id) + " -> n" + std::to_string(child) +
           " [label=\"R\", style=dashed];\n";
  }
}

}  // namespace

std::string lpg_tree_dot(const LpgPosition& p) {
  std::string out = "digraph provisional_game {\n  node [shape=box];\n";
  std::size_t counter = 0;
  emit_tree(p, counter, 0, out);
  out += "}\n";
  return out;
}

}  // namespace cgt
