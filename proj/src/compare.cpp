#include "cgt/compare.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>
#include <utility>

#include "cgt/lpg.hpp"
#include "cgt/memo.hpp"

namespace cgt {

namespace {

struct PairKey {
  const GameNode* g;
  const GameNode* h;
  const Universe* universe;
  friend bool operator==(const PairKey& a, const PairKey& b) {
    return a.g == b.g && a.h == b.h && a.universe == b.universe;
  }
};
struct PairKeyHash {
  std::size_t operator()(const PairKey& k) const noexcept {
    std::size_t seed = std::hash<const void*>{}(k.g);
    hash_combine(seed, std::hash<const void*>{}(k.h));
    hash_combine(seed, std::hash<const void*>{}(k.universe));
    return seed;
  }
};

MemoCache<PairKey, bool, PairKeyHash>& cnp_cache() {
  static MemoCache<PairKey, bool, PairKeyHash> cache;
  return cache;
}

}  // namespace

std::string relation_string(Relation r) {
  switch (r) {
    case Relation::kEqual:
      return "G=H";
    case Relation::kGreater:
      return "G>H";
    case Relation::kLess:
      return "G<H";
    case Relation::kIncomparable:
      break;
  }
  return "G<>H";
}

bool geq(const Universe& u, Game g, Game h) {
  if (!u.proviso(g, h)) return false;
  return maintain(LpgPosition{g, h, &u});
}

Relation relation(const Universe& u, Game g, Game h) {
  bool ge = geq(u, g, h);
  bool le = geq(u, h, g);
  if (ge && le) return Relation::kEqual;
  if (ge) return Relation::kGreater;
  if (le) return Relation::kLess;
  return Relation::kIncomparable;
}

bool geq_cnp_oracle(const Universe& u, Game g, Game h) {
  PairKey key{g.node(), h.node(), &u};
  if (auto hit = cnp_cache().find(key)) {
    // Re-run the membership check the cached path skipped.
    (void)u.proviso(g, h);
    return *hit;
  }
  bool result = u.proviso(g, h);
  if (result) {
    for (Game gr : g.right_options()) {
      bool answered = false;
      for (Game hr : h.right_options()) {
        if (geq_cnp_oracle(u, gr, hr)) {
          answered = true;
          break;
        }
      }
      if (!answered) {
        for (Game grl : gr.left_options()) {
          if (geq_cnp_oracle(u, grl, h)) {
            answered = true;
            break;
          }
        }
      }
      if (!answered) {
        result = false;
        break;
      }
    }
  }
  if (result) {
    for (Game hl : h.left_options()) {
      bool answered = false;
      for (Game gl : g.left_options()) {
        if (geq_cnp_oracle(u, gl, hl)) {
          answered = true;
          break;
        }
      }
      if (!answered) {
        for (Game hlr : hl.right_options()) {
          if (geq_cnp_oracle(u, g, hlr)) {
            answered = true;
            break;
          }
        }
      }
      if (!answered) {
        result = false;
        break;
      }
    }
  }
  cnp_cache().insert(key, result);
  return result;
}

namespace {

void collect_subforms(Game g, std::unordered_set<const GameNode*>& seen, std::vector<Game>& out) {
  if (!seen.insert(g.node()).second) return;
  for (Game opt : g.left_options()) collect_subforms(opt, seen, out);
  for (Game opt : g.right_options()) collect_subforms(opt, seen, out);
  out.push_back(g);
}

Result atom_sum_left(const Universe& u, Game a, Game b) {
  const Adorn& x = a.left().adorn();
  const Adorn& y = b.left().adorn();
  return u.nu_left(make_adorn(x.kind, x.value + y.value));
}

Result atom_sum_right(const Universe& u, Game a, Game b) {
  const Adorn& x = a.right().adorn();
  const Adorn& y = b.right().adorn();
  return u.nu_right(make_adorn(x.kind, x.value + y.value));
}

}  // namespace

std::vector<DistinguishResult> distinguish_batch(const Universe& u,
                                                 const std::vector<std::pair<Game, Game>>& pairs,
                                                 unsigned max_rank,
                                                 const EnumerationLimits& limits) {
  std::vector<DistinguishResult> results(pairs.size());
  if (pairs.empty()) return results;
  for (const auto& [g, h] : pairs) {
    if (!u.member(g)) throw NonMemberError("first game is not a member of universe " + u.id());
    if (!u.member(h)) throw NonMemberError("second game is not a member of universe " + u.id());
  }

  std::vector<Game> forms = enumerate_members(u, max_rank, limits);

  // Closed family of subforms of all queried games, ranks ascending, so a
  // game's options always precede it.
  std::vector<Game> subs;
  {
    std::unordered_set<const GameNode*> seen;
    for (const auto& [g, h] : pairs) {
      collect_subforms(g, seen, subs);
      collect_subforms(h, seen, subs);
    }
    std::sort(subs.begin(), subs.end(), form_less);
  }
  std::unordered_map<const GameNode*, std::size_t> sub_index;
  for (std::size_t i = 0; i < subs.size(); ++i) sub_index.emplace(subs[i].node(), i);
  const std::size_t ns = subs.size();

  std::vector<std::size_t> pending(pairs.size());
  for (std::size_t i = 0; i < pending.size(); ++i) pending[i] = i;

  auto check_witness = [&](Game x, const OutcomePair* table) {
    for (std::size_t k = 0; k < pending.size();) {
      std::size_t i = pending[k];
      const OutcomePair& og = table[sub_index.at(pairs[i].first.node())];
      const OutcomePair& oh = table[sub_index.at(pairs[i].second.node())];
      if (og.left < oh.left || og.right < oh.right) {
        results[i].witness = x;
        pending[k] = pending.back();
        pending.pop_back();
      } else {
        ++k;
      }
    }
  };

  // Forms come back sorted with rank as the leading key; the prefix of
  // lower-rank forms is exactly the option pool of the top-rank ones.
  std::size_t pool_count = 0;
  while (pool_count < forms.size() && forms[pool_count].rank() < max_rank) ++pool_count;
  std::unordered_map<const GameNode*, std::size_t> pool_index;
  pool_index.reserve(pool_count);
  for (std::size_t i = 0; i < pool_count; ++i) pool_index.emplace(forms[i].node(), i);

  std::vector<OutcomePair> pool_table(pool_count * ns, OutcomePair{0, 0});
  for (std::size_t xi = 0; xi < pool_count; ++xi) {
    Game x = forms[xi];
    OutcomePair* row = pool_table.data() + xi * ns;
    for (std::size_t si = 0; si < ns; ++si) {
      row[si] = OutcomePair{sum_outcome_left(u, subs[si], x), sum_outcome_right(u, subs[si], x)};
    }
    check_witness(x, row);
    if (pending.empty()) return results;
  }

  // Top-rank X: one dynamic-programming sweep over the subform family per
  // candidate, reading option rows from the pool table.
  std::vector<OutcomePair> row(ns, OutcomePair{0, 0});
  for (std::size_t xi = pool_count; xi < forms.size(); ++xi) {
    Game x = forms[xi];
    for (std::size_t si = 0; si < ns; ++si) {
      Game s = subs[si];
      bool left_atomic = s.is_left_atomic() && x.is_left_atomic();
      Result best_left = left_atomic ? atom_sum_left(u, s, x) : Result(0);
      if (!left_atomic) {
        bool first = true;
        for (Game sl : s.left_options()) {
          const Result& cand = row[sub_index.at(sl.node())].right;
          if (first || cand > best_left) best_left = cand;
          first = false;
        }
        for (Game xl : x.left_options()) {
          const Result& cand = pool_table[pool_index.at(xl.node()) * ns + si].right;
          if (first || cand > best_left) best_left = cand;
          first = false;
        }
      }
      bool right_atomic = s.is_right_atomic() && x.is_right_atomic();
      Result best_right = right_atomic ? atom_sum_right(u, s, x) : Result(0);
      if (!right_atomic) {
        bool first = true;
        for (Game sr : s.right_options()) {
          const Result& cand = row[sub_index.at(sr.node())].left;
          if (first || cand < best_right) best_right = cand;
          first = false;
        }
        for (Game xr : x.right_options()) {
          const Result& cand = pool_table[pool_index.at(xr.node()) * ns + si].left;
          if (first || cand < best_right) best_right = cand;
          first = false;
        }
      }
      row[si] = OutcomePair{std::move(best_left), std::move(best_right)};
    }
    check_witness(x, row.data());
    if (pending.empty()) return results;
  }
  return results;
}

std::optional<Game> distinguish(const Universe& u, Game g, Game h, unsigned max_rank,
                                const EnumerationLimits& limits) {
  std::vector<std::pair<Game, Game>> one{{g, h}};
  return distinguish_batch(u, one, max_rank, limits)[0].witness;
}

CompareReport compare_report(const Universe& u, Game g, Game h) {
  CompareReport r;
  r.proviso_gh = u.proviso(g, h);
  r.proviso_hg = u.proviso(h, g);
  r.maintain_gh = maintain(LpgPosition{g, h, &u});
  r.maintain_hg = maintain(LpgPosition{h, g, &u});
  r.outcome_g = outcome(u, g);
  r.outcome_h = outcome(u, h);
  r.lpg_gh = canonical_form(unfold(LpgPosition{g, h, &u}));
  r.lpg_hg = canonical_form(unfold(LpgPosition{h, g, &u}));
  bool ge = r.proviso_gh && r.maintain_gh;
  bool le = r.proviso_hg && r.maintain_hg;
  r.relation = ge && le   ? Relation::kEqual
               : ge       ? Relation::kGreater
               : le       ? Relation::kLess
                          : Relation::kIncomparable;
  return r;
}

}  // namespace cgt
