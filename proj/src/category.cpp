#include "cgt/category.hpp"

#include <algorithm>
#include <deque>
#include <optional>
#include <stdexcept>
#include <unordered_set>

#include "cgt/compare.hpp"
#include "cgt/config.hpp"
#include "cgt/memo.hpp"
#include "cgt/notation.hpp"

namespace cgt {

namespace {

int position_compare(const LpgPosition& a, const LpgPosition& b) {
  if (int c = form_compare(a.g, b.g)) return c;
  return form_compare(a.h, b.h);
}

std::string position_string(const LpgPosition& p) {
  return "[" + format_game(p.g) + "," + format_game(p.h) + "]";
}

struct PositionSetHash {
  std::size_t operator()(const LpgPosition& p) const noexcept { return LpgPositionHash{}(p); }
};

bool contains_position(const std::vector<LpgPosition>& list, const LpgPosition& p) {
  for (const LpgPosition& q : list) {
    if (q == p) return true;
  }
  return false;
}

}  // namespace

std::size_t StrategyKeyHash::operator()(const StrategyKey& k) const noexcept {
  std::size_t seed = LpgPositionHash{}(k.at);
  hash_combine(seed, LpgPositionHash{}(k.to));
  return seed;
}

std::optional<MaintenanceStrategy> extract_strategy(const Universe& u, Game g, Game h) {
  LpgPosition root = make_lpg(u, g, h);
  if (!maintain(root)) return std::nullopt;

  MaintenanceStrategy s{root, {}};
  std::deque<LpgPosition> queue{root};
  std::unordered_set<LpgPosition, PositionSetHash> visited{root};
  while (!queue.empty()) {
    LpgPosition at = queue.front();
    queue.pop_front();
    for (const LpgPosition& threat : lpg_right_options(at)) {
      std::optional<LpgPosition> reply;
      for (const LpgPosition& candidate : lpg_left_options(threat)) {
        if (maintain(candidate)) {
          reply = candidate;
          break;
        }
      }
      // A maintained position always has one; the root was checked above and
      // every stored reply maintains again.
      if (!reply) throw std::logic_error("maintained position lost a response");
      s.respond.emplace(StrategyKey{at, threat}, *reply);
      if (visited.insert(*reply).second) queue.push_back(*reply);
    }
  }
  return s;
}

MaintenanceStrategy mimic_strategy(const Universe& u, Game g) {
  LpgPosition root = make_lpg(u, g, g);
  MaintenanceStrategy s{root, {}};
  std::deque<Game> queue{g};
  std::unordered_set<const GameNode*> visited{g.node()};
  while (!queue.empty()) {
    Game x = queue.front();
    queue.pop_front();
    LpgPosition at{x, x, &u};
    for (Game xr : x.right_options()) {
      s.respond.emplace(StrategyKey{at, LpgPosition{xr, x, &u}}, LpgPosition{xr, xr, &u});
      if (visited.insert(xr.node()).second) queue.push_back(xr);
    }
    for (Game xl : x.left_options()) {
      s.respond.emplace(StrategyKey{at, LpgPosition{x, xl, &u}}, LpgPosition{xl, xl, &u});
      if (visited.insert(xl.node()).second) queue.push_back(xl);
    }
  }
  return s;
}

namespace {

struct ComposeState {
  Game g;
  Game j;
  Game h;

  friend bool operator==(const ComposeState& a, const ComposeState& b) {
    return a.g == b.g && a.j == b.j && a.h == b.h;
  }
};
struct ComposeStateHash {
  std::size_t operator()(const ComposeState& s) const noexcept {
    std::size_t seed = std::hash<Game>{}(s.g);
    hash_combine(seed, std::hash<Game>{}(s.j));
    hash_combine(seed, std::hash<Game>{}(s.h));
    return seed;
  }
};

const LpgPosition& table_response(const MaintenanceStrategy& s, const LpgPosition& at,
                                  const LpgPosition& to) {
  auto it = s.respond.find(StrategyKey{at, to});
  if (it == s.respond.end()) {
    throw std::logic_error("composition reached a hole in a factor's response table at " +
                           position_string(to));
  }
  return it->second;
}

}  // namespace

MaintenanceStrategy compose(const MaintenanceStrategy& outer, const MaintenanceStrategy& inner) {
  if (outer.root.universe != inner.root.universe) {
    throw std::invalid_argument("composed strategies live in different universes");
  }
  if (outer.root.h != inner.root.g) {
    throw std::invalid_argument("composed strategies do not share a middle game");
  }
  const Universe* u = outer.root.universe;

  MaintenanceStrategy result{LpgPosition{outer.root.g, inner.root.h, u}, {}};
  std::deque<ComposeState> queue{{outer.root.g, outer.root.h, inner.root.h}};
  std::unordered_set<ComposeState, ComposeStateHash> visited{queue.front()};

  while (!queue.empty()) {
    ComposeState state = queue.front();
    queue.pop_front();
    LpgPosition at{state.g, state.h, u};
    for (const LpgPosition& threat : lpg_right_options(at)) {
      if (result.respond.count(StrategyKey{at, threat})) continue;

      // Bounce the move through the side boards until a response falls on an
      // outer component. Each middle response strictly descends in the
      // middle game, which bounds the loop.
      LpgPosition b1{state.g, state.j, u};
      LpgPosition b2{state.j, state.h, u};
      bool to_outer_board = threat.g != state.g;
      LpgPosition delivered = to_outer_board ? LpgPosition{threat.g, b1.h, u}
                                             : LpgPosition{b2.g, threat.h, u};
      unsigned budget = state.j.rank() + config::kComposeBounceSlack;
      std::optional<LpgPosition> reply;
      while (!reply) {
        if (budget-- == 0) throw std::logic_error("swivel bounce exceeded middle-game depth");
        if (to_outer_board) {
          LpgPosition r = table_response(outer, b1, delivered);
          bool landed = r.g != delivered.g;
          b1 = r;
          if (landed) {
            reply = LpgPosition{r.g, b2.h, u};
          } else {
            to_outer_board = false;
            delivered = LpgPosition{r.h, b2.h, u};
          }
        } else {
          LpgPosition r = table_response(inner, b2, delivered);
          bool landed = r.h != delivered.h;
          b2 = r;
          if (landed) {
            reply = LpgPosition{b1.g, r.h, u};
          } else {
            to_outer_board = true;
            delivered = LpgPosition{b1.g, r.g, u};
          }
        }
      }
      if (b1.h != b2.g) throw std::logic_error("side boards desynchronized after a swivel");

      result.respond.emplace(StrategyKey{at, threat}, *reply);
      ComposeState next{reply->g, b1.h, reply->h};
      if (visited.insert(next).second) queue.push_back(next);
    }
  }
  return result;
}

bool validate_strategy(const MaintenanceStrategy& s) {
  std::deque<LpgPosition> queue{s.root};
  std::unordered_set<LpgPosition, PositionSetHash> visited{s.root};
  while (!queue.empty()) {
    LpgPosition at = queue.front();
    queue.pop_front();
    for (const LpgPosition& threat : lpg_right_options(at)) {
      auto it = s.respond.find(StrategyKey{at, threat});
      if (it == s.respond.end()) return false;
      if (!contains_position(lpg_left_options(threat), it->second)) return false;
      if (visited.insert(it->second).second) queue.push_back(it->second);
    }
  }
  return true;
}

bool observationally_equal(const MaintenanceStrategy& a, const MaintenanceStrategy& b) {
  if (!(a.root == b.root)) return false;
  std::deque<LpgPosition> queue{a.root};
  std::unordered_set<LpgPosition, PositionSetHash> visited{a.root};
  while (!queue.empty()) {
    LpgPosition at = queue.front();
    queue.pop_front();
    for (const LpgPosition& threat : lpg_right_options(at)) {
      auto ia = a.respond.find(StrategyKey{at, threat});
      auto ib = b.respond.find(StrategyKey{at, threat});
      if (ia == a.respond.end() || ib == b.respond.end()) return false;
      if (!(ia->second == ib->second)) return false;
      if (visited.insert(ia->second).second) queue.push_back(ia->second);
    }
  }
  return true;
}

namespace {

void collect_plays(const MaintenanceStrategy& s, std::vector<LpgPosition>& chain,
                   std::vector<PlaySequence>& out) {
  LpgPosition at = chain.back();  // copied: growing the chain reallocates
  std::vector<LpgPosition> threats = lpg_right_options(at);
  if (threats.empty()) {
    out.push_back(PlaySequence{chain});
    return;
  }
  for (const LpgPosition& threat : threats) {
    auto it = s.respond.find(StrategyKey{at, threat});
    if (it == s.respond.end()) {
      // Incomplete table: report the dead end as a maximal play.
      std::vector<LpgPosition> cut = chain;
      cut.push_back(threat);
      out.push_back(PlaySequence{cut});
      continue;
    }
    chain.push_back(threat);
    chain.push_back(it->second);
    collect_plays(s, chain, out);
    chain.pop_back();
    chain.pop_back();
  }
}

}  // namespace

std::vector<PlaySequence> strategy_plays(const MaintenanceStrategy& s) {
  std::vector<PlaySequence> out;
  std::vector<LpgPosition> chain{s.root};
  collect_plays(s, chain, out);
  return out;
}

std::string strategy_table_string(const MaintenanceStrategy& s) {
  std::vector<const std::pair<const StrategyKey, LpgPosition>*> entries;
  entries.reserve(s.respond.size());
  for (const auto& entry : s.respond) entries.push_back(&entry);
  std::sort(entries.begin(), entries.end(), [](const auto* a, const auto* b) {
    if (int c = position_compare(a->first.at, b->first.at)) return c < 0;
    return position_compare(a->first.to, b->first.to) < 0;
  });
  std::string out = "strategy on " + position_string(s.root) + "\n";
  for (const auto* entry : entries) {
    out += "  at " + position_string(entry->first.at) + "  R " +
           position_string(entry->first.to) + "  ->  L " + position_string(entry->second) + "\n";
  }
  return out;
}

LawReport verify_category_laws(const Universe& u, unsigned max_rank,
                               const EnumerationLimits& limits) {
  LawReport report;
  std::vector<Game> forms = enumerate_members(u, max_rank, limits);
  std::vector<EquivalenceClass> classes = quotient(u, forms);

  std::vector<Game> reps;
  reps.reserve(classes.size());
  for (const EquivalenceClass& c : classes) reps.push_back(c.representative);
  const std::size_t n = reps.size();

  // Strategies for every related ordered pair, reflexive ones included.
  std::vector<std::vector<std::optional<MaintenanceStrategy>>> strat(
      n, std::vector<std::optional<MaintenanceStrategy>>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (!geq(u, reps[i], reps[j])) continue;
      strat[i][j] = extract_strategy(u, reps[i], reps[j]);
      ++report.strategies;
      if (!strat[i][j]) {
        report.violations.push_back("no strategy extracted for a related pair " +
                                    format_game(reps[i]) + " >= " + format_game(reps[j]));
        continue;
      }
      if (!validate_strategy(*strat[i][j])) {
        report.violations.push_back("extracted strategy invalid on [" + format_game(reps[i]) +
                                    "," + format_game(reps[j]) + "]");
      }
    }
  }

  std::vector<MaintenanceStrategy> mimics;
  mimics.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    mimics.push_back(mimic_strategy(u, reps[i]));
    if (!validate_strategy(mimics.back())) {
      report.violations.push_back("mimic strategy invalid on [" + format_game(reps[i]) + "," +
                                  format_game(reps[i]) + "]");
    }
  }

  auto have = [&](std::size_t i, std::size_t j) { return strat[i][j].has_value(); };

  // Pairwise composition stays a valid strategy.
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (!have(i, j)) continue;
      for (std::size_t k = 0; k < n; ++k) {
        if (!have(j, k)) continue;
        MaintenanceStrategy c = compose(*strat[i][j], *strat[j][k]);
        ++report.compositions;
        if (!validate_strategy(c)) {
          report.violations.push_back("composite invalid on [" + format_game(reps[i]) + "," +
                                      format_game(reps[k]) + "] via " + format_game(reps[j]));
        }
      }
    }
  }

  // Associativity, observed along every Right play.
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (!have(i, j)) continue;
      for (std::size_t k = 0; k < n; ++k) {
        if (!have(j, k)) continue;
        for (std::size_t l = 0; l < n; ++l) {
          if (!have(k, l)) continue;
          MaintenanceStrategy left =
              compose(compose(*strat[i][j], *strat[j][k]), *strat[k][l]);
          MaintenanceStrategy right =
              compose(*strat[i][j], compose(*strat[j][k], *strat[k][l]));
          ++report.associativity_triples;
          if (!observationally_equal(left, right)) {
            report.violations.push_back(
                "associativity failed across " + format_game(reps[i]) + " >= " +
                format_game(reps[j]) + " >= " + format_game(reps[k]) + " >= " +
                format_game(reps[l]));
          }
        }
      }
    }
  }

  // Copy-cat is an identity on both sides.
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (!have(i, j)) continue;
      ++report.identity_checks;
      if (!observationally_equal(compose(mimics[i], *strat[i][j]), *strat[i][j])) {
        report.violations.push_back("left identity failed at [" + format_game(reps[i]) + "," +
                                    format_game(reps[j]) + "]");
      }
      if (!observationally_equal(compose(*strat[i][j], mimics[j]), *strat[i][j])) {
        report.violations.push_back("right identity failed at [" + format_game(reps[i]) + "," +
                                    format_game(reps[j]) + "]");
      }
    }
  }
  return report;
}

std::string law_report_string(const LawReport& report) {
  std::string out;
  out += "strategies extracted: " + std::to_string(report.strategies) + "\n";
  out += "compositions validated: " + std::to_string(report.compositions) + "\n";
  out += "associativity triples: " + std::to_string(report.associativity_triples) + "\n";
  out += "identity checks: " + std::to_string(report.identity_checks) + "\n";
  if (report.ok()) {
    out += "all category laws hold\n";
  } else {
    out += "violations: " + std::to_string(report.violations.size()) + "\n";
    for (const std::string& v : report.violations) out += "  " + v + "\n";
  }
  return out;
}

}  // namespace cgt
