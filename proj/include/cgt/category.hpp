#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "cgt/lattice.hpp"
#include "cgt/lpg.hpp"
#include "cgt/universe.hpp"

namespace cgt {

// An alternating Right/Left move chain through a provisional game, starting
// at the root (possibly just the root).
struct PlaySequence {
  std::vector<LpgPosition> positions;
};

// A table lookup point: Right moved from `at` to `to`.
struct StrategyKey {
  LpgPosition at;
  LpgPosition to;

  friend bool operator==(const StrategyKey& a, const StrategyKey& b) {
    return a.at == b.at && a.to == b.to;
  }
};

struct StrategyKeyHash {
  std::size_t operator()(const StrategyKey& k) const noexcept;
};

// Left's playbook on one comparison position: a response to every Right
// move at every position the table itself can reach. Witnesses "g >= h up
// to the proviso at the root" and composes like a morphism h -> g.
struct MaintenanceStrategy {
  LpgPosition root;
  std::unordered_map<StrategyKey, LpgPosition, StrategyKeyHash> respond;
};

// First maintaining Left response to each Right move, in deterministic
// option order; absent when Left cannot survive from [g, h].
std::optional<MaintenanceStrategy> extract_strategy(const Universe& u, Game g, Game h);

// Copy-cat on [g, g]: every Right move on one board is repeated on the
// other, keeping the pair diagonal.
MaintenanceStrategy mimic_strategy(const Universe& u, Game g);

// Swivel-chair composite: outer on [G, J] and inner on [J, H] yield a
// strategy on [G, H]. Each Right move is bounced between the two side
// boards through their shared middle game until a response lands on an
// outer component. Throws std::invalid_argument when the middle games or
// universes differ.
MaintenanceStrategy compose(const MaintenanceStrategy& outer, const MaintenanceStrategy& inner);

// Exhaustive walk of the table's own reachable set: every Right move must
// have an entry and every entry must be a proviso-legal Left option.
bool validate_strategy(const MaintenanceStrategy& s);

// Same responses along every Right move sequence. Tables may differ on
// entries no play can reach.
bool observationally_equal(const MaintenanceStrategy& a, const MaintenanceStrategy& b);

// Every maximal play with Right leading and the table answering.
std::vector<PlaySequence> strategy_plays(const MaintenanceStrategy& s);

// Deterministic listing of the response table, one entry per line.
std::string strategy_table_string(const MaintenanceStrategy& s);

struct LawReport {
  std::size_t strategies = 0;
  std::size_t compositions = 0;
  std::size_t associativity_triples = 0;
  std::size_t identity_checks = 0;
  std::vector<std::string> violations;

  bool ok() const { return violations.empty(); }
};

// Builds the poset of equivalence classes up to max_rank, extracts a
// strategy for every ordered related pair, and checks: composites validate,
// composition is associative observationally, and the copy-cat strategy is
// a two-sided identity observationally.
LawReport verify_category_laws(const Universe& u, unsigned max_rank,
                               const EnumerationLimits& limits = {});

std::string law_report_string(const LawReport& report);

}  // namespace cgt
