#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "cgt/game.hpp"
#include "cgt/normal_play.hpp"
#include "cgt/universe.hpp"

namespace cgt {

struct EnumerationLimits {
  unsigned max_rank_cap = 4;
  std::size_t max_forms = 4'000'000;
  // 0 means unbounded; otherwise option lists draw at most this many
  // lower-rank forms per side.
  std::size_t max_subset_size = 0;
};

// Every member form of u with rank <= max_rank, sorted ascending in form
// order. Only universes over the trivial adorn group have a finite form
// census; others throw std::invalid_argument. Exceeding limits.max_forms
// throws std::length_error.
std::vector<Game> enumerate_members(const Universe& u, unsigned max_rank,
                                    const EnumerationLimits& limits = {});

struct EquivalenceClass {
  Game representative;           // least member in form order
  std::vector<Game> members;     // sorted ascending
};

// Partition of `forms` by mutual geq in u. Classes are sorted by their
// representative.
std::vector<EquivalenceClass> quotient(const Universe& u, const std::vector<Game>& forms);

struct HasseEdge {
  Game upper;
  Game lower;
  NormalGame label;  // canonical unfolded value of the comparison position
};

struct HasseDiagram {
  std::vector<EquivalenceClass> classes;
  std::vector<HasseEdge> edges;  // covering relations only
};

// Partial order of the u-member forms of rank <= max_rank, reduced to
// covering edges. Each edge carries the canonical form of the provisional
// game played from [upper, lower].
HasseDiagram hasse(const Universe& u, unsigned max_rank, const EnumerationLimits& limits = {});

std::string hasse_dot(const Universe& u, const HasseDiagram& diagram);
std::string hasse_json(const Universe& u, const HasseDiagram& diagram);

}  // namespace cgt
