#pragma once

#include <cstddef>

namespace cgt::config {

// Memo caches hold at most this many entries; overflowing caches are reset
// wholesale rather than evicted piecemeal.
inline constexpr std::size_t kMemoCacheLimit = 1u << 22;

// Guard rails for exhaustive form enumeration. Rank grows doubly
// exponentially, so anything past these bounds is almost certainly a mistake.
inline constexpr unsigned kMaxEnumerationRank = 4;
inline constexpr std::size_t kMaxEnumerationForms = 4'000'000;

// A single swivel-chair response bounces between the two side boards at most
// this many times per position of the shared middle game.
inline constexpr std::size_t kComposeBounceSlack = 4;

}  // namespace cgt::config
