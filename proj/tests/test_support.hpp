#pragma once

#include <cstdio>
#include <cstdlib>
#include <random>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#ifdef CGT_CLI_PATH
#include <sys/wait.h>
#endif

#include "cgt/game.hpp"
#include "cgt/rational.hpp"
#include "cgt/universe.hpp"

namespace cgt_test {

inline cgt::Rational random_score(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-4, 4);
  std::uniform_int_distribution<int> den(1, 3);
  return cgt::Rational(num(rng)) / den(rng);
}

inline cgt::Adorn random_adorn(std::mt19937_64& rng, cgt::AdornKind kind) {
  if (kind == cgt::AdornKind::kTrivial) return cgt::make_adorn(kind, 0);
  return cgt::make_adorn(kind, random_score(rng));
}

// Random normalized form of rank <= max_rank. With dicot=true the sides go
// atomic or non-atomic together, recursively, so the result is a dicot.
inline cgt::Game random_form(std::mt19937_64& rng, unsigned max_rank, cgt::AdornKind kind,
                             bool dicot) {
  std::uniform_int_distribution<int> atom_coin(0, 3);
  std::uniform_int_distribution<int> width(1, 3);

  auto make_side = [&](auto&& self, unsigned budget, bool force_atom) -> cgt::Side {
    if (force_atom) return cgt::Side::atom(random_adorn(rng, kind));
    std::vector<cgt::Game> options;
    int n = width(rng);
    for (int i = 0; i < n; ++i) {
      bool child_atoms = budget == 0 || atom_coin(rng) == 0;
      if (dicot) {
        cgt::Side l = self(self, budget == 0 ? 0 : budget - 1, child_atoms);
        cgt::Side r = self(self, budget == 0 ? 0 : budget - 1, child_atoms);
        options.push_back(cgt::make_game(std::move(l), std::move(r)));
      } else {
        bool left_atom = budget == 0 || atom_coin(rng) == 0;
        bool right_atom = budget == 0 || atom_coin(rng) == 0;
        cgt::Side l = self(self, budget == 0 ? 0 : budget - 1, left_atom);
        cgt::Side r = self(self, budget == 0 ? 0 : budget - 1, right_atom);
        options.push_back(cgt::make_game(std::move(l), std::move(r)));
      }
    }
    return cgt::Side::with_options(std::move(options));
  };

  bool atoms = max_rank == 0 || atom_coin(rng) == 0;
  if (dicot) {
    cgt::Side l = make_side(make_side, max_rank == 0 ? 0 : max_rank - 1, atoms);
    cgt::Side r = make_side(make_side, max_rank == 0 ? 0 : max_rank - 1, atoms);
    return cgt::make_game(std::move(l), std::move(r));
  }
  bool left_atom = max_rank == 0 || atom_coin(rng) == 0;
  bool right_atom = max_rank == 0 || atom_coin(rng) == 0;
  cgt::Side l = make_side(make_side, max_rank == 0 ? 0 : max_rank - 1, left_atom);
  cgt::Side r = make_side(make_side, max_rank == 0 ? 0 : max_rank - 1, right_atom);
  return cgt::make_game(std::move(l), std::move(r));
}

inline cgt::Game random_trivial_form(std::mt19937_64& rng, unsigned max_rank) {
  return random_form(rng, max_rank, cgt::AdornKind::kTrivial, false);
}

inline cgt::Game random_dicot_form(std::mt19937_64& rng, unsigned max_rank) {
  return random_form(rng, max_rank, cgt::AdornKind::kTrivial, true);
}

inline cgt::Game random_scoring_form(std::mt19937_64& rng, unsigned max_rank) {
  return random_form(rng, max_rank, cgt::AdornKind::kRational, true);
}

// Misere outcome of a dicot form as the classic direct recursion over
// literal forms: 11 next player wins, 1 Left wins, -1 Right wins, 0 previous
// player wins. Independent of the library's valuation machinery.
inline int misere_outcome_code(cgt::Game g, std::unordered_map<cgt::Game, int>& memo) {
  if (auto it = memo.find(g); it != memo.end()) return it->second;
  int k;
  if (g.is_purely_atomic()) {
    k = 11;
  } else {
    int j = 0;
    int w = 0;
    for (cgt::Game l : g.left_options()) {
      int m = misere_outcome_code(l, memo);
      if (m == 0 || m == 1) j = 1;
    }
    for (cgt::Game r : g.right_options()) {
      int m = misere_outcome_code(r, memo);
      if (m == 0 || m == -1) w = 1;
    }
    if (j == 1) {
      k = w == 1 ? 11 : 1;
    } else {
      k = w == 1 ? -1 : 0;
    }
  }
  memo.emplace(g, k);
  return k;
}

inline char misere_outcome_letter(int code) {
  switch (code) {
    case 1:
      return 'L';
    case 11:
      return 'N';
    case 0:
      return 'P';
    case -1:
      return 'R';
    default:
      throw std::logic_error("bad outcome code");
  }
}

#ifdef CGT_CLI_PATH
struct CliResult {
  int status = -1;
  std::string output;
};

// Runs the CLI with the given argument string, capturing stdout+stderr.
inline CliResult run_cli(const std::string& args) {
  CliResult result;
  std::string command = std::string(CGT_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(command.c_str(), "r");
  if (pipe == nullptr) throw std::runtime_error("popen failed: " + command);
  char buffer[4096];
  std::size_t n;
  while ((n = fread(buffer, 1, sizeof buffer, pipe)) > 0) result.output.append(buffer, n);
  int raw = pclose(pipe);
  result.status = (raw >= 0 && WIFEXITED(raw)) ? WEXITSTATUS(raw) : -1;
  return result;
}

// Same, feeding `input` on stdin.
inline CliResult run_cli_stdin(const std::string& args, const std::string& input) {
  CliResult result;
  std::string command = "printf '%s' \"$CGT_TEST_STDIN\" | " + std::string(CGT_CLI_PATH) + " " +
                        args + " 2>&1";
  setenv("CGT_TEST_STDIN", input.c_str(), 1);
  FILE* pipe = popen(command.c_str(), "r");
  if (pipe == nullptr) throw std::runtime_error("popen failed: " + command);
  char buffer[4096];
  std::size_t n;
  while ((n = fread(buffer, 1, sizeof buffer, pipe)) > 0) result.output.append(buffer, n);
  int raw = pclose(pipe);
  result.status = (raw >= 0 && WIFEXITED(raw)) ? WEXITSTATUS(raw) : -1;
  unsetenv("CGT_TEST_STDIN");
  return result;
}

inline std::string last_line(const std::string& text) {
  std::size_t end = text.find_last_not_of('\n');
  if (end == std::string::npos) return "";
  std::size_t start = text.rfind('\n', end);
  return text.substr(start == std::string::npos ? 0 : start + 1,
                     end - (start == std::string::npos ? 0 : start + 1) + 1);
}
#endif

}  // namespace cgt_test
