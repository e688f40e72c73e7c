// Gate checks for the full deliverable, one verdict line per criterion.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <chrono>
#include <cstdio>
#include <random>
#include <set>
#include <string>
#include <tuple>
#include <unordered_map>
#include <utility>
#include <vector>

#include "cgt/category.hpp"
#include "cgt/compare.hpp"
#include "cgt/game.hpp"
#include "cgt/lattice.hpp"
#include "cgt/lpg.hpp"
#include "cgt/normal_play.hpp"
#include "cgt/notation.hpp"
#include "cgt/universe.hpp"
#include "test_support.hpp"

using namespace cgt;

namespace {

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

void report(int criterion, bool pass) {
  std::printf("criterion %d: %s\n", criterion, pass ? "PASS" : "FAIL");
  std::fflush(stdout);
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("criterion 1: the worked comparison unfolds to up") {
  auto start = std::chrono::steady_clock::now();
  const Universe& dm = Universe::dicot_misere();

  bool pass = canonical_form(unfold(make_lpg(dm, mup_game(), zero_game()))) == np_up();
  pass = pass && relation(dm, mup_game(), zero_game()) == Relation::kGreater;

  cgt_test::CliResult cli = cgt_test::run_cli("compare \"{0,*|*}\" 0");
  pass = pass && cli.status == 0 && cgt_test::last_line(cli.output) == "G>H";

  pass = pass && seconds_since(start) < 1.0;
  report(1, pass);
  CHECK(pass);
}

TEST_CASE("criterion 2: proviso rejection is reported as such") {
  const Universe& dm = Universe::dicot_misere();
  bool pass = !geq(dm, up_game(), zero_game());

  CompareReport r = compare_report(dm, up_game(), zero_game());
  pass = pass && !r.proviso_gh && r.maintain_gh;

  cgt_test::CliResult cli = cgt_test::run_cli("compare --explain up 0");
  pass = pass && cli.status == 0;
  pass = pass && contains(cli.output, "Proviso(G,H): fails (o(G) = R is not >= o(H) = N)");
  pass = pass && contains(cli.output, "Maintenance(G,H): holds");
  pass = pass && cgt_test::last_line(cli.output) == "G<>H";

  report(2, pass);
  CHECK(pass);
}

TEST_CASE("criterion 3: the rank-two order diagram is reproduced exactly") {
  auto start = std::chrono::steady_clock::now();
  const Universe& dm = Universe::dicot_misere();
  HasseDiagram d = hasse(dm, 2);

  bool pass = d.classes.size() == 9 && d.edges.size() == 12;

  using Triple = std::tuple<std::string, std::string, std::string>;
  std::set<Triple> expected = {
      {"mup*", "*", "up"},
      {"mup*", "down", "0"},
      {"mup*", "*2", "{up|down*}"},
      {"mup", "up", "0"},
      {"mup", "0", "up"},
      {"mup", "*2", "{up||0,down*|0,down*}"},
      {"up", "mown*", "0"},
      {"*", "mown*", "up"},
      {"down", "mown", "0"},
      {"0", "mown", "up"},
      {"*2", "mown*", "{up|down*}"},
      {"*2", "mown", "{up||0,down*|0,down*}"},
  };
  std::set<Triple> actual;
  for (const HasseEdge& e : d.edges) {
    std::string label = to_string(e.label);
    actual.insert({display_name(dm, e.upper), display_name(dm, e.lower), label});
    pass = pass && (label == "up" || label == "0" || label == "{up|down*}" ||
                    label == "{up||0,down*|0,down*}");
  }
  pass = pass && actual == expected;

  pass = pass && seconds_since(start) < 30.0;
  report(3, pass);
  CHECK(pass);
}

TEST_CASE("criterion 4: both comparison routes agree on every rank-two pair") {
  auto start = std::chrono::steady_clock::now();
  const Universe& dm = Universe::dicot_misere();
  std::vector<Game> census = enumerate_members(dm, 2);

  bool pass = census.size() == 10;
  std::size_t pairs = 0;
  for (Game g : census)
    for (Game h : census) {
      ++pairs;
      if (geq(dm, g, h) != geq_cnp_oracle(dm, g, h)) pass = false;
    }
  pass = pass && pairs == 100;

  pass = pass && seconds_since(start) < 120.0;
  report(4, pass);
  CHECK(pass);
}

TEST_CASE("criterion 5: no witness refutes a verdict that holds") {
  const Universe& dm = Universe::dicot_misere();
  std::vector<Game> census = enumerate_members(dm, 2);

  std::vector<std::pair<Game, Game>> held;
  for (Game g : census)
    for (Game h : census)
      if (geq(dm, g, h)) held.emplace_back(g, h);
  bool pass = held.size() == 30;

  for (const DistinguishResult& r : distinguish_batch(dm, held, 3))
    if (r.witness) pass = false;

  std::optional<Game> refuter = distinguish(dm, up_game(), zero_game(), 3);
  pass = pass && refuter && *refuter == zero_game();

  report(5, pass);
  CHECK(pass);
}

TEST_CASE("criterion 6: the normal universe degenerates to plain normal play") {
  const Universe& np = Universe::normal_play();
  std::mt19937_64 rng(20260818);

  bool pass = true;
  for (int i = 0; i < 200; ++i) {
    Game g = cgt_test::random_trivial_form(rng, 3);
    Game h = cgt_test::random_trivial_form(rng, 3);
    NormalGame ng = to_normal_game(g);
    NormalGame nh = to_normal_game(h);
    if (geq(np, g, h) != np_geq(ng, nh)) pass = false;
    if (!np_equivalent(unfold(make_lpg(np, g, h)), np_sum(ng, np_negate(nh)))) pass = false;
  }

  report(6, pass);
  CHECK(pass);
}

TEST_CASE("criterion 7: maintenance strategies obey the category laws") {
  auto start = std::chrono::steady_clock::now();
  LawReport r = verify_category_laws(Universe::dicot_misere(), 2);

  bool pass = r.ok();
  pass = pass && r.strategies == 25;
  pass = pass && r.compositions == 49;
  pass = pass && r.associativity_triples == 81;
  pass = pass && r.identity_checks == 25;

  pass = pass && seconds_since(start) < 120.0;
  report(7, pass);
  CHECK(pass);
}

TEST_CASE("criterion 8: outcomes match the direct recursion on every rank-three dicot") {
  const Universe& dm = Universe::dicot_misere();
  std::vector<Game> census = enumerate_members(dm, 3);

  bool pass = census.size() == 1'046'530;
  std::unordered_map<Game, int> memo;
  for (Game g : census) {
    char direct = cgt_test::misere_outcome_letter(cgt_test::misere_outcome_code(g, memo));
    if (outcome_symbol(outcome(dm, g)) != direct) pass = false;
  }

  report(8, pass);
  CHECK(pass);
}

TEST_CASE("criterion 9: sums cover all four side cases and respect conjugation") {
  Rational half = Rational(1) / 2;
  Rational third = Rational(1) / 3;

  // both sides atomic: adorns add componentwise
  Game a = atomic_game(half, Rational(3) / 4);
  Game b = atomic_game(Rational(-2) / 3, Rational(5) / 6);
  bool pass = disjunctive_sum(a, b) ==
              atomic_game(half + Rational(-2) / 3, Rational(3) / 4 + Rational(5) / 6);

  // left atomic in one summand only: moves come from the other summand
  Game moving = make_game(Side::with_options({a}), Side::with_options({b}));
  Game left_sum = disjunctive_sum(a, moving);
  pass = pass && !left_sum.left().is_atom() && left_sum.left().options().size() == 1;
  pass = pass && left_sum.left().options()[0] == disjunctive_sum(a, a);

  // ... and symmetrically when the atomic summand is on the other side
  Game right_sum = disjunctive_sum(moving, b);
  pass = pass && !right_sum.right().is_atom() && right_sum.right().options().size() == 1;
  pass = pass && right_sum.right().options()[0] == disjunctive_sum(b, b);

  // neither side atomic: both summands contribute moves
  Game c = make_game(Side::with_options({atomic_game(third, third)}),
                     Side::with_options({atomic_game(-1, -1)}));
  Game both = disjunctive_sum(moving, c);
  pass = pass && both.left().options().size() == 2;
  std::vector<Game> expect_left = {disjunctive_sum(a, c),
                                   disjunctive_sum(moving, atomic_game(third, third))};
  for (Game want : expect_left) {
    bool found = false;
    for (Game got : both.left().options()) found = found || got == want;
    pass = pass && found;
  }

  std::mt19937_64 rng(9);
  std::vector<Game> samples;
  for (int i = 0; i < 500; ++i) samples.push_back(cgt_test::random_scoring_form(rng, 3));
  for (Game g : samples) {
    if (conjugate(conjugate(g)) != g) pass = false;
  }
  for (std::size_t i = 0; i + 1 < samples.size(); i += 2) {
    Game g = samples[i];
    Game h = samples[i + 1];
    if (conjugate(disjunctive_sum(g, h)) != disjunctive_sum(conjugate(g), conjugate(h)))
      pass = false;
  }

  report(9, pass);
  CHECK(pass);
}
