#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "cgt/compare.hpp"
#include "cgt/game.hpp"
#include "cgt/lattice.hpp"
#include "cgt/normal_play.hpp"
#include "cgt/universe.hpp"
#include "test_support.hpp"

using namespace cgt;

TEST_CASE("verdict strings and the worked relations") {
  CHECK(relation_string(Relation::kEqual) == "G=H");
  CHECK(relation_string(Relation::kGreater) == "G>H");
  CHECK(relation_string(Relation::kLess) == "G<H");
  CHECK(relation_string(Relation::kIncomparable) == "G<>H");

  const Universe& dm = Universe::dicot_misere();
  CHECK(relation(dm, mup_game(), zero_game()) == Relation::kGreater);
  CHECK(relation(dm, zero_game(), mup_game()) == Relation::kLess);
  CHECK(relation(dm, zero_game(), zero_game()) == Relation::kEqual);
  CHECK(relation(dm, up_game(), zero_game()) == Relation::kIncomparable);
  CHECK(relation(dm, star_game(), zero_game()) == Relation::kIncomparable);
  CHECK(relation(dm, zero_game(), mown_game()) == Relation::kGreater);
}

TEST_CASE("geq examples and membership errors") {
  const Universe& dm = Universe::dicot_misere();
  CHECK(geq(dm, mup_game(), zero_game()));
  CHECK_FALSE(geq(dm, up_game(), zero_game()));
  CHECK(geq(dm, star_game(), star_game()));
  CHECK(geq(dm, mup_game(), mup_game()));

  Game one = make_game(Side::with_options({zero_game()}), Side::atom(make_adorn(AdornKind::kTrivial, 0)));
  CHECK_THROWS_AS(geq(dm, one, zero_game()), NonMemberError);
  CHECK_THROWS_AS(relation(dm, zero_game(), one), NonMemberError);
  CHECK_THROWS_AS(geq_cnp_oracle(dm, one, zero_game()), NonMemberError);
}

TEST_CASE("both decision paths agree on every ordered pair at rank two") {
  const Universe& dm = Universe::dicot_misere();
  std::vector<Game> forms = enumerate_members(dm, 2);
  REQUIRE(forms.size() == 10);
  for (Game g : forms)
    for (Game h : forms) CHECK(geq(dm, g, h) == geq_cnp_oracle(dm, g, h));
}

TEST_CASE("the decision paths also agree off the dicot universe") {
  const Universe& fm = Universe::free_misere();
  for (Game g : enumerate_members(fm, 1))
    for (Game h : enumerate_members(fm, 1)) CHECK(geq(fm, g, h) == geq_cnp_oracle(fm, g, h));

  const Universe& np = Universe::normal_play();
  for (Game g : enumerate_members(np, 2))
    for (Game h : enumerate_members(np, 1)) {
      bool lhs = geq(np, g, h);
      CHECK(lhs == geq_cnp_oracle(np, g, h));
      CHECK(lhs == np_geq(to_normal_game(g), to_normal_game(h)));
    }

  const Universe& ds = Universe::dicot_scoring();
  CHECK(geq(ds, atomic_game(1, 1), atomic_game(0, 0)));
  CHECK(geq_cnp_oracle(ds, atomic_game(1, 1), atomic_game(0, 0)));
  CHECK_FALSE(geq(ds, atomic_game(0, 0), atomic_game(1, 1)));
  CHECK_FALSE(geq_cnp_oracle(ds, atomic_game(0, 0), atomic_game(1, 1)));
}

TEST_CASE("distinguishing sums: examples") {
  const Universe& dm = Universe::dicot_misere();
  std::optional<Game> w = distinguish(dm, up_game(), zero_game(), 0);
  REQUIRE(w.has_value());
  CHECK(*w == zero_game());
  CHECK_FALSE(distinguish(dm, mup_game(), zero_game(), 2).has_value());
  CHECK_FALSE(distinguish(dm, star_game(), star_game(), 2).has_value());
}

TEST_CASE("a found witness really separates, and geq-true pairs have none") {
  const Universe& dm = Universe::dicot_misere();
  std::vector<Game> forms = enumerate_members(dm, 2);
  std::vector<Game> candidates = enumerate_members(dm, 2);
  for (Game g : forms)
    for (Game h : forms) {
      std::optional<Game> w = distinguish(dm, g, h, 2);
      if (geq(dm, g, h)) {
        CHECK_FALSE(w.has_value());
        continue;
      }
      if (!w.has_value()) continue;
      bool drops = sum_outcome_left(dm, g, *w) < sum_outcome_left(dm, h, *w) ||
                   sum_outcome_right(dm, g, *w) < sum_outcome_right(dm, h, *w);
      CHECK(drops);
      // and it is the first candidate in the form order that does
      for (Game x : candidates) {
        if (x == *w) break;
        bool earlier = sum_outcome_left(dm, g, x) < sum_outcome_left(dm, h, x) ||
                       sum_outcome_right(dm, g, x) < sum_outcome_right(dm, h, x);
        CHECK_FALSE(earlier);
      }
    }
}

TEST_CASE("batch distinguishing matches one-at-a-time calls") {
  const Universe& dm = Universe::dicot_misere();
  std::vector<Game> forms = enumerate_members(dm, 2);
  std::vector<std::pair<Game, Game>> pairs;
  for (Game g : forms)
    for (Game h : forms) pairs.emplace_back(g, h);
  std::vector<DistinguishResult> batch = distinguish_batch(dm, pairs, 2);
  REQUIRE(batch.size() == pairs.size());
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    std::optional<Game> single = distinguish(dm, pairs[i].first, pairs[i].second, 2);
    CHECK(batch[i].witness == single);
  }
}

TEST_CASE("distinguish rejects universes without a finite census") {
  const Universe& ds = Universe::dicot_scoring();
  CHECK_THROWS_AS(distinguish(ds, atomic_game(0, 0), atomic_game(1, 1), 1), std::invalid_argument);
}

TEST_CASE("order is preserved by adding a small dicot") {
  const Universe& dm = Universe::dicot_misere();
  std::vector<Game> forms = enumerate_members(dm, 2);
  std::vector<Game> shifts = enumerate_members(dm, 1);
  for (Game g : forms)
    for (Game h : forms) {
      if (!geq(dm, g, h)) continue;
      for (Game x : shifts) CHECK(geq(dm, disjunctive_sum(g, x), disjunctive_sum(h, x)));
    }
}

TEST_CASE("the induced order is transitive and equality is an equivalence") {
  const Universe& dm = Universe::dicot_misere();
  std::vector<Game> forms = enumerate_members(dm, 2);
  const std::size_t n = forms.size();
  std::vector<std::vector<bool>> ge(n, std::vector<bool>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) ge[i][j] = geq(dm, forms[i], forms[j]);
  for (std::size_t i = 0; i < n; ++i) {
    CHECK(ge[i][i]);
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (ge[i][j] && ge[j][k]) CHECK(ge[i][k]);
  }
}

TEST_CASE("report fields for the proviso rejection example") {
  const Universe& dm = Universe::dicot_misere();
  CompareReport r = compare_report(dm, up_game(), zero_game());
  CHECK_FALSE(r.proviso_gh);
  CHECK(r.maintain_gh);
  CHECK(r.proviso_hg);
  CHECK_FALSE(r.maintain_hg);
  CHECK(outcome_symbol(r.outcome_g) == 'R');
  CHECK(outcome_symbol(r.outcome_h) == 'N');
  CHECK(r.lpg_gh == np_up());
  CHECK(r.lpg_hg == np_integer(-1));
  CHECK(r.relation == Relation::kIncomparable);

  CompareReport ok = compare_report(dm, mup_game(), zero_game());
  CHECK(ok.proviso_gh);
  CHECK(ok.maintain_gh);
  CHECK(ok.lpg_gh == np_up());
  CHECK(ok.relation == Relation::kGreater);
}

TEST_CASE("conjugation reverses the order") {
  std::mt19937_64 rng(20260818);
  const Universe& dm = Universe::dicot_misere();
  for (int i = 0; i < 60; ++i) {
    Game g = cgt_test::random_dicot_form(rng, 2);
    Game h = cgt_test::random_dicot_form(rng, 2);
    CHECK(geq(dm, g, h) == geq(dm, conjugate(h), conjugate(g)));
  }
  const Universe& ds = Universe::dicot_scoring();
  for (int i = 0; i < 60; ++i) {
    Game g = cgt_test::random_scoring_form(rng, 2);
    Game h = cgt_test::random_scoring_form(rng, 2);
    CHECK(geq(ds, g, h) == geq(ds, conjugate(h), conjugate(g)));
  }
}
