#include <random>

#include "doctest.h"
#include "error.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace pzr;

TEST_CASE("reversibility") {
  auto s2 = fixtures::s2_zero();
  const Poset& p = *s2.poset;
  CHECK(is_reversible(p, {}));
  CHECK(is_reversible(p, {{1, 3}}));
  auto w = find_nonreversible_witness(p, {{1, 3}, {2, 4}});
  REQUIRE(w);
  CHECK(w->strict);
  CHECK(w->pairs.size() == 2);
  CHECK(is_strict_alternating_cycle(p, w->pairs));
  CHECK(enumerate_strict_cycle(p, {{1, 3}, {2, 4}}));
  CHECK_THROWS_AS(find_nonreversible_witness(p, {{0, 1}}), Error);
}

TEST_CASE("reversibility routes agree") {
  std::mt19937_64 rng(7);
  std::size_t nonrev = 0;
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    auto inst = gen_random_planar_zero(14, seed);
    const Poset& p = *inst.poset;
    auto inc = incomparable_pairs(p);
    if (inc.empty()) continue;
    for (int trial = 0; trial < 20; ++trial) {
      std::shuffle(inc.begin(), inc.end(), rng);
      PairList pick(inc.begin(), inc.begin() + std::min<std::size_t>(inc.size(), 1 + rng() % 8));
      auto a = find_nonreversible_witness(p, pick);
      auto b = enumerate_strict_cycle(p, pick);
      CHECK(a.has_value() == b.has_value());
      if (a) {
        ++nonrev;
        CHECK(a->strict);
        CHECK(is_strict_alternating_cycle(p, a->pairs));
        CHECK(is_strict_alternating_cycle(p, b->pairs));
      }
    }
  }
  CHECK(nonrev > 0);
}

TEST_CASE("exact dimension and standard example number") {
  CHECK(exact_dimension(gen_chain(5)) == 1);
  for (unsigned d = 2; d <= 4; ++d) CHECK(exact_dimension(gen_standard_example(d)) == d);
  CHECK(exact_dimension(*fixtures::s2_zero().poset) == 2);
  CHECK(exact_se(gen_chain(5)) == 1);
  for (unsigned d = 2; d <= 5; ++d) CHECK(exact_se(gen_standard_example(d)) == d);
  CHECK(exact_se(*gen_wheel(3).poset) == 3);
  CHECK_THROWS_AS(exact_se(gen_chain(30)), Error);
  CHECK_THROWS_AS(exact_dimension(gen_standard_example(6)), Error);
  OracleCaps wide;
  wide.se_elements = 40;
  CHECK(exact_se(gen_chain(30), wide) == 1);
}

TEST_CASE("dimension is at least se") {
  for (std::uint64_t seed = 1; seed <= 25; ++seed) {
    auto inst = gen_random_planar_zero(9, seed);
    const Poset& p = *inst.poset;
    if (incomparable_pairs(p).size() > 60) continue;
    CHECK(exact_dimension(p) >= exact_se(p));
  }
}

TEST_CASE("realizer and bundle audits") {
  Poset chain = gen_chain(4);
  CHECK_FALSE(verify_realizer(chain, {reversible_extension(chain, {})}));
  auto pk = fixtures::pocket();
  auto an = Analysis::build(pk.embed());
  auto v = verify_realizer(an->poset(), {order_L1(an->left()), order_L2(an->right())});
  REQUIRE(v);
  CHECK(v->kind == "unreversed");
  CHECK(v->a == 4);
  CHECK(v->b == 3);
  auto bad = verify_realizer(an->poset(), {LinearOrder::from_sequence({3, 2, 1, 0, 4})});
  REQUIRE(bad);
  CHECK(bad->kind == "not-extension");

  auto w = Analysis::build(gen_wheel(5).embed());
  auto b = build_bundle(*w);
  CHECK(verify_bundle(w->poset(), b).empty());
  CHECK(verify_labels(w->poset(), labels_from_text(labels_to_text(make_labels(b)))).empty());
  // Shuffled L3 must be caught.
  auto seq = b.orders[2].sequence();
  std::mt19937_64 rng(3);
  std::size_t caught = 0;
  for (int t = 0; t < 5; ++t) {
    std::shuffle(seq.begin(), seq.end(), rng);
    auto mutated = b;
    mutated.orders[2] = LinearOrder::from_sequence(seq);
    caught += !verify_bundle(w->poset(), mutated).empty();
  }
  CHECK(caught == 5);
}
