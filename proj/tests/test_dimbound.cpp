#include "dimbound.hpp"
#include "doctest.h"
#include "error.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace pzr;

namespace {

std::shared_ptr<const Analysis> analyze(const Instance& inst) { return Analysis::build(inst.embed()); }

// Arc test straight from the definitions, over every candidate helper.
bool strong_by_definition(const Analysis& an, std::pair<Vertex, Vertex> x, std::pair<Vertex, Vertex> y) {
  const Poset& p = an.poset();
  return p.less(x.first, y.second) && p.less(y.first, x.second) && an.pairs()(x.first, y.first) == PairType::Left;
}

bool weak_by_definition(const Analysis& an, int theta, std::pair<Vertex, Vertex> x, std::pair<Vertex, Vertex> y) {
  if (an.pairs()(x.first, y.first) != PairType::Left) return false;
  for (auto h : an.addresses().inside_pairs(theta)) {
    if (an.pairs()(y.first, h.first) != PairType::Left) continue;
    if (is_strict_alternating_cycle(an.poset(), {x, y, h})) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("H graph on fixtures") {
  auto pk = analyze(fixtures::pocket());
  auto h0 = build_H(*pk, 0);
  CHECK(h0.vertices.size() == 1);
  CHECK(h0.arcs.empty());
  CHECK(build_H(*pk, 1).vertices.empty());
  auto bs = buckets(h0);
  CHECK(bs.size() == 2);
  CHECK(bs[1].size() == 1);
  auto r = build_dim_realizer(*pk);
  CHECK(r.extensions.size() == 3);
  CHECK(r.k == 1);
  CHECK_FALSE(verify_realizer(pk->poset(), r.extensions));

  auto ch = analyze(fixtures::chain(5));
  auto rc = build_dim_realizer(*ch);
  CHECK(rc.extensions.size() == 2);
  CHECK(rc.witness.empty());
  CHECK(extract_standard_example(*ch, build_H(*ch, 0)).empty());

  // The drawn wheel(3) splits its S_3 into a left, a right and an inside
  // pair, so H_0 has no arcs; strong arcs first appear at d = 4.
  auto w3 = analyze(gen_wheel(3));
  CHECK(build_H(*w3, 0).arcs.empty());
  auto w4 = analyze(gen_wheel(4));
  auto hw = build_H(*w4, 0);
  bool strong = false;
  for (const auto& a : hw.arcs) strong |= a.strong;
  CHECK(strong);
  auto rw = build_dim_realizer(*w4);
  CHECK(rw.witness.size() >= 2);
  CHECK(induces_standard_example(w4->poset(), rw.witness));
}

TEST_CASE("single strong arc buckets") {
  HGraph h;
  h.vertices = {{1, 2}, {3, 4}};
  h.arcs = {{0, 1, true, std::nullopt}};
  h.out = {{0}, {}};
  auto bs = buckets(h);
  REQUIRE(bs.size() == 3);
  CHECK(bs[2] == PairList{{1, 2}});
  CHECK(bs[1] == PairList{{3, 4}});
}

TEST_CASE("H graph invariants on a corpus") {
  std::vector<Instance> corpus{fixtures::pocket_extended(), gen_pathology()};
  for (unsigned d = 2; d <= 6; ++d) corpus.push_back(gen_wheel(d));
  for (unsigned d = 2; d <= 5; ++d) corpus.push_back(gen_nested(d));
  for (std::uint64_t s = 1; s <= 20; ++s) corpus.push_back(gen_random_planar_zero(30, s));
  for (const Instance& inst : corpus) {
    CAPTURE(inst.spec.family);
    CAPTURE(inst.spec.seed);
    auto an = analyze(inst);
    const Poset& p = an->poset();
    for (int theta = 0; theta < 2; ++theta) {
      HGraph h = build_H(*an, theta);
      const auto& vs = h.vertices;
      std::vector<std::vector<int>> kind(vs.size(), std::vector<int>(vs.size(), 0));  // 1 weak, 2 strong
      for (const auto& a : h.arcs) kind[a.from][a.to] = a.strong ? 2 : 1;
      if (vs.size() <= 150) {
        for (std::size_t i = 0; i < vs.size(); ++i) {
          for (std::size_t k = 0; k < vs.size(); ++k) {
            bool s = strong_by_definition(*an, vs[i], vs[k]);
            CHECK((kind[i][k] == 2) == s);
            if (!s) CHECK((kind[i][k] == 1) == weak_by_definition(*an, theta, vs[i], vs[k]));
          }
        }
      }
      // strong . strong is strong
      for (const auto& x : h.arcs) {
        if (!x.strong) continue;
        for (auto yi : h.out[x.to]) {
          if (h.arcs[yi].strong) CHECK(kind[x.from][h.arcs[yi].to] == 2);
        }
      }
      // Every bucket is reversible; the longest path is matched by a strong one.
      auto bs = buckets(h);
      for (const auto& b : bs) CHECK(is_reversible(p, b));
      auto w = extract_standard_example(*an, h);
      CHECK(w.size() == bs.size() - 1);
      if (w.size() >= 2) {
        // All pairs of the witness share one block with the corollary's shape.
        Address ad = *an->addresses()(w[0].first, w[0].second);
        Vertex y = ad.block;
        for (std::size_t i = 0; i < w.size(); ++i) {
          CHECK(an->addresses()(w[i].first, w[i].second)->block == y);
          CHECK(p.incomparable(w[i].first, y));
          CHECK(p.less(y, w[i].second));
          for (std::size_t j = i + 1; j < w.size(); ++j) {
            CHECK(an->pairs()(w[i].first, w[j].first) == PairType::Left);
            CHECK(an->pairs()(w[i].second, w[j].second) == PairType::Left);
          }
        }
      }
    }
    auto r = build_dim_realizer(*an);
    CHECK_FALSE(verify_realizer(p, r.extensions));
    CHECK(r.extensions.size() <= 2 * r.k + 2);
    CHECK(r.witness.size() == r.k);
    if (p.size() <= 24) CHECK(r.k <= exact_se(p));
  }
}
