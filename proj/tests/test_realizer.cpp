#include <set>

#include "doctest.h"
#include "error.hpp"
#include "fixtures.hpp"
#include "labels.hpp"
#include "realizer.hpp"

using namespace pzr;

namespace {

std::shared_ptr<const Analysis> analyze(const Instance& inst) { return Analysis::build(inst.embed()); }

std::vector<Instance> small_corpus() {
  std::vector<Instance> c{fixtures::chain(4), fixtures::s2_zero(), fixtures::pocket(), fixtures::pocket_extended()};
  for (unsigned d = 1; d <= 6; ++d) c.push_back(gen_nested(d));
  for (unsigned d = 2; d <= 6; ++d) c.push_back(gen_wheel(d));
  c.push_back(gen_pathology());
  for (std::uint64_t s = 1; s <= 25; ++s) c.push_back(gen_random_planar_zero(40, s));
  return c;
}

// Safe-set filter read literally: quadratic scan over I_theta.
std::set<std::pair<Vertex, Vertex>> literal_safe(const Analysis& an, int theta, PairType a2a) {
  const Poset& p = an.poset();
  const auto& in = an.addresses().inside_pairs(theta);
  std::set<std::pair<Vertex, Vertex>> out;
  for (auto [a, b] : in) {
    bool spoiled = false;
    for (auto [a2, b2] : in) {
      if (p.less(a, b2) && p.less(a2, b) && an.pairs()(a2, a) == a2a) spoiled = true;
    }
    if (!spoiled) out.insert({a, b});
  }
  return out;
}

}  // namespace

TEST_CASE("tree orders") {
  auto an = analyze(fixtures::s2_zero());
  CHECK(order_L1(an->left()).sequence() == std::vector<Vertex>{0, 2, 3, 1, 4});
  CHECK(order_L2(an->right()).sequence() == std::vector<Vertex>{0, 1, 4, 2, 3});
  auto ch = analyze(fixtures::chain(4));
  CHECK(order_L1(ch->left()).sequence() == std::vector<Vertex>{0, 1, 2, 3});
  CHECK(order_L2(ch->right()).sequence() == std::vector<Vertex>{0, 1, 2, 3});
  // The inside pair (a,y) of the pocket is kept by L1: a before y.
  auto pk = analyze(fixtures::pocket());
  auto l1 = order_L1(pk->left());
  CHECK(l1.position(4) < l1.position(3));
}

TEST_CASE("reversible extension") {
  Poset chain = gen_chain(3);
  CHECK(reversible_extension(chain, {}).sequence() == std::vector<Vertex>{0, 1, 2});
  Poset anti = Poset::from_cover(fixtures::digraph(2, {}));
  CHECK(reversible_extension(anti, {{0, 1}}).sequence() == std::vector<Vertex>{1, 0});
  // In S2 with a zero, a1 < b2 and a2 < b1, so reversing both (a1,b1) and
  // (a2,b2) closes the cycle a1 < b2 < a2 < b1 < a1.
  auto s2 = fixtures::s2_zero();
  CHECK(reversible_extension(*s2.poset, {{1, 3}}).position(3) < reversible_extension(*s2.poset, {{1, 3}}).position(1));
  try {
    reversible_extension(*s2.poset, {{1, 3}, {2, 4}});
    FAIL("expected NotReversible");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotReversible);
    CHECK(e.detail()["cycle"].size() == 4);
  }
}

TEST_CASE("pocket realizer") {
  auto an = analyze(fixtures::pocket());
  auto parts = build_realizer(*an);
  CHECK(an->addresses().inside_pairs(0) == PairList{{4, 3}});
  CHECK(parts.safe[0].left_safe == PairList{{4, 3}});
  CHECK(parts.safe[0].right_safe == PairList{{4, 3}});
  CHECK(parts.danger.entries[0].empty());
  CHECK(parts.danger.entries[1].empty());
  const auto& b = parts.bundle;
  CHECK(b.orders[2].position(3) < b.orders[2].position(4));
  CHECK_FALSE(decode(b, 4, 3));
  CHECK(decode(b, 4, 4));
  for (Vertex a = 1; a < 5; ++a) {
    for (Vertex c = a + 1; c < 5; ++c) {
      if (an->poset().less(a, c)) CHECK(tilt(*an, parts.danger, a, c) == Tilt::None);
    }
  }
  CHECK_THROWS_AS(tilt(*an, parts.danger, 0, 3), Error);
  CHECK_THROWS_AS(tilt(*an, parts.danger, 1, 2), Error);
}

TEST_CASE("decode procedure matches the closed form") {
  for (unsigned c = 0; c < (1u << kOrderCount); ++c) {
    CHECK(decode_steps(static_cast<std::uint16_t>(c)) == decode_formula(static_cast<std::uint16_t>(c)));
  }
}

TEST_CASE("parity extraction from the three encoders") {
  // Two elements of every parity combination, plus the singleton.
  for (int pa = 0; pa < 2; ++pa) {
    for (int pb = 0; pb < 2; ++pb) {
      std::array<std::vector<Vertex>, 2> m;
      m[pa].push_back(0);
      m[pb].push_back(1);
      auto build = [&](bool r0, bool r1) {
        std::vector<Vertex> s = m[0];
        if (r0) std::reverse(s.begin(), s.end());
        std::vector<Vertex> t = m[1];
        if (r1) std::reverse(t.begin(), t.end());
        s.insert(s.end(), t.begin(), t.end());
        return LinearOrder::from_sequence(s);
      };
      LinearOrder l7 = build(false, false), l8 = build(true, true), l9 = build(false, true);
      bool c7 = l7.le(0, 1), c8 = l8.le(0, 1), c9 = l9.le(0, 1);
      std::uint16_t mask = 0x3f | (c7 << 6) | (c8 << 7) | (c9 << 8) | (1 << 9) | (1 << 10);
      // Only the even branch reads c10, c11.
      CHECK(decode_steps(mask) == (pa == 0));
    }
  }
  auto an = analyze(fixtures::chain(1));
  auto par = parity_orders(*an);
  for (const auto& l : par) CHECK(l.sequence() == std::vector<Vertex>{0});
}

TEST_CASE("labels") {
  CHECK(label_width(1) == 1);
  CHECK(label_width(2) == 1);
  CHECK(label_width(5) == 3);
  CHECK(label_width(8) == 3);
  CHECK(label_width(9) == 4);
  auto an = analyze(fixtures::pocket());
  auto b = build_bundle(*an);
  auto ls = make_labels(b);
  CHECK(ls.w == 3);
  CHECK(ls.bit_length() == 39);
  CHECK(ls.labels[0].size() == 5);
  auto text = labels_to_text(ls);
  CHECK(text.rfind("PZR1 n=5 w=3 orders=13\n", 0) == 0);
  auto back = labels_from_text(text);
  CHECK(back.labels == ls.labels);
  for (Vertex v = 0; v < 5; ++v) {
    auto f = label_fields(ls.labels[v], 3);
    for (std::size_t i = 0; i < kOrderCount; ++i) CHECK(f[i] == b.orders[i].position(v));
    for (Vertex u = 0; u < 5; ++u) CHECK(decode_labels(ls.labels[v], ls.labels[u], 3) == decode(b, v, u));
  }
  CHECK_THROWS_AS(labels_from_text("PZR1 n=5 w=2 orders=13\n"), Error);
  CHECK_THROWS_AS(labels_from_text("PZR2 n=5 w=3 orders=13\n"), Error);
}

TEST_CASE("bundle json round trip") {
  auto an = analyze(fixtures::s2_zero());
  auto b = build_bundle(*an);
  auto back = bundle_from_json(bundle_to_json(b));
  for (std::size_t i = 0; i < kOrderCount; ++i) CHECK(back.orders[i].sequence() == b.orders[i].sequence());
  auto j = bundle_to_json(b);
  j["orders"].erase(0);
  CHECK_THROWS_AS(bundle_from_json(j), Error);
}

TEST_CASE("realizer invariants on the small corpus") {
  std::size_t dangerous = 0;
  for (const Instance& inst : small_corpus()) {
    CAPTURE(inst.spec.family);
    CAPTURE(inst.spec.seed);
    auto an = analyze(inst);
    const Poset& p = an->poset();
    const std::size_t n = p.size();
    auto parts = build_realizer(*an);
    const auto& b = parts.bundle;

    for (int k = 0; k < 6; ++k) CHECK(is_linear_extension(p, b.orders[k]));
    for (int theta = 0; theta < 2; ++theta) {
      auto ls = literal_safe(*an, theta, PairType::Left), rs = literal_safe(*an, theta, PairType::Right);
      CHECK(std::set<std::pair<Vertex, Vertex>>(parts.safe[theta].left_safe.begin(), parts.safe[theta].left_safe.end()) == ls);
      CHECK(std::set<std::pair<Vertex, Vertex>>(parts.safe[theta].right_safe.begin(), parts.safe[theta].right_safe.end()) == rs);
      for (const auto& e : parts.danger.entries[theta]) {
        ++dangerous;
        CHECK(an->shadows().sd(e.b) > an->shadows().sd(e.a));
        CHECK(an->parity(e.a) == theta);
        CHECK((comparison_mask(b, e.a, e.b) & 0x3f) == 0x3f);
        for (const auto& f : parts.danger.entries[theta]) {
          if (f.a == e.b) CHECK(parts.danger.rows[theta][e.a][f.b]);
        }
      }
    }
    // Not-tilting relations are strict orders contained in P.
    for (const auto& rel : parts.not_tilting) {
      for (Vertex a = 0; a < n; ++a) {
        CHECK_FALSE(rel[a][a]);
        for (auto c = rel[a].find_first(); c != Bits::npos; c = rel[a].find_next(c)) {
          CHECK(p.less(a, static_cast<Vertex>(c)));
          CHECK(rel[c].is_subset_of(rel[a]));
        }
      }
    }
    std::size_t mismatches = 0;
    for (Vertex x = 0; x < n; ++x) {
      for (Vertex y = 0; y < n; ++y) mismatches += decode(b, x, y) != p.leq(x, y);
    }
    CHECK(mismatches == 0);
  }
  MESSAGE("dangerous pairs seen: " << dangerous);
}

TEST_CASE("pathology fixture") {
  auto an = analyze(gen_pathology());
  const Poset& p = an->poset();
  const auto& pt = an->pairs();
  // Two inside pairs of different depth parity on a strict alternating cycle.
  CHECK(pt(17, 11) == PairType::Inside);
  CHECK(pt(14, 15) == PairType::Inside);
  CHECK(p.less(17, 15));
  CHECK(p.less(14, 11));
  CHECK(an->addresses()(17, 11)->j % 2 != an->addresses()(14, 15)->j % 2);
  PairList all;
  for (int theta = 0; theta < 2; ++theta) {
    const auto& in = an->addresses().inside_pairs(theta);
    all.insert(all.end(), in.begin(), in.end());
  }
  CHECK_THROWS_AS(reversible_extension(p, all), Error);

  auto parts = build_realizer(*an);
  std::size_t entries = parts.danger.entries[0].size() + parts.danger.entries[1].size();
  CHECK(entries > 0);
  for (int theta = 0; theta < 2; ++theta) {
    for (const auto& e : parts.danger.entries[theta]) {
      // The neighbors' A-elements lie below b and tilt away from a.
      CHECK(tilt(*an, parts.danger, e.left_neighbor.first, e.b) == Tilt::Right);
      CHECK(tilt(*an, parts.danger, e.right_neighbor.first, e.b) == Tilt::Left);
    }
  }
}
