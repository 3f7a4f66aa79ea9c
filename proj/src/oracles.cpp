#include "oracles.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>
#include <set>

#include "error.hpp"

namespace pzr {

bool is_alternating_cycle(const Poset& p, const PairList& c) {
  if (c.empty()) return false;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (!p.leq(c[i].first, c[(i + 1) % c.size()].second)) return false;
  }
  return true;
}

bool is_strict_alternating_cycle(const Poset& p, const PairList& c) {
  const std::size_t k = c.size();
  if (k < 2) return false;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      if (p.leq(c[i].first, c[j].second) != (j == (i + 1) % k)) return false;
    }
  }
  return true;
}

namespace {

void require_incomparable(const Poset& p, const PairList& pairs) {
  for (auto [a, b] : pairs) {
    if (a >= p.size() || b >= p.size() || !p.incomparable(a, b)) {
      fail(Errc::BadInput, "(" + std::to_string(a) + "," + std::to_string(b) + ") is not an incomparable pair");
    }
  }
}

// Cuts chords out of an alternating cycle until it is strict.
PairList make_strict(const Poset& p, PairList c) {
  while (true) {
    const std::size_t k = c.size();
    bool cut = false;
    for (std::size_t i = 0; i < k && !cut; ++i) {
      for (std::size_t j = 0; j < k && !cut; ++j) {
        if (j == (i + 1) % k || !p.leq(c[i].first, c[j].second)) continue;
        // Keep j, j+1, ..., i; the chord a_i <= b_j closes it.
        PairList shorter;
        for (std::size_t t = j;; t = (t + 1) % k) {
          shorter.push_back(c[t]);
          if (t == i) break;
        }
        c = std::move(shorter);
        cut = true;
      }
    }
    if (!cut) return c;
  }
}

}  // namespace

std::optional<AlternatingCycle> find_nonreversible_witness(const Poset& p, const PairList& pairs) {
  require_incomparable(p, pairs);
  std::vector<Vertex> cycle;
  try {
    reversible_extension(p, pairs);
    return std::nullopt;
  } catch (const Error& e) {
    if (e.code() != Errc::NotReversible) throw;
    cycle = e.detail().at("cycle").get<std::vector<Vertex>>();
  }
  std::set<std::pair<Vertex, Vertex>> reversed(pairs.begin(), pairs.end());
  const std::size_t k = cycle.size();
  // Arc u -> v of the cycle is a reversed pair when (v,u) was requested.
  std::size_t start = 0;
  while (start < k && !reversed.count({cycle[(start + 1) % k], cycle[start]})) ++start;
  if (start == k) fail(Errc::ValidationFailed, "cycle uses no reversed pair");
  PairList alt;
  for (std::size_t s = 0; s < k; ++s) {
    Vertex u = cycle[(start + s) % k], v = cycle[(start + s + 1) % k];
    if (reversed.count({v, u})) alt.push_back({v, u});
  }
  AlternatingCycle w;
  w.pairs = make_strict(p, std::move(alt));
  w.strict = is_strict_alternating_cycle(p, w.pairs);
  return w;
}

std::optional<AlternatingCycle> enumerate_strict_cycle(const Poset& p, const PairList& pairs, std::size_t cap) {
  require_incomparable(p, pairs);
  if (pairs.size() > cap) fail(Errc::TooLarge, "cycle enumeration is capped at " + std::to_string(cap) + " pairs");
  const std::size_t m = pairs.size();
  std::vector<std::size_t> seq;
  std::vector<bool> used(m, false);
  auto x = [&](std::size_t i) { return pairs[i].first; };
  auto y = [&](std::size_t i) { return pairs[i].second; };
  std::function<bool()> extend = [&]() {
    std::size_t last = seq.back();
    for (std::size_t j = seq.front() + 1; j < m; ++j) {
      if (used[j] || !p.leq(x(last), y(j))) continue;
      bool ok = true;
      for (std::size_t q = 0; q + 1 < seq.size() && ok; ++q) ok = !p.leq(x(seq[q]), y(j));
      for (std::size_t q = 1; q < seq.size() && ok; ++q) ok = !p.leq(x(j), y(seq[q]));
      if (!ok) continue;
      seq.push_back(j);
      used[j] = true;
      if (p.leq(x(j), y(seq.front()))) return true;
      if (extend()) return true;
      seq.pop_back();
      used[j] = false;
    }
    return false;
  };
  for (std::size_t s = 0; s < m; ++s) {
    seq = {s};
    used.assign(m, false);
    used[s] = true;
    if (extend()) {
      AlternatingCycle c;
      for (std::size_t i : seq) c.pairs.push_back(pairs[i]);
      c.strict = true;
      return c;
    }
  }
  return std::nullopt;
}

unsigned exact_dimension(const Poset& p, const OracleCaps& caps) {
  PairList inc = incomparable_pairs(p);
  if (inc.empty()) return 1;
  if (inc.size() > caps.dimension_pairs) {
    fail(Errc::TooLarge, "exact_dimension is capped at " + std::to_string(caps.dimension_pairs) + " incomparable pairs");
  }
  const std::size_t m = inc.size(), n = p.size();
  auto conflict = [&](std::size_t i, std::size_t j) {
    return p.leq(inc[i].first, inc[j].second) && p.leq(inc[j].first, inc[i].second);
  };
  std::vector<std::size_t> degree(m, 0);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) degree[i] += i != j && conflict(i, j);
  }
  std::vector<std::size_t> order(m);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return degree[a] > degree[b]; });

  // Greedy clique of pairwise conflicting pairs bounds t from below.
  std::vector<std::size_t> clique;
  for (std::size_t i : order) {
    if (std::all_of(clique.begin(), clique.end(), [&](std::size_t c) { return conflict(i, c); })) clique.push_back(i);
  }

  using Reach = std::vector<Bits>;
  Reach base(n);
  for (Vertex v = 0; v < n; ++v) base[v] = p.up_set(v);
  for (unsigned t = std::max<unsigned>(1, static_cast<unsigned>(clique.size()));; ++t) {
    std::deque<Reach> sets;  // stable references across push_back
    std::function<bool(std::size_t)> place = [&](std::size_t k) {
      if (k == m) return true;
      auto [a, b] = inc[order[k]];
      for (std::size_t s = 0; s <= sets.size() && s < t; ++s) {
        if (s == sets.size()) sets.push_back(base);
        Reach& r = sets[s];
        if (!r[a][b]) {
          // Add b -> a to the closure of this set.
          Reach saved = r;
          for (Vertex x = 0; x < n; ++x) {
            if (r[x][b]) r[x] |= saved[a];
          }
          if (place(k + 1)) return true;
          r = std::move(saved);
        }
        if (s + 1 == sets.size() && r == base) {
          sets.pop_back();
          break;  // an empty set is as good as any later one
        }
      }
      return false;
    };
    if (place(0)) return t;
  }
}

unsigned exact_se(const Poset& p, const OracleCaps& caps) {
  if (p.size() > caps.se_elements) {
    fail(Errc::TooLarge, "exact_se is capped at " + std::to_string(caps.se_elements) + " elements");
  }
  PairList inc = incomparable_pairs(p);
  const std::size_t m = inc.size();
  std::vector<Bits> adj(m, Bits(m));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      if (i != j && p.less(inc[i].first, inc[j].second) && p.less(inc[j].first, inc[i].second)) adj[i].set(j);
    }
  }
  std::size_t best = 0;
  // Bron-Kerbosch with pivoting.
  std::function<void(std::size_t, Bits, Bits)> bk = [&](std::size_t size, Bits cand, Bits excl) {
    if (cand.none() && excl.none()) {
      best = std::max(best, size);
      return;
    }
    if (size + cand.count() <= best) return;
    Bits both = cand | excl;
    std::size_t pivot = both.find_first(), pivot_deg = 0;
    for (auto u = both.find_first(); u != Bits::npos; u = both.find_next(u)) {
      std::size_t d = (cand & adj[u]).count();
      if (d >= pivot_deg) {
        pivot = u;
        pivot_deg = d;
      }
    }
    Bits todo = cand - adj[pivot];
    for (auto v = todo.find_first(); v != Bits::npos; v = todo.find_next(v)) {
      bk(size + 1, cand & adj[v], excl & adj[v]);
      cand.reset(v);
      excl.set(v);
    }
  };
  Bits all(m);
  all.set();
  bk(0, all, Bits(m));
  return best >= 2 ? static_cast<unsigned>(best) : 1;
}

std::optional<RealizerViolation> verify_realizer(const Poset& p, const std::vector<LinearOrder>& orders) {
  for (std::size_t i = 0; i < orders.size(); ++i) {
    if (!is_linear_extension(p, orders[i])) {
      for (const Arc& a : p.cover_arcs()) {
        if (orders[i].size() != p.size() || orders[i].position(a.tail) > orders[i].position(a.head)) {
          return RealizerViolation{"not-extension", i, a.tail, a.head};
        }
      }
      return RealizerViolation{"not-extension", i, 0, 0};
    }
  }
  for (auto [a, b] : incomparable_pairs(p)) {
    bool reversed = std::any_of(orders.begin(), orders.end(),
                                [&](const LinearOrder& l) { return l.position(b) < l.position(a); });
    if (!reversed) return RealizerViolation{"unreversed", 0, a, b};
  }
  return std::nullopt;
}

std::vector<Mismatch> verify_bundle(const Poset& p, const RealizerBundle& b) {
  if (b.element_count != p.size()) fail(Errc::BadInput, "bundle size differs from the poset");
  std::vector<Mismatch> out;
  for (Vertex x = 0; x < p.size(); ++x) {
    for (Vertex y = 0; y < p.size(); ++y) {
      bool d = decode(b, x, y), e = p.leq(x, y);
      if (d != e) out.push_back({x, y, d, e});
    }
  }
  return out;
}

std::vector<Mismatch> verify_labels(const Poset& p, const LabelSet& labels) {
  if (labels.n != p.size()) fail(Errc::BadInput, "label count differs from the poset");
  std::vector<Mismatch> out;
  for (Vertex x = 0; x < p.size(); ++x) {
    for (Vertex y = 0; y < p.size(); ++y) {
      bool d = decode_labels(labels.labels[x], labels.labels[y], labels.w), e = p.leq(x, y);
      if (d != e) out.push_back({x, y, d, e});
    }
  }
  return out;
}

std::vector<Bits> bfs_reachability(const Digraph& g) {
  const std::size_t n = g.vertex_count;
  std::vector<std::vector<Vertex>> out(n);
  for (const Arc& a : g.arcs) out[a.tail].push_back(a.head);
  std::vector<Bits> reach(n, Bits(n));
  std::vector<Vertex> queue;
  for (Vertex s = 0; s < n; ++s) {
    queue.assign(1, s);
    reach[s].set(s);
    for (std::size_t k = 0; k < queue.size(); ++k) {
      for (Vertex v : out[queue[k]]) {
        if (!reach[s][v]) {
          reach[s].set(v);
          queue.push_back(v);
        }
      }
    }
  }
  return reach;
}

std::vector<Mismatch> verify_digraph_labels(const Digraph& g, const LabelSet& labels) {
  if (labels.labels.size() != g.vertex_count) fail(Errc::BadInput, "label count differs from the digraph");
  auto reach = bfs_reachability(g);
  std::vector<Mismatch> out;
  for (Vertex x = 0; x < g.vertex_count; ++x) {
    for (Vertex y = 0; y < g.vertex_count; ++y) {
      bool d = decode_labels(labels.labels[x], labels.labels[y], labels.w), e = reach[x][y];
      if (d != e) out.push_back({x, y, d, e});
    }
  }
  return out;
}

}  // namespace pzr
