#include "fixtures.hpp"

#include <deque>

namespace pzr::fixtures {

namespace {

Instance drawn(const char* family, std::vector<std::array<double, 2>> xy, std::vector<Arc> arcs) {
  Drawing d;
  d.n = xy.size();
  d.xy = std::move(xy);
  d.arcs = std::move(arcs);
  GenSpec spec;
  spec.family = family;
  return instance_from_drawing(spec, d, -1.5707963267948966);
}

}  // namespace

Instance s2_zero() {
  return drawn("s2_zero", {{0, 0}, {-1, 1}, {1, 1}, {1, 2}, {-1, 2}}, {{0, 1}, {0, 2}, {1, 4}, {2, 3}});
}

Instance pocket() {
  return drawn("pocket", {{0, 0}, {-2, 2}, {2, 2}, {0, 4}, {0, 1}}, {{0, 1}, {0, 2}, {1, 3}, {2, 3}, {0, 4}});
}

Instance pocket_extended() {
  return drawn("pocket_extended", {{0, 0}, {-2, 2}, {2, 2}, {0, 4}, {0, 1}, {0, 2.5}},
               {{0, 1}, {0, 2}, {1, 3}, {2, 3}, {0, 4}, {4, 5}, {3, 5}});
}

Instance chain(std::size_t n) {
  std::vector<std::array<double, 2>> xy;
  std::vector<Arc> arcs;
  for (std::size_t i = 0; i < n; ++i) {
    xy.push_back({0.0, static_cast<double>(i)});
    if (i) arcs.push_back({static_cast<Vertex>(i - 1), static_cast<Vertex>(i)});
  }
  return drawn("chain", xy, arcs);
}

Digraph digraph(std::size_t n, std::vector<Arc> arcs) { return Digraph{n, std::move(arcs)}; }

std::vector<std::vector<bool>> bfs_reach(const Digraph& g) {
  std::vector<std::vector<Vertex>> out(g.vertex_count);
  for (const Arc& a : g.arcs) out[a.tail].push_back(a.head);
  std::vector<std::vector<bool>> r(g.vertex_count, std::vector<bool>(g.vertex_count, false));
  for (Vertex s = 0; s < g.vertex_count; ++s) {
    std::deque<Vertex> q{s};
    r[s][s] = true;
    while (!q.empty()) {
      Vertex v = q.front();
      q.pop_front();
      for (Vertex w : out[v]) {
        if (!r[s][w]) {
          r[s][w] = true;
          q.push_back(w);
        }
      }
    }
  }
  return r;
}

}  // namespace pzr::fixtures
