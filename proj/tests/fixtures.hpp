#pragma once

#include "generators.hpp"

namespace pzr::fixtures {

// x0=0, a1=1, a2=2, b1=3, b2=4; rotation at x0 from the sentinel: a1, a2.
Instance s2_zero();
// x0=0, l=1, r=2, y=3, a=4; a drawn inside the cycle x0-l-y-r.
Instance pocket();
// pocket plus y'=5 inside it, with a->y' and y->y'.
Instance pocket_extended();
Instance chain(std::size_t n);

Digraph digraph(std::size_t n, std::vector<Arc> arcs);

// Reachability by BFS over the arcs, independent of the library closure.
std::vector<std::vector<bool>> bfs_reach(const Digraph& g);

}  // namespace pzr::fixtures
