#include "analysis.hpp"

namespace pzr {

Analysis::Analysis(EmbeddedCoverGraph g)
    : g_(std::move(g)),
      left_(build_witness_tree(g_, TreeSide::Left)),
      right_(build_witness_tree(g_, TreeSide::Right)),
      pairs_(g_.poset(), left_, right_),
      shadows_(g_, left_, right_),
      addresses_(shadows_, pairs_) {}

}  // namespace pzr
