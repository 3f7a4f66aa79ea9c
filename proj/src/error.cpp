#include "error.hpp"

namespace pzr {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::BadInput: return "BadInput";
    case Errc::CyclicInput: return "CyclicInput";
    case Errc::NotReduced: return "NotReduced";
    case Errc::NonPlanar: return "NonPlanar";
    case Errc::Disconnected: return "Disconnected";
    case Errc::MalformedRotation: return "MalformedRotation";
    case Errc::RootNotOnFace: return "RootNotOnFace";
    case Errc::NotIncident: return "NotIncident";
    case Errc::NotACycle: return "NotACycle";
    case Errc::NoZero: return "NoZero";
    case Errc::MultipleSources: return "MultipleSources";
    case Errc::NonPlanarCondensation: return "NonPlanarCondensation";
    case Errc::NotEmbedded: return "NotEmbedded";
    case Errc::ComparableInput: return "ComparableInput";
    case Errc::NotComparable: return "NotComparable";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::SameElement: return "SameElement";
    case Errc::NotInside: return "NotInside";
    case Errc::NotInBlock: return "NotInBlock";
    case Errc::BadParam: return "BadParam";
    case Errc::TooLarge: return "TooLarge";
    case Errc::ValidationFailed: return "ValidationFailed";
    case Errc::NoContainingBlock: return "NoContainingBlock";
    case Errc::ConstructionFailed: return "ConstructionFailed";
    case Errc::ComparatorNotTotal: return "ComparatorNotTotal";
    case Errc::NotReversible: return "NotReversible";
    case Errc::BothTilts: return "BothTilts";
    case Errc::CyclicH: return "CyclicH";
    case Errc::CoverageGap: return "CoverageGap";
  }
  return "Unknown";
}

bool is_theorem_violation(Errc c) {
  switch (c) {
    case Errc::NoContainingBlock:
    case Errc::ConstructionFailed:
    case Errc::ComparatorNotTotal:
    case Errc::NotReversible:
    case Errc::BothTilts:
    case Errc::CyclicH:
    case Errc::CoverageGap:
    case Errc::ValidationFailed:
      return true;
    default:
      return false;
  }
}

int exit_code_for(Errc c) {
  if (is_theorem_violation(c)) return 5;
  switch (c) {
    case Errc::NonPlanar:
    case Errc::NonPlanarCondensation:
      return 3;
    case Errc::NoZero:
    case Errc::MultipleSources:
      return 4;
    default:
      return 2;
  }
}

}  // namespace pzr
