#pragma once

#include <stdexcept>
#include <string>

#include "json.hpp"

namespace pzr {

enum class Errc {
  BadInput,
  CyclicInput,
  NotReduced,
  NonPlanar,
  Disconnected,
  MalformedRotation,
  RootNotOnFace,
  NotIncident,
  NotACycle,
  NoZero,
  MultipleSources,
  NonPlanarCondensation,
  NotEmbedded,
  ComparableInput,
  NotComparable,
  IndexOutOfRange,
  SameElement,
  NotInside,
  NotInBlock,
  BadParam,
  TooLarge,
  ValidationFailed,
  // Failures below contradict a proved statement; they carry a witness.
  NoContainingBlock,
  ConstructionFailed,
  ComparatorNotTotal,
  NotReversible,
  BothTilts,
  CyclicH,
  CoverageGap,
};

const char* errc_name(Errc c);

// Process exit code for an error: 2 bad input, 3 non-planar,
// 4 no zero / multiple sources, 5 theorem violation.
int exit_code_for(Errc c);

bool is_theorem_violation(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what, nlohmann::json detail = nullptr)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what),
        code_(code),
        detail_(std::move(detail)) {}

  Errc code() const { return code_; }
  const nlohmann::json& detail() const { return detail_; }

 private:
  Errc code_;
  nlohmann::json detail_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what, nlohmann::json detail = nullptr) {
  throw Error(code, what, std::move(detail));
}

}  // namespace pzr
