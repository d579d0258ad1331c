#pragma once

#include <stdexcept>
#include <string>

namespace cactus5 {

enum class Errc {
    // structural validation
    NotATree,
    BadLabels,
    SelfLoop,
    BigSelfGluing,
    DegreeOutOfRange,
    // ribbon graph
    DualityMismatch,
    AmbiguousRotation,
    NonOrientableParity,
    UnknownFormat,
    EmptyGraph,
    // numeric realization
    GenericityError,
    NonQuintic,
    CollisionAmbiguous,
    PathClearance,
    Divergence,
    // lookup / io
    UnknownClassId,
    BadInput,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
  public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
    Errc code() const { return code_; }

  private:
    Errc code_;
};

} // namespace cactus5
