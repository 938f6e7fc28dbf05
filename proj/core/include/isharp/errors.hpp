#pragma once

#include <stdexcept>
#include <string>

namespace isharp {

// Failure codes shared across the library. The CLI maps these onto its
// exit-code contract (parse failures -> 1, non-L-space input -> 2).
enum class Errc {
    NotSymmetrizable,
    EvalNotUnit,
    NotCoprime,
    BadParameter,
    NotLSpaceForm,
    ParseError,
    ZeroScalar,
    ShiftMismatch,
    CompositionMismatch,
    DegenerateGenus,
    PreconditionFailed,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
  public:
    Error(Errc code, const std::string& message);

    Errc code() const { return code_; }

  private:
    Errc code_;
};

[[noreturn]] void fail(Errc code, const std::string& message);

}  // namespace isharp
