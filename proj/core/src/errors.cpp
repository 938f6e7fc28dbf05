#include "isharp/errors.hpp"

namespace isharp {

const char* errc_name(Errc code) {
    switch (code) {
        case Errc::NotSymmetrizable: return "NotSymmetrizable";
        case Errc::EvalNotUnit: return "EvalNotUnit";
        case Errc::NotCoprime: return "NotCoprime";
        case Errc::BadParameter: return "BadParameter";
        case Errc::NotLSpaceForm: return "NotLSpaceForm";
        case Errc::ParseError: return "ParseError";
        case Errc::ZeroScalar: return "ZeroScalar";
        case Errc::ShiftMismatch: return "ShiftMismatch";
        case Errc::CompositionMismatch: return "CompositionMismatch";
        case Errc::DegenerateGenus: return "DegenerateGenus";
        case Errc::PreconditionFailed: return "PreconditionFailed";
    }
    return "UnknownError";
}

Error::Error(Errc code, const std::string& message)
    : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

void fail(Errc code, const std::string& message) { throw Error(code, message); }

}  // namespace isharp
