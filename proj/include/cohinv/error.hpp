#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cohinv {

enum class ErrorKind {
    ZeroElement,
    FactorizationFailure,
    BaseMismatch,
    SpecializationAtPole,
    DegenerateForm,
    IndexOutOfRange,
    NotSquarefree,
    OutsideU0,
    OddGenusUnsupported,
    PointOnWeierstrassDivisor,
    SingularMatrix,
    InvalidArgument,
    GenerationFailure,
    IoError,
    EmptyCorpus,
    UnknownSuite,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries one of the kinds above so
/// callers (and the CLI exit-code mapping) can dispatch on it.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what);

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace cohinv
