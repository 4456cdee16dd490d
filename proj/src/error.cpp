#include "cohinv/error.hpp"

namespace cohinv {

std::string_view to_string(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::ZeroElement: return "ZeroElement";
    case ErrorKind::FactorizationFailure: return "FactorizationFailure";
    case ErrorKind::BaseMismatch: return "BaseMismatch";
    case ErrorKind::SpecializationAtPole: return "SpecializationAtPole";
    case ErrorKind::DegenerateForm: return "DegenerateForm";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::NotSquarefree: return "NotSquarefree";
    case ErrorKind::OutsideU0: return "OutsideU0";
    case ErrorKind::OddGenusUnsupported: return "OddGenusUnsupported";
    case ErrorKind::PointOnWeierstrassDivisor: return "PointOnWeierstrassDivisor";
    case ErrorKind::SingularMatrix: return "SingularMatrix";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::GenerationFailure: return "GenerationFailure";
    case ErrorKind::IoError: return "IoError";
    case ErrorKind::EmptyCorpus: return "EmptyCorpus";
    case ErrorKind::UnknownSuite: return "UnknownSuite";
    }
    return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind)
{
}

}  // namespace cohinv
