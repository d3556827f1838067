#include "qlc/error.hpp"

namespace qlc {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::InvalidMatrix: return "InvalidMatrix";
        case ErrorKind::DimensionMismatch: return "DimensionMismatch";
        case ErrorKind::EmptyDataset: return "EmptyDataset";
        case ErrorKind::NotPSD: return "NotPSD";
        case ErrorKind::DegenerateTrace: return "DegenerateTrace";
        case ErrorKind::ZeroSignal: return "ZeroSignal";
        case ErrorKind::EmptyClass: return "EmptyClass";
        case ErrorKind::InvalidParameter: return "InvalidParameter";
        case ErrorKind::ParseError: return "ParseError";
        case ErrorKind::LabelError: return "LabelError";
        case ErrorKind::IoError: return "IoError";
    }
    return "Unknown";
}

namespace {

std::string decorate(ErrorKind kind, const std::string& message, std::optional<std::size_t> line) {
    std::string out(to_string(kind));
    if (line) out += " at line " + std::to_string(*line);
    out += ": ";
    out += message;
    return out;
}

}  // namespace

Error::Error(ErrorKind kind, const std::string& message, std::optional<std::size_t> line)
    : std::runtime_error(decorate(kind, message, line)), kind_(kind), line_(line) {}

}  // namespace qlc
