#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace qlc {

enum class ErrorKind {
    InvalidMatrix,
    DimensionMismatch,
    EmptyDataset,
    NotPSD,
    DegenerateTrace,
    ZeroSignal,
    EmptyClass,
    InvalidParameter,
    ParseError,
    LabelError,
    IoError,
};

std::string_view to_string(ErrorKind kind);

// Every failure in the library is reported as a qlc::Error. The kind is the
// stable part of the contract; the message is for humans. Parse-type errors
// carry the 1-based line of the offending input.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message,
          std::optional<std::size_t> line = std::nullopt);

    ErrorKind kind() const noexcept { return kind_; }
    std::optional<std::size_t> line() const noexcept { return line_; }

private:
    ErrorKind kind_;
    std::optional<std::size_t> line_;
};

}  // namespace qlc
