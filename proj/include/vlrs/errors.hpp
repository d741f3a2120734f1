#pragma once

#include <stdexcept>
#include <string>

namespace vlrs {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Code fails Definition conditions or operational decodability.
struct InvalidCodeError : Error {
    using Error::Error;
};

/// No termination pattern satisfies both termination conditions.
struct UnsupportedCodeError : Error {
    using Error::Error;
};

struct CodecError : Error {
    using Error::Error;
};

/// Payload ran out before symbol_count symbols were produced.
struct TruncationError : CodecError {
    using CodecError::CodecError;
};

/// More symbols emitted than symbol_count announces.
struct MalformedBlockError : CodecError {
    using CodecError::CodecError;
};

struct ParseError : Error {
    using Error::Error;
};

enum class ContainerFault { Truncated, BadMagic, BadVersion, BadPadding, HashMismatch };

struct ContainerError : Error {
    ContainerFault fault;
    ContainerError(ContainerFault f, const std::string& msg) : Error(msg), fault(f) {}
};

}  // namespace vlrs
