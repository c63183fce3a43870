#pragma once

#include <stdexcept>
#include <string>

namespace fqg {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct InconsistentPresentation : Error {
    using Error::Error;
};
struct OrderLimitExceeded : Error {
    using Error::Error;
};
struct NotNormal : Error {
    using Error::Error;
};
struct NotAbelian : Error {
    using Error::Error;
};
struct NotCoprime : Error {
    using Error::Error;
};
struct NoSuchRoot : Error {
    using Error::Error;
};
struct NotInNormalizer : Error {
    using Error::Error;
};
struct NotNormalInK : Error {
    using Error::Error;
};
struct StabilizerMismatch : Error {
    using Error::Error;
};
struct DivisibilityViolation : Error {
    using Error::Error;
};
struct NonSquareDimension : Error {
    using Error::Error;
};
struct IncompleteDecomposition : Error {
    using Error::Error;
};
struct InvalidParameters : Error {
    using Error::Error;
};
struct ParseError : Error {
    ParseError(const std::string& msg, size_t pos)
        : Error(msg + " (at position " + std::to_string(pos) + ")"), position(pos) {}
    size_t position;
};

}  // namespace fqg
