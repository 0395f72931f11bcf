#pragma once

#include <stdexcept>
#include <string>

namespace qhnf {

enum class ErrorKind {
    Algebra,
    TypeMismatch,
    UnsupportedShape,
    UnsupportedRootField,
    NonIsolated,
    Undecided,
    SmallDivisor,
    InvalidComplement,
    Parse,
    Unsupported,
    Internal,
};

const char* error_kind_name(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace qhnf
