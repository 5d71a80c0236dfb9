#pragma once

#include <stdexcept>
#include <string>

namespace zscheme {

enum class Errc {
    UnknownVariable,
    SyntaxError,
    RingMismatch,
    DimensionMismatch,
    NotZeroDimensional,
    NotHomogeneous,
    DegreeMismatch,
    NotIsolatedZero,
    NotARoot,
    InvalidHessenberg,
    WrongProvenance,
    BadInput,
    CertificateFailed,
    CheckFailed,
    CongruenceFailed,
    Mismatch,
    NonpolynomialTrace,
    JNotInvertible,
    SingularJAtFiber,
    OracleMismatch,
};

const char* errc_name(Errc c);

/// 2 = input/validation error, 3 = internal invariant violation.
int errc_exit_code(Errc c);

class Error : public std::runtime_error {
public:
    Error(Errc code, std::string msg, long position = -1)
        : std::runtime_error(std::string(errc_name(code)) + ": " + msg),
          code_(code),
          position_(position) {}

    Errc code() const { return code_; }

    /// Byte offset into the offending input, or -1 when not applicable.
    long position() const { return position_; }

private:
    Errc code_;
    long position_;
};

} // namespace zscheme
