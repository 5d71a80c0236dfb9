#include "zscheme/error.hpp"

namespace zscheme {

const char* errc_name(Errc c) {
    switch (c) {
        case Errc::UnknownVariable: return "UNKNOWN_VARIABLE";
        case Errc::SyntaxError: return "SYNTAX_ERROR";
        case Errc::RingMismatch: return "RING_MISMATCH";
        case Errc::DimensionMismatch: return "DIMENSION_MISMATCH";
        case Errc::NotZeroDimensional: return "NOT_ZERO_DIMENSIONAL";
        case Errc::NotHomogeneous: return "NOT_HOMOGENEOUS";
        case Errc::DegreeMismatch: return "DEGREE_MISMATCH";
        case Errc::NotIsolatedZero: return "NOT_ISOLATED_ZERO";
        case Errc::NotARoot: return "NOT_A_ROOT";
        case Errc::InvalidHessenberg: return "INVALID_HESSENBERG";
        case Errc::WrongProvenance: return "WRONG_PROVENANCE";
        case Errc::BadInput: return "BAD_INPUT";
        case Errc::CertificateFailed: return "CERTIFICATE_FAILED";
        case Errc::CheckFailed: return "CHECK_FAILED";
        case Errc::CongruenceFailed: return "CONGRUENCE_FAILED";
        case Errc::Mismatch: return "MISMATCH";
        case Errc::NonpolynomialTrace: return "NONPOLYNOMIAL_TRACE";
        case Errc::JNotInvertible: return "J_NOT_INVERTIBLE";
        case Errc::SingularJAtFiber: return "SINGULAR_J_AT_FIBER";
        case Errc::OracleMismatch: return "ORACLE_MISMATCH";
    }
    return "UNKNOWN";
}

int errc_exit_code(Errc c) {
    switch (c) {
        case Errc::UnknownVariable:
        case Errc::SyntaxError:
        case Errc::RingMismatch:
        case Errc::DimensionMismatch:
        case Errc::NotZeroDimensional:
        case Errc::NotHomogeneous:
        case Errc::DegreeMismatch:
        case Errc::NotIsolatedZero:
        case Errc::NotARoot:
        case Errc::InvalidHessenberg:
        case Errc::WrongProvenance:
        case Errc::BadInput:
            return 2;
        default:
            return 3;
    }
}

} // namespace zscheme
