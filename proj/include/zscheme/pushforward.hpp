#pragma once

#include <string>

#include "zscheme/fundscheme.hpp"

namespace zscheme {

/// J: the Jacobian determinant of the canonical generators in the chart
/// variables; homogeneous of degree 2n. Represents the class of the fixed
/// point set, and the residue formula divides by it.
PolyQ jacobian_class(const ZSchemeIdeal& z);

struct NondivisibilityCertificate {
    bool pass = false;
    PolyQ witness; // the nonzero normal form of J modulo I(Z) + (v)
};

/// J is not divisible by v in C[Z]; throws CERTIFICATE_FAILED when the
/// normal form vanishes.
NondivisibilityCertificate jacobian_nondivisibility(const ZSchemeIdeal& z);

/// Trace of multiplication by f on C[Z] over C[v]; Tr(1) = r. Denominators
/// must clear (NONPOLYNOMIAL_TRACE otherwise; a model failure).
UPoly pf_trace(const ZSchemeIdeal& z, const PolyQ& f);

struct IntegralResult {
    UPoly value;            // exact polynomial in v
    DegreeInfo class_degree;
    std::string method;     // "TRACE" or "FIBER_SUM"
};

/// The equivariant push-forward: trace of M_f M_J^{-1} over Q(v). For
/// homogeneous f of degree d the value is homogeneous of degree d - 2n
/// (zero when d < 2n).
IntegralResult equivariant_integral(const ZSchemeIdeal& z, const PolyQ& f);

/// Independent oracle: the same sum computed in the specialized algebra
/// Q[x]/I(Z)|_{v=v0} with no Q(v) arithmetic. Must agree with
/// equivariant_integral evaluated at v0.
Rational fiber_sum_oracle(const ZSchemeIdeal& z, const PolyQ& f, const Rational& v0);

} // namespace zscheme
