#pragma once

#include <string>
#include <vector>

#include "zscheme/fundscheme.hpp"
#include "zscheme/rootsys.hpp"

namespace zscheme {

/// I(Z_Y) for the Hessenberg variety of Omega(M): the v-saturation of the
/// ideal generated by {F_alpha : alpha in Phi^-} and {v_beta : beta not in
/// Omega}. Saturating by v cuts the scheme down to the union of the
/// Z-components lying over Y, which is the reduced intersection.
struct HessenbergIdeal {
    int rank = 0;
    HessenbergSpace omega;
    RingPtr xv_ring;
    RingPtr u_ring;
    std::vector<PolyQ> raw_generators;   // {F_alpha} + {v_beta}
    GroebnerBasis<Rational> gb;          // reduced basis of the saturation
    bool saturation_was_needed = false;  // raw ideal was not v-saturated
    std::vector<PolyQ> flag_generators;  // the F_alpha, for containment replay
};

HessenbergIdeal hessenberg_ideal(int rank, const HessenbergSpace& omega);

struct ProductFormulaResult {
    bool is_polynomial = false;
    UPoly value_q; // valid when is_polynomial
    bool nonnegative = false;
    std::string ratio; // diagnostic form "num / den"
};

/// The product over -alpha in Omega of (1 - q^{ht+1}) / (1 - q^{ht});
/// flagged NOT_POLYNOMIAL (diagnostic, not fatal) when the division is inexact.
ProductFormulaResult product_formula(const HessenbergSpace& omega);

struct PoincareComparison {
    HilbertSeries series;   // of C[u,v]/(I(Z_Y) + (v)), cohomological grading
    UPoly poincare_t;       // the series as a polynomial in t
    UPoly product_t;        // product formula with q = t^2
    int euler = 0;          // poincare_t(1)
    int fixed_points = 0;
    bool match = false;
    bool euler_match = false;
};

/// Poincare polynomial of the Hessenberg variety; throws MISMATCH (carrying
/// both series) when it disagrees with the product formula or the fixed-point
/// count; that would falsify the reduced-intersection assumption.
PoincareComparison hessenberg_poincare(const HessenbergIdeal& h);

struct CICertificate {
    bool pass = false;
    std::vector<int> degrees; // multiset {e_k} with numerator = prod (1 - t^{e_k})
    HilbertSeries series;     // of C[Z_Y] over the full ambient denominator
    std::string detail;
};

/// Complete-intersection certificate: the C[Z_Y] Hilbert numerator factors
/// into exactly codim-many cyclotomic-type factors (1 - t^{e_k}).
CICertificate complete_intersection_check(const HessenbergIdeal& h);

struct DualityCertificate {
    bool pass = false;
    int socle_degree = -1;
    int degenerate_degree = -1; // first failing degree, when any
    std::string detail;
};

/// Poincare duality of the Artinian quotient: 1-dimensional socle and full-
/// rank pairing A_k x A_{top-k} -> A_top in every degree.
DualityCertificate poincare_duality_check(const HessenbergIdeal& h);

/// Same check for an arbitrary graded Artinian quotient (sanity cases).
DualityCertificate poincare_duality_check_ideal(const std::vector<PolyQ>& gens,
                                                const RingPtr& ring);

} // namespace zscheme
