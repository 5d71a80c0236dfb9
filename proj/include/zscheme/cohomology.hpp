#pragma once

#include <string>
#include <vector>

#include "zscheme/fundscheme.hpp"

namespace zscheme {

/// Presentation of H*_T(X) or H*(X) as a graded quotient ring, with the
/// certificates that back it. Series are reported in cohomological degree.
struct PresentationReport {
    bool equivariant = true;
    std::string ring_description;
    std::string provenance;
    std::vector<std::string> generators;
    HilbertSeries series;
    int euler = 0;
    // Certificates.
    bool regular_sequence_ok = false;
    std::vector<long long> generator_degrees;
    int flat_deg = 0;
    bool series_consistent = false; // F(t) (1 - t^2) = P(t)
};

/// H*_T(X) = C[x_1..x_n, v] / I(Z), with all certificates attached.
PresentationReport equivariant_presentation(const RegularModel& m);

/// H*(X) = C[x_1..x_n] / (V(x_1)..V(x_n)), the v -> 0 specialization.
PresentationReport ordinary_presentation(const RegularModel& m);

/// P_X(1) = dim of the ordinary quotient.
int euler_characteristic(const RegularModel& m);

struct ClosedFormCheck {
    int n = 0;
    bool pass = false;
    bool chain_maps_into_product_ideal = false;
    bool last_generator_unit_multiple = false;
    bool series_match = false;
    std::string product;         // prod_{m=0}^{n} (x1 + m v), printed
    std::vector<std::string> generator_images;
    std::string detail;
};

/// Verifies the closed-form presentation of H*_T(P^n): eliminating x_2..x_n
/// by the substitution chain sends I(Z) into (prod (x1 + m v)), the last
/// generator to a unit multiple of the product, and both presentations have
/// the same Hilbert series. Throws CHECK_FAILED when a witness fails.
ClosedFormCheck pn_closed_form_check(int n);

struct ChernCheck {
    int n = 0;
    bool congruences_ok = false;
    PolyQ scalar;       // c(x, v): first coordinate of xi(v) s(x)
    PolyQ discrepancy;  // NF(c + x1) mod I(Z); reported, not asserted zero
    std::vector<std::string> failures;
};

/// Acts the infinitesimal B-action matrix xi(v) = v h' - 2 e' on the
/// tautological fiber s(x) = (1, x1, .., xn) and checks the eigenvector
/// congruences (xi s)_k - c x_k in I(Z). Throws CONGRUENCE_FAILED on failure.
ChernCheck chern_line_bundle_image(int n);

} // namespace zscheme
