#pragma once

#include <optional>
#include <string>
#include <vector>

#include "zscheme/polynomial.hpp"
#include "zscheme/rootsys.hpp"

namespace zscheme {

enum class Provenance { ProjectiveSpace, FlagA, Custom };

/// Symbolic data of the type-A flag model: for each coordinate u_ij (aligned
/// with the negated positive-root enumeration), the functions
/// v_alpha = (u^-1 e u)_ij and w_alpha = (u^-1 h u - h)_ij.
struct FlagModelData {
    int rank = 0;
    std::vector<PolyQ> v_alpha;
    std::vector<PolyQ> w_alpha;
};

/// A regular B-variety presented by chart coordinates, their weights, and the
/// nilpotent vector field images V(x_i).
struct RegularModel {
    RingPtr ring;                 // coordinates only, no v
    std::vector<PolyQ> v_images;  // V(x_i), homogeneous of degree a_i + 2
    Provenance provenance = Provenance::Custom;
    int param = 0; // n for P^n, rank for the flag model
    std::optional<FlagModelData> flag;

    int dim() const { return ring->nvars(); }
    std::string provenance_str() const;
};

/// Chart data of P^n at the B-fixed point: weights 2, 4, ..., 2n and
/// V(x_j) = x_{j+1} - x_1 x_j, V(x_n) = -x_1 x_n.
RegularModel projective_space_model(int n);

/// Type-A flag model SL_{l+1}/B on the open cell, coordinates u_ij (i > j)
/// of weight 2(i-j), built by symbolic conjugation of e and h.
RegularModel flag_model_a(int rank);

/// User-supplied model; throws DEGREE_MISMATCH / NOT_HOMOGENEOUS /
/// NOT_ISOLATED_ZERO when the data does not present a regular model.
RegularModel custom_model(RingPtr ring, std::vector<PolyQ> v_images);

struct ModelCertificate {
    bool homogeneity_ok = false;
    bool finite = false;
    int dimension = -1; // dim of C[x]/(V(x_1)..V(x_n)) when finite
    std::vector<std::string> issues;
    bool ok() const { return homogeneity_ok && finite; }
};

/// Checks the degree contract of every V(x_i) and the finite-dimensionality
/// of the ordinary quotient (equivalently, o is the only zero of V).
ModelCertificate validate_regular(const RegularModel& m);

/// Structural equality: same coordinates, weights and vector field images.
bool models_equal(const RegularModel& a, const RegularModel& b);

} // namespace zscheme
