#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "zscheme/groebner.hpp"
#include "zscheme/regvariety.hpp"

namespace zscheme {

/// The ideal I(Z) of the fundamental scheme in C[x_1..x_n, v], generated by
/// g_i = a_i v x_i - 2 V(x_i) (F_alpha for flag models), with cached Groebner
/// data over Q and over Q(v). Immutable after construction.
class ZSchemeIdeal {
public:
    explicit ZSchemeIdeal(RegularModel model);

    /// Testing hook for the normalization guard: generator `index` scaled by c.
    static ZSchemeIdeal with_scaled_generator(RegularModel model, std::size_t index, Rational c);

    ZSchemeIdeal(const ZSchemeIdeal&) = delete;
    ZSchemeIdeal& operator=(const ZSchemeIdeal&) = delete;
    ZSchemeIdeal(ZSchemeIdeal&&) = default;

    const RegularModel& model() const { return model_; }
    const RingPtr& xv_ring() const { return xv_ring_; }
    const RingPtr& x_ring() const { return model_.ring; }
    int n() const { return model_.ring->nvars(); }
    const std::vector<PolyQ>& generators() const { return gens_; }
    std::vector<PolyQ> ordinary_generators() const; // g_i at v = 0, in the x-ring

    const GroebnerBasis<Rational>& gb_xv() const;       // grevlex in C[x, v]
    const GroebnerBasis<Rational>& gb_ordinary() const; // grevlex of the v=0 ideal
    const GroebnerBasis<RatFunc>& gb_param() const;     // over Q(v), x variables only
    const std::vector<Monomial>& param_basis() const;   // Q(v) standard monomials

private:
    RegularModel model_;
    RingPtr xv_ring_;
    std::vector<PolyQ> gens_;
    struct Caches;
    std::shared_ptr<Caches> caches_;
};

/// Canonical generators for a model, in the given C[x, v] ring.
std::vector<PolyQ> canonical_generators(const RegularModel& m, const RingPtr& xv_ring);

ZSchemeIdeal zscheme_ideal(RegularModel m);

/// Rank of C[Z] over C[v]; equals the Euler characteristic. Cross-checked
/// against the v = 0 fiber dimension.
int flat_degree(const ZSchemeIdeal& z);

/// Certifies that {g_1..g_n, v} is a regular sequence; throws
/// CERTIFICATE_FAILED (carrying both series) otherwise.
RegSeqCertificate certify_regular_sequence(const ZSchemeIdeal& z);

struct FiberDecomposition {
    Rational v0;
    int dimension = 0;
    Rational trace_form_det;
    bool reduced = false;
    std::vector<UPoly> char_polys; // mult-by-x_i characteristic polynomials
};

FiberDecomposition fiber(const ZSchemeIdeal& z, const Rational& v0);

struct ZSeries {
    HilbertSeries equivariant; // F(t), over weights + {2}
    HilbertSeries ordinary;    // of C[Z]/(v), over the x-weights
    UPoly p_polynomial;        // P(t), the ordinary series as a polynomial
    bool consistent = false;   // F(t) (1 - t^2) = P(t), checked exactly
};

ZSeries hilbert_series_Z(const ZSchemeIdeal& z);

/// The P^n substitution chain through the m-th fixed point:
/// x_1 = -m v, x_{j+1} = x_j (x_1 + j v); entry j is the value of x_{j+1}.
/// Construction verifies that every generator vanishes under the chain.
std::vector<UPoly> component_chain(const ZSchemeIdeal& z, int m);

/// Restriction of the class f to the component through the m-th fixed point;
/// the restriction of v is v. P^n models only (WRONG_PROVENANCE otherwise).
UPoly component_restriction(const ZSchemeIdeal& z, const PolyQ& f, int m);

} // namespace zscheme
