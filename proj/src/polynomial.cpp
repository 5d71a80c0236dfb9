#include "zscheme/polynomial.hpp"

namespace zscheme {

PolyF to_param_field(const PolyQ& p) {
    const RingPtr& src = p.ring();
    if (!src->has_v()) throw Error(Errc::BadInput, "ring has no v variable");
    RingPtr dst = src->param_field_ring();
    const int vi = src->v_index();
    std::vector<PolyF::Term> out;
    for (const auto& [m, c] : p.terms()) {
        const int32_t vk = m.e[static_cast<std::size_t>(vi)];
        Monomial mm = Monomial::unit(dst->nvars());
        int k = 0;
        for (int i = 0; i < src->nvars(); ++i) {
            if (i == vi) continue;
            mm.e[static_cast<std::size_t>(k++)] = m.e[static_cast<std::size_t>(i)];
        }
        out.emplace_back(std::move(mm), RatFunc(UPoly::term(c, vk)));
    }
    return PolyF::from_terms(dst, std::move(out));
}

PolyQ from_param_field(const PolyF& p, const RingPtr& xv_ring) {
    const RingPtr& src = p.ring();
    const int vi = xv_ring->v_index();
    if (vi < 0) throw Error(Errc::BadInput, "target ring has no v variable");
    std::vector<PolyQ::Term> out;
    for (const auto& [m, c] : p.terms()) {
        const UPoly cp = c.poly(); // throws when a denominator did not clear
        for (int k = 0; k <= cp.degree(); ++k) {
            if (cp.coeff(k).is_zero()) continue;
            Monomial mm = Monomial::unit(xv_ring->nvars());
            for (int i = 0; i < src->nvars(); ++i) {
                const int j = xv_ring->var_index(src->var_name(i));
                if (j < 0) throw Error(Errc::RingMismatch, "variable missing in target ring");
                mm.e[static_cast<std::size_t>(j)] = m.e[static_cast<std::size_t>(i)];
            }
            mm.e[static_cast<std::size_t>(vi)] = k;
            out.emplace_back(std::move(mm), cp.coeff(k));
        }
    }
    return PolyQ::from_terms(xv_ring, std::move(out));
}

PolyQ poly_div_exact(const PolyQ& a, const PolyQ& b) {
    if (b.is_zero()) throw Error(Errc::BadInput, "polynomial division by zero");
    PolyQ r = a;
    PolyQ q = PolyQ::zero(a.ring());
    const auto& [lb, cb] = b.leading_term();
    while (!r.is_zero()) {
        const auto& [lr, cr] = r.leading_term();
        if (!lb.divides(lr)) throw Error(Errc::BadInput, "inexact polynomial division");
        const Monomial m = lr / lb;
        const Rational c = cr / cb;
        q += PolyQ::term(a.ring(), m, c);
        r -= b.mul_term(m, c);
    }
    return q;
}

namespace {

PolyQ det_cofactor(const std::vector<std::vector<PolyQ>>& m, std::vector<int> cols,
                   std::size_t row, const RingPtr& ring) {
    if (cols.size() == 1) return m[row][static_cast<std::size_t>(cols[0])];
    PolyQ det = PolyQ::zero(ring);
    for (std::size_t k = 0; k < cols.size(); ++k) {
        const PolyQ& entry = m[row][static_cast<std::size_t>(cols[k])];
        if (entry.is_zero()) continue;
        std::vector<int> rest;
        rest.reserve(cols.size() - 1);
        for (std::size_t j = 0; j < cols.size(); ++j)
            if (j != k) rest.push_back(cols[j]);
        PolyQ minor = det_cofactor(m, std::move(rest), row + 1, ring);
        if (k % 2)
            det -= entry * minor;
        else
            det += entry * minor;
    }
    return det;
}

} // namespace

PolyQ poly_matrix_determinant(std::vector<std::vector<PolyQ>> m) {
    const std::size_t n = m.size();
    if (n == 0) throw Error(Errc::DimensionMismatch, "empty matrix");
    for (const auto& row : m)
        if (row.size() != n) throw Error(Errc::DimensionMismatch, "matrix is not square");
    const RingPtr ring = m[0][0].ring();

    if (n <= 4) {
        std::vector<int> cols(n);
        for (std::size_t i = 0; i < n; ++i) cols[i] = static_cast<int>(i);
        return det_cofactor(m, std::move(cols), 0, ring);
    }

    // Bareiss: every division below is exact.
    PolyQ prev = PolyQ::constant(ring, Rational(1));
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            std::size_t piv = k + 1;
            while (piv < n && m[piv][k].is_zero()) ++piv;
            if (piv == n) return PolyQ::zero(ring);
            std::swap(m[k], m[piv]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                m[i][j] = poly_div_exact(m[k][k] * m[i][j] - m[i][k] * m[k][j], prev);
        prev = m[k][k];
    }
    PolyQ det = m[n - 1][n - 1];
    return sign < 0 ? -det : det;
}

PolyQ jacobian_determinant(const std::vector<PolyQ>& polys, const std::vector<int>& vars) {
    if (polys.empty()) throw Error(Errc::DimensionMismatch, "empty system");
    if (polys.size() != vars.size())
        throw Error(Errc::DimensionMismatch, "need as many variables as polynomials");
    for (std::size_t i = 0; i < vars.size(); ++i)
        for (std::size_t j = i + 1; j < vars.size(); ++j)
            if (vars[i] == vars[j]) throw Error(Errc::DimensionMismatch, "variables must be distinct");
    std::vector<std::vector<PolyQ>> m;
    m.reserve(polys.size());
    for (const auto& p : polys) {
        p.check_same_ring(polys[0]);
        std::vector<PolyQ> row;
        row.reserve(vars.size());
        for (int v : vars) row.push_back(p.derivative(v));
        m.push_back(std::move(row));
    }
    return poly_matrix_determinant(std::move(m));
}

} // namespace zscheme
