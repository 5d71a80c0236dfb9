#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "zscheme/matrix.hpp"
#include "zscheme/polynomial.hpp"

namespace zscheme {

struct MonomialOrder {
    enum class Kind { WeightedGrevlex, Lex };
    Kind kind = Kind::WeightedGrevlex;
    /// Variable indices, most significant first; empty means ring order.
    std::vector<int> priority;

    static MonomialOrder grevlex() { return {}; }
    static MonomialOrder lex(std::vector<int> priority = {}) {
        return {Kind::Lex, std::move(priority)};
    }

    bool less(const Monomial& a, const Monomial& b, const WeightedRing& ring) const;
    bool is_canonical_grevlex() const { return kind == Kind::WeightedGrevlex && priority.empty(); }
    std::string describe(const WeightedRing& ring) const;
};

namespace gbdetail {

template <class K>
using Term = std::pair<Monomial, K>;

void normalize_content(std::vector<Term<Rational>>& terms);
void normalize_content(std::vector<Term<RatFunc>>& terms);

} // namespace gbdetail

/// Reduced Groebner basis: monic, interreduced, sorted by leading monomial.
template <class K>
class GroebnerBasis {
public:
    GroebnerBasis() = default; // empty shell; populated by buchberger()
    GroebnerBasis(RingPtr ring, MonomialOrder order)
        : ring_(std::move(ring)), order_(std::move(order)) {}

    const RingPtr& ring() const { return ring_; }
    const MonomialOrder& order() const { return order_; }
    /// Basis elements with terms sorted descending under order().
    const std::vector<std::vector<gbdetail::Term<K>>>& elements_sorted() const { return elems_; }
    const std::vector<Poly<K>>& elements() const { return display_; }
    const std::vector<Poly<K>>& source_generators() const { return source_; }
    std::size_t size() const { return elems_.size(); }
    const Monomial& leading_monomial(std::size_t i) const { return elems_[i].front().first; }

    bool contains_unit() const {
        return elems_.size() == 1 && elems_[0].size() == 1 && elems_[0][0].first.is_unit();
    }

    /// Pure-power staircase bounds; empty optional when some variable has no
    /// pure power among the leading monomials (quotient not 0-dimensional).
    std::optional<std::vector<int>> staircase_bounds() const;

    // Engine-facing internals (populated by buchberger()).
    std::vector<std::vector<gbdetail::Term<K>>>& mutable_elements() { return elems_; }
    std::vector<Poly<K>>& mutable_display() { return display_; }
    std::vector<Poly<K>>& mutable_source() { return source_; }

private:
    RingPtr ring_;
    MonomialOrder order_;
    std::vector<std::vector<gbdetail::Term<K>>> elems_;
    std::vector<Poly<K>> display_;
    std::vector<Poly<K>> source_;
};

/// Buchberger with the coprime and chain criteria; returns the reduced basis.
/// Ideal membership of every input generator is replayed before returning.
/// An empty generator list yields the zero ideal (ring must then be given).
template <class K>
GroebnerBasis<K> buchberger(const std::vector<Poly<K>>& gens, MonomialOrder order,
                            RingPtr ring = nullptr);

inline GroebnerBasis<Rational> buchberger(std::initializer_list<PolyQ> gens, MonomialOrder order,
                                          RingPtr ring = nullptr) {
    return buchberger(std::vector<PolyQ>(gens), std::move(order), std::move(ring));
}
inline GroebnerBasis<RatFunc> buchberger(std::initializer_list<PolyF> gens, MonomialOrder order,
                                         RingPtr ring = nullptr) {
    return buchberger(std::vector<PolyF>(gens), std::move(order), std::move(ring));
}

/// Unique remainder of f modulo gb: no term of the result is divisible by a
/// leading monomial; f - result lies in the ideal.
template <class K>
Poly<K> normal_form(const Poly<K>& f, const GroebnerBasis<K>& gb);

/// Monomials outside the leading term ideal, sorted ascending under gb's
/// order. Throws NOT_ZERO_DIMENSIONAL when infinite.
template <class K>
std::vector<Monomial> standard_monomials(const GroebnerBasis<K>& gb);

/// Matrix of multiplication by f on the standard-monomial basis.
template <class K>
Matrix<K> multiplication_matrix(const Poly<K>& f, const GroebnerBasis<K>& gb,
                                const std::vector<Monomial>& basis);

template <class K>
Matrix<K> multiplication_matrix(const Poly<K>& f, const GroebnerBasis<K>& gb) {
    return multiplication_matrix(f, gb, standard_monomials(gb));
}

/// Determinant of [Tr(M_{b_i b_j})]; nonzero iff the quotient is reduced
/// (characteristic zero).
template <class K>
K trace_form_determinant(const GroebnerBasis<K>& gb);

/// Iterated quotient (gens : v^infinity) for the ring's last variable, which
/// must be the grevlex-cheapest. Returns the reduced basis of the saturation;
/// `*changed` reports whether any division by v actually happened.
GroebnerBasis<Rational> saturate_wrt_last_variable(std::vector<PolyQ> gens,
                                                   bool* changed = nullptr);

/// Replays every S-polynomial of the reduced basis; true iff all reduce to 0.
/// Basis elements are monic under the basis order, so no coefficients appear.
template <class K>
bool replay_s_polynomials(const GroebnerBasis<K>& gb) {
    for (std::size_t i = 0; i < gb.size(); ++i)
        for (std::size_t j = i + 1; j < gb.size(); ++j) {
            const Monomial l = Monomial::lcm(gb.leading_monomial(i), gb.leading_monomial(j));
            const Poly<K> s = gb.elements()[i].mul_term(l / gb.leading_monomial(i), K(1)) -
                              gb.elements()[j].mul_term(l / gb.leading_monomial(j), K(1));
            if (!normal_form(s, gb).is_zero()) return false;
        }
    return true;
}

/// Hilbert series numerator over the full ambient denominator prod(1-t^w).
struct HilbertSeries {
    UPoly numerator;
    std::vector<int> denominator_weights;

    UPoly denominator_expanded() const;
    /// Power-series coefficients 0..upto.
    UPoly expand(int upto) const;
    /// Exact polynomial value of the series, when it terminates.
    std::optional<UPoly> as_polynomial() const;
    static bool series_equal(const HilbertSeries& a, const HilbertSeries& b);
    std::string str() const;
};

/// Hilbert series of ring/(gens) for weighted-homogeneous generators,
/// computed from the leading-term ideal. Independent of the order choice.
HilbertSeries hilbert_series(const std::vector<PolyQ>& gens,
                             MonomialOrder order = MonomialOrder::grevlex(),
                             RingPtr ring = nullptr);

/// Numerator of the Hilbert series of a monomial-ideal quotient.
UPoly monomial_ideal_numerator(std::vector<Monomial> gens, const WeightedRing& ring);

struct RegSeqCertificate {
    bool ok = false;
    HilbertSeries computed;
    UPoly expected_numerator;
    std::vector<long long> generator_degrees;
};

/// True iff the Hilbert series equals prod(1-t^deg gi) / prod(1-t^aj).
RegSeqCertificate is_regular_sequence(const std::vector<PolyQ>& gens);

// --- template implementation -------------------------------------------------

namespace gbdetail {

template <class K>
struct OrderCmp {
    const MonomialOrder* order;
    const WeightedRing* ring;
    bool operator()(const Monomial& a, const Monomial& b) const {
        return order->less(a, b, *ring);
    }
};

template <class K>
std::vector<Term<K>> to_sorted(const Poly<K>& p, const MonomialOrder& order) {
    std::vector<Term<K>> t(p.terms().begin(), p.terms().end());
    if (!order.is_canonical_grevlex()) {
        const WeightedRing& r = *p.ring();
        std::sort(t.begin(), t.end(), [&](const Term<K>& a, const Term<K>& b) {
            return order.less(b.first, a.first, r); // descending
        });
    }
    return t;
}

template <class K>
Poly<K> to_poly(const RingPtr& ring, const std::vector<Term<K>>& terms) {
    return Poly<K>::from_terms(ring, terms);
}

/// dst -= c * m * src, both sorted descending; linear merge.
template <class K>
void axpy(std::vector<Term<K>>& dst, const K& c, const Monomial& m,
          const std::vector<Term<K>>& src, const MonomialOrder& order,
          const WeightedRing& ring) {
    std::vector<Term<K>> out;
    out.reserve(dst.size() + src.size());
    std::size_t i = 0, j = 0;
    while (i < dst.size() || j < src.size()) {
        if (j == src.size()) {
            out.push_back(std::move(dst[i++]));
            continue;
        }
        Monomial mj = src[j].first * m;
        if (i == dst.size()) {
            K cc = -(c * src[j].second);
            if (!cc.is_zero()) out.emplace_back(std::move(mj), std::move(cc));
            ++j;
            continue;
        }
        if (order.less(mj, dst[i].first, ring)) {
            out.push_back(std::move(dst[i++]));
        } else if (order.less(dst[i].first, mj, ring)) {
            K cc = -(c * src[j].second);
            if (!cc.is_zero()) out.emplace_back(std::move(mj), std::move(cc));
            ++j;
        } else {
            K cc = dst[i].second - c * src[j].second;
            if (!cc.is_zero()) out.emplace_back(std::move(mj), std::move(cc));
            ++i;
            ++j;
        }
    }
    dst = std::move(out);
}

/// dst = a*dst - b * m * src (fraction-free step used inside Buchberger).
template <class K>
void scaled_axpy(std::vector<Term<K>>& dst, const K& a, const K& b, const Monomial& m,
                 const std::vector<Term<K>>& src, const MonomialOrder& order,
                 const WeightedRing& ring) {
    for (auto& t : dst) t.second *= a;
    axpy(dst, b, m, src, order, ring);
}

/// Full reduction allowing scalar rescaling of the remainder; used during
/// basis construction where only the ideal class matters.
template <class K>
std::vector<Term<K>> reduce_scaled(std::vector<Term<K>> f,
                                   const std::vector<std::vector<Term<K>>>& basis,
                                   const MonomialOrder& order, const WeightedRing& ring) {
    std::vector<Term<K>> done;
    std::size_t head = 0; // f[0..head) is irreducible, collected lazily
    while (head < f.size()) {
        bool reduced = false;
        for (const auto& g : basis) {
            if (g.empty()) continue;
            if (g.front().first.divides(f[head].first)) {
                const Monomial m = f[head].first / g.front().first;
                const K c = f[head].second / g.front().second;
                done.insert(done.end(), std::make_move_iterator(f.begin()),
                            std::make_move_iterator(f.begin() + static_cast<long>(head)));
                f.erase(f.begin(), f.begin() + static_cast<long>(head));
                head = 0;
                axpy(f, c, m, g, order, ring);
                reduced = true;
                break;
            }
        }
        if (!reduced) ++head;
    }
    done.insert(done.end(), std::make_move_iterator(f.begin()), std::make_move_iterator(f.end()));
    normalize_content(done);
    return done;
}

/// Field-exact full reduction (no rescaling): the honest normal form.
template <class K>
std::vector<Term<K>> reduce_exact(std::vector<Term<K>> f,
                                  const std::vector<std::vector<Term<K>>>& basis,
                                  const MonomialOrder& order, const WeightedRing& ring,
                                  std::size_t skip = static_cast<std::size_t>(-1)) {
    std::vector<Term<K>> done;
    std::size_t head = 0;
    while (head < f.size()) {
        bool reduced = false;
        for (std::size_t gi = 0; gi < basis.size(); ++gi) {
            if (gi == skip) continue;
            const auto& g = basis[gi];
            if (g.empty()) continue;
            if (g.front().first.divides(f[head].first)) {
                const Monomial m = f[head].first / g.front().first;
                const K c = f[head].second / g.front().second;
                done.insert(done.end(), std::make_move_iterator(f.begin()),
                            std::make_move_iterator(f.begin() + static_cast<long>(head)));
                f.erase(f.begin(), f.begin() + static_cast<long>(head));
                head = 0;
                axpy(f, c, m, g, order, ring);
                reduced = true;
                break;
            }
        }
        if (!reduced) ++head;
    }
    done.insert(done.end(), std::make_move_iterator(f.begin()), std::make_move_iterator(f.end()));
    return done;
}

} // namespace gbdetail

template <class K>
GroebnerBasis<K> buchberger(const std::vector<Poly<K>>& gens, MonomialOrder order,
                            RingPtr ring) {
    using namespace gbdetail;
    if (!ring) {
        if (gens.empty())
            throw Error(Errc::BadInput, "buchberger on an empty list needs an explicit ring");
        ring = gens[0].ring();
    }
    const WeightedRing& R = *ring;
    for (const auto& g : gens)
        if (*g.ring() != R)
            throw Error(Errc::RingMismatch, g.ring()->describe() + " vs " + R.describe());

    GroebnerBasis<K> gb(ring, order);
    std::vector<std::vector<Term<K>>> G;
    for (const auto& g : gens) {
        if (g.is_zero()) continue;
        auto t = to_sorted(g, order);
        normalize_content(t);
        G.push_back(std::move(t));
    }

    struct Pair {
        long long deg;
        Monomial lcm;
        std::size_t i, j;
    };
    auto pair_less = [&order, &R](const Pair& a, const Pair& b) {
        if (a.deg != b.deg) return a.deg < b.deg;
        if (a.lcm != b.lcm) return order.less(a.lcm, b.lcm, R);
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    };
    std::multiset<Pair, decltype(pair_less)> queue(pair_less);
    auto push_pairs_for = [&](std::size_t j) {
        for (std::size_t i = 0; i < j; ++i) {
            Monomial l = Monomial::lcm(G[i].front().first, G[j].front().first);
            queue.insert(Pair{l.weighted_degree(R), std::move(l), i, j});
        }
    };
    for (std::size_t j = 0; j < G.size(); ++j) push_pairs_for(j);

    while (!queue.empty()) {
        Pair p = *queue.begin();
        queue.erase(queue.begin());

        const Monomial& lmi = G[p.i].front().first;
        const Monomial& lmj = G[p.j].front().first;
        if (Monomial::coprime(lmi, lmj)) continue; // product criterion
        bool chained = false;                      // chain criterion
        for (std::size_t k = 0; k < G.size() && !chained; ++k) {
            if (k == p.i || k == p.j) continue;
            const Monomial& lmk = G[k].front().first;
            if (!lmk.divides(p.lcm)) continue;
            if (Monomial::lcm(lmi, lmk) != p.lcm && Monomial::lcm(lmj, lmk) != p.lcm)
                chained = true;
        }
        if (chained) continue;

        // S-polynomial, fraction-free.
        std::vector<Term<K>> s = G[p.i];
        const Monomial mi = p.lcm / lmi;
        const Monomial mj = p.lcm / lmj;
        for (auto& t : s) t.first = t.first * mi;
        scaled_axpy(s, G[p.j].front().second, G[p.i].front().second, mj, G[p.j], order, R);
        normalize_content(s);
        s = reduce_scaled(std::move(s), G, order, R);
        if (s.empty()) continue;
        G.push_back(std::move(s));
        push_pairs_for(G.size() - 1);
    }

    // Minimalize: drop elements whose leading monomial another one divides.
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < G.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < G.size() && !redundant; ++j) {
            if (i == j) continue;
            const Monomial& a = G[j].front().first;
            const Monomial& b = G[i].front().first;
            if (a.divides(b) && (a != b || j < i)) redundant = true;
        }
        if (!redundant) keep.push_back(i);
    }
    std::vector<std::vector<Term<K>>> minimal;
    minimal.reserve(keep.size());
    for (const std::size_t i : keep) minimal.push_back(std::move(G[i]));

    // Interreduce tails and make monic.
    for (std::size_t i = 0; i < minimal.size(); ++i)
        minimal[i] = reduce_exact(minimal[i], minimal, order, R, i);
    for (auto& g : minimal) {
        const K inv = K(1) / g.front().second;
        for (auto& t : g) t.second *= inv;
    }
    std::sort(minimal.begin(), minimal.end(),
              [&](const auto& a, const auto& b) { return order.less(a.front().first, b.front().first, R); });

    gb.mutable_elements() = std::move(minimal);
    for (const auto& e : gb.elements_sorted())
        gb.mutable_display().push_back(gbdetail::to_poly(ring, e));
    gb.mutable_source() = gens;

    for (const auto& g : gens)
        if (!normal_form(g, gb).is_zero())
            throw Error(Errc::CertificateFailed, "input generator does not reduce to zero");
    return gb;
}

template <class K>
Poly<K> normal_form(const Poly<K>& f, const GroebnerBasis<K>& gb) {
    if (*f.ring() != *gb.ring())
        throw Error(Errc::RingMismatch, f.ring()->describe() + " vs " + gb.ring()->describe());
    auto t = gbdetail::to_sorted(f, gb.order());
    t = gbdetail::reduce_exact(std::move(t), gb.elements_sorted(), gb.order(), *gb.ring());
    return gbdetail::to_poly(gb.ring(), t);
}

template <class K>
std::optional<std::vector<int>> GroebnerBasis<K>::staircase_bounds() const {
    const int n = ring_->nvars();
    std::vector<int> bounds(static_cast<std::size_t>(n), -1);
    for (const auto& g : elems_) {
        const Monomial& lm = g.front().first;
        int var = -1;
        bool pure = true;
        for (int i = 0; i < n && pure; ++i) {
            if (lm.e[static_cast<std::size_t>(i)] == 0) continue;
            if (var >= 0)
                pure = false;
            else
                var = i;
        }
        if (!pure || var < 0) continue;
        const int e = lm.e[static_cast<std::size_t>(var)];
        if (bounds[static_cast<std::size_t>(var)] < 0 || e < bounds[static_cast<std::size_t>(var)])
            bounds[static_cast<std::size_t>(var)] = e;
    }
    for (int b : bounds)
        if (b < 0) return std::nullopt;
    return bounds;
}

template <class K>
std::vector<Monomial> standard_monomials(const GroebnerBasis<K>& gb) {
    const auto bounds = gb.staircase_bounds();
    if (!bounds)
        throw Error(Errc::NotZeroDimensional,
                    "some variable has no pure power among the leading monomials");
    const int n = gb.ring()->nvars();
    long long cells = 1;
    for (int b : *bounds) {
        cells *= b;
        if (cells > 2'000'000) throw Error(Errc::BadInput, "staircase too large to enumerate");
    }
    std::vector<Monomial> out;
    Monomial m = Monomial::unit(n);
    // Odometer over the box below the pure-power staircase.
    for (;;) {
        bool standard = true;
        for (std::size_t i = 0; i < gb.size() && standard; ++i)
            if (gb.leading_monomial(i).divides(m)) standard = false;
        if (standard) out.push_back(m);
        int k = 0;
        while (k < n) {
            if (++m.e[static_cast<std::size_t>(k)] < (*bounds)[static_cast<std::size_t>(k)]) break;
            m.e[static_cast<std::size_t>(k)] = 0;
            ++k;
        }
        if (k == n) break;
    }
    std::sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) {
        return gb.order().less(a, b, *gb.ring());
    });
    return out;
}

template <class K>
Matrix<K> multiplication_matrix(const Poly<K>& f, const GroebnerBasis<K>& gb,
                                const std::vector<Monomial>& basis) {
    const std::size_t r = basis.size();
    std::map<std::vector<int32_t>, std::size_t> index;
    for (std::size_t i = 0; i < r; ++i) index[basis[i].e] = i;
    Matrix<K> m(r, r);
    for (std::size_t j = 0; j < r; ++j) {
        const Poly<K> col = normal_form(f.mul_term(basis[j], K(1)), gb);
        for (const auto& [mono, c] : col.terms()) {
            auto it = index.find(mono.e);
            if (it == index.end())
                throw Error(Errc::CertificateFailed, "normal form left the standard basis");
            m(it->second, j) = c;
        }
    }
    return m;
}

template <class K>
K trace_form_determinant(const GroebnerBasis<K>& gb) {
    const std::vector<Monomial> basis = standard_monomials(gb);
    const std::size_t r = basis.size();
    std::map<std::vector<int32_t>, std::size_t> index;
    for (std::size_t i = 0; i < r; ++i) index[basis[i].e] = i;

    // coords[i][j] = coordinates of NF(b_i * b_j) in the basis.
    std::vector<std::vector<std::vector<K>>> coords(
        r, std::vector<std::vector<K>>(r));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = i; j < r; ++j) {
            const Poly<K> p = normal_form(
                Poly<K>::term(gb.ring(), basis[i] * basis[j], K(1)), gb);
            std::vector<K> v(r, K(0));
            for (const auto& [mono, c] : p.terms()) v[index.at(mono.e)] = c;
            coords[i][j] = v;
            if (i != j) coords[j][i] = coords[i][j];
        }

    std::vector<K> tau(r, K(0)); // tau_k = Tr(mult by b_k)
    for (std::size_t k = 0; k < r; ++k)
        for (std::size_t j = 0; j < r; ++j) tau[k] += coords[k][j][j];

    Matrix<K> t(r, r);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) {
            K s(0);
            for (std::size_t k = 0; k < r; ++k)
                if (!coords[i][j][k].is_zero()) s += coords[i][j][k] * tau[k];
            t(i, j) = s;
        }
    return t.determinant();
}

} // namespace zscheme
