#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace zscheme {

enum class CoeffField { Rationals, RationalFunctionsInV };

class WeightedRing;
using RingPtr = std::shared_ptr<const WeightedRing>;

/// Ambient weighted polynomial ring: ordered variables with positive even
/// weights. At most one variable may be the distinguished "v", of weight 2.
class WeightedRing {
public:
    static RingPtr make(std::vector<std::string> vars, std::vector<int> weights,
                        CoeffField field = CoeffField::Rationals);

    int nvars() const { return static_cast<int>(vars_.size()); }
    const std::vector<std::string>& vars() const { return vars_; }
    const std::vector<int>& weights() const { return weights_; }
    const std::string& var_name(int i) const { return vars_[static_cast<std::size_t>(i)]; }
    int weight(int i) const { return weights_[static_cast<std::size_t>(i)]; }
    CoeffField field() const { return field_; }

    int var_index(const std::string& name) const; // -1 if absent
    int v_index() const { return v_index_; }      // -1 if no "v" variable
    bool has_v() const { return v_index_ >= 0; }

    /// Same ring with "v" (weight 2) appended; *this must not contain v.
    RingPtr extended_with_v() const;
    /// Drops the v variable and switches the coefficient field to Q(v).
    RingPtr param_field_ring() const;

    bool operator==(const WeightedRing& o) const {
        return vars_ == o.vars_ && weights_ == o.weights_ && field_ == o.field_;
    }
    bool operator!=(const WeightedRing& o) const { return !(*this == o); }

    std::string describe() const;

private:
    WeightedRing(std::vector<std::string> vars, std::vector<int> weights, CoeffField field);
    std::vector<std::string> vars_;
    std::vector<int> weights_;
    CoeffField field_;
    int v_index_ = -1;
};

/// Exponent vector, aligned with the ring's variables.
struct Monomial {
    std::vector<int32_t> e;

    static Monomial unit(int n) { return Monomial{std::vector<int32_t>(static_cast<std::size_t>(n), 0)}; }
    static Monomial var(int n, int i, int32_t exp = 1) {
        Monomial m = unit(n);
        m.e[static_cast<std::size_t>(i)] = exp;
        return m;
    }

    bool is_unit() const {
        for (int32_t x : e)
            if (x) return false;
        return true;
    }
    long long weighted_degree(const WeightedRing& r) const {
        long long d = 0;
        for (std::size_t i = 0; i < e.size(); ++i) d += static_cast<long long>(e[i]) * r.weights()[i];
        return d;
    }
    bool divides(const Monomial& m) const {
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] > m.e[i]) return false;
        return true;
    }
    Monomial operator*(const Monomial& m) const {
        Monomial r = *this;
        for (std::size_t i = 0; i < e.size(); ++i) r.e[i] += m.e[i];
        return r;
    }
    /// Componentwise quotient; caller guarantees divisibility.
    Monomial operator/(const Monomial& m) const {
        Monomial r = *this;
        for (std::size_t i = 0; i < e.size(); ++i) r.e[i] -= m.e[i];
        return r;
    }
    static Monomial lcm(const Monomial& a, const Monomial& b) {
        Monomial r = a;
        for (std::size_t i = 0; i < a.e.size(); ++i)
            if (b.e[i] > r.e[i]) r.e[i] = b.e[i];
        return r;
    }
    static bool coprime(const Monomial& a, const Monomial& b) {
        for (std::size_t i = 0; i < a.e.size(); ++i)
            if (a.e[i] && b.e[i]) return false;
        return true;
    }
    bool operator==(const Monomial& m) const { return e == m.e; }
    bool operator!=(const Monomial& m) const { return e != m.e; }

    std::string str(const WeightedRing& r) const;
};

/// Weighted graded reverse lexicographic comparison: weighted degree first,
/// ties by reverse lex (the last variable is the cheapest). Returns a < b.
bool grevlex_less(const Monomial& a, const Monomial& b, const WeightedRing& ring);

} // namespace zscheme
