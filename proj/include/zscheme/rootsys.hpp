#pragma once

#include <optional>
#include <string>
#include <vector>

#include "zscheme/error.hpp"

namespace zscheme {

/// Root of type A_l: eps_i - eps_j with i != j, indices in 1..l+1.
/// Positive exactly when i < j.
struct Root {
    int i = 0, j = 0;

    bool positive() const { return i < j; }
    Root negated() const { return {j, i}; }
    /// Height of the underlying positive root.
    int height() const { return i < j ? j - i : i - j; }

    /// Coefficients over the simple roots a_1..a_l (0/±1, consecutive run).
    std::vector<int> simple_coefficients(int rank) const;

    bool operator==(const Root& o) const { return i == o.i && j == o.j; }
    bool operator<(const Root& o) const {
        if (height() != o.height()) return height() < o.height();
        if (i != o.i) return i < o.i;
        return j < o.j;
    }

    std::string str() const; // "a1+a2", "-a1", ...
    static Root parse(const std::string& text, int rank);
};

struct RootSystemA {
    int rank = 0;
    /// Enumerated by (height, start index); simple roots come first.
    std::vector<Root> positive_roots;

    bool is_root(const Root& r) const;
    int positive_index(const Root& r) const; // -1 if not a positive root
    std::vector<Root> negative_roots() const;
};

RootSystemA build_type_a(int rank);

/// Permutation of {1..l+1} acting on the eps basis.
struct WeylElement {
    std::vector<int> perm; // perm[k-1] = w(k), values 1-based

    static WeylElement identity(int rank);
    static WeylElement simple_reflection(int rank, int k); // s_k = (k, k+1)
    static WeylElement longest(int rank);

    int apply(int k) const { return perm[static_cast<std::size_t>(k - 1)]; }
    WeylElement inverse() const;
    WeylElement operator*(const WeylElement& o) const; // (w*u)(k) = w(u(k))
    bool operator==(const WeylElement& o) const { return perm == o.perm; }
    std::string str() const;
};

std::vector<WeylElement> enumerate_weyl(int rank); // all (l+1)! elements

/// Image of a root under w; throws NOT_A_ROOT on malformed input.
Root act(const WeylElement& w, const Root& alpha, int rank);

/// Omega(M): the negative roots of a B-submodule M of g containing b.
struct HessenbergSpace {
    int rank = 0;
    std::vector<Root> omega; // negative roots, sorted canonically

    bool contains(const Root& r) const;
    std::string str() const;
};

HessenbergSpace make_hessenberg_space(int rank, std::vector<Root> omega);

struct HessenbergValidation {
    bool ok = true;
    // First violation: root alpha in Omega and simple index k with
    // alpha + a_k a negative root missing from Omega.
    std::optional<Root> alpha;
    int simple_index = 0;
    std::optional<Root> missing;
};

HessenbergValidation validate_hessenberg(const HessenbergSpace& h);

/// Omega = negative simple roots; the Peterson variety's Hessenberg space.
HessenbergSpace peterson_omega(int rank);
/// Omega = {-alpha : ht(alpha) >= 2}, i.e. the roots with alpha(h) > 2.
/// Not B-closed for rank >= 2; exposed for experimentation only.
HessenbergSpace omega_from_height_condition(int rank);

std::vector<WeylElement> hessenberg_fixed_points(const HessenbergSpace& h);

/// All B-closed Omega over A_rank, ordered by subset bitmask.
std::vector<HessenbergSpace> enumerate_valid_omegas(int rank);

/// Comma-separated root list, e.g. "-a1,-a2"; keywords are handled upstream.
HessenbergSpace parse_omega(const std::string& text, int rank);

} // namespace zscheme
