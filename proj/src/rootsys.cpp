#include "zscheme/rootsys.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace zscheme {

std::vector<int> Root::simple_coefficients(int rank) const {
    std::vector<int> c(static_cast<std::size_t>(rank), 0);
    const int lo = std::min(i, j), hi = std::max(i, j);
    const int sign = i < j ? 1 : -1;
    for (int k = lo; k < hi; ++k) c[static_cast<std::size_t>(k - 1)] = sign;
    return c;
}

std::string Root::str() const {
    const int lo = std::min(i, j), hi = std::max(i, j);
    const bool neg = i > j;
    std::ostringstream os;
    for (int k = lo; k < hi; ++k) {
        if (neg)
            os << "-a" << k;
        else
            os << (k == lo ? "" : "+") << "a" << k;
    }
    return os.str();
}

Root Root::parse(const std::string& text, int rank) {
    // sign? 'a' idx (sign 'a' idx)*, all signs equal, consecutive support.
    std::vector<int> coeff(static_cast<std::size_t>(rank), 0);
    std::size_t p = 0;
    auto skip_ws = [&] { while (p < text.size() && std::isspace(static_cast<unsigned char>(text[p]))) ++p; };
    int sign = 1;
    bool first = true;
    for (;;) {
        skip_ws();
        if (p == text.size()) break;
        int s = 1;
        if (text[p] == '+' || text[p] == '-') {
            s = text[p] == '-' ? -1 : 1;
            ++p;
            skip_ws();
        } else if (!first) {
            throw Error(Errc::NotARoot, "expected '+' or '-' in root '" + text + "'");
        }
        if (p == text.size() || text[p] != 'a')
            throw Error(Errc::NotARoot, "expected a simple root like a1 in '" + text + "'");
        ++p;
        std::size_t start = p;
        while (p < text.size() && std::isdigit(static_cast<unsigned char>(text[p]))) ++p;
        if (start == p) throw Error(Errc::NotARoot, "missing simple-root index in '" + text + "'");
        const int k = std::stoi(text.substr(start, p - start));
        if (k < 1 || k > rank)
            throw Error(Errc::NotARoot, "simple root a" + std::to_string(k) +
                                            " out of range for rank " + std::to_string(rank));
        if (first)
            sign = s;
        else if (s != sign)
            throw Error(Errc::NotARoot, "mixed signs in root '" + text + "'");
        if (coeff[static_cast<std::size_t>(k - 1)] != 0)
            throw Error(Errc::NotARoot, "repeated simple root in '" + text + "'");
        coeff[static_cast<std::size_t>(k - 1)] = sign;
        first = false;
    }
    if (first) throw Error(Errc::NotARoot, "empty root string");
    int lo = 0, hi = 0;
    for (int k = 1; k <= rank; ++k) {
        if (coeff[static_cast<std::size_t>(k - 1)] == 0) continue;
        if (lo == 0) lo = k;
        hi = k;
    }
    for (int k = lo; k <= hi; ++k)
        if (coeff[static_cast<std::size_t>(k - 1)] == 0)
            throw Error(Errc::NotARoot, "support of '" + text + "' is not consecutive");
    return sign > 0 ? Root{lo, hi + 1} : Root{hi + 1, lo};
}

bool RootSystemA::is_root(const Root& r) const {
    return r.i >= 1 && r.j >= 1 && r.i <= rank + 1 && r.j <= rank + 1 && r.i != r.j;
}

int RootSystemA::positive_index(const Root& r) const {
    for (std::size_t k = 0; k < positive_roots.size(); ++k)
        if (positive_roots[k] == r) return static_cast<int>(k);
    return -1;
}

std::vector<Root> RootSystemA::negative_roots() const {
    std::vector<Root> out;
    out.reserve(positive_roots.size());
    for (const Root& r : positive_roots) out.push_back(r.negated());
    return out;
}

RootSystemA build_type_a(int rank) {
    if (rank < 1) throw Error(Errc::BadInput, "rank must be >= 1");
    RootSystemA rs;
    rs.rank = rank;
    for (int h = 1; h <= rank; ++h)
        for (int i = 1; i + h <= rank + 1; ++i) rs.positive_roots.push_back(Root{i, i + h});
    return rs;
}

WeylElement WeylElement::identity(int rank) {
    WeylElement w;
    w.perm.resize(static_cast<std::size_t>(rank) + 1);
    std::iota(w.perm.begin(), w.perm.end(), 1);
    return w;
}

WeylElement WeylElement::simple_reflection(int rank, int k) {
    if (k < 1 || k > rank) throw Error(Errc::BadInput, "no such simple reflection");
    WeylElement w = identity(rank);
    std::swap(w.perm[static_cast<std::size_t>(k - 1)], w.perm[static_cast<std::size_t>(k)]);
    return w;
}

WeylElement WeylElement::longest(int rank) {
    WeylElement w = identity(rank);
    std::reverse(w.perm.begin(), w.perm.end());
    return w;
}

WeylElement WeylElement::inverse() const {
    WeylElement w;
    w.perm.assign(perm.size(), 0);
    for (std::size_t k = 0; k < perm.size(); ++k)
        w.perm[static_cast<std::size_t>(perm[k] - 1)] = static_cast<int>(k) + 1;
    return w;
}

WeylElement WeylElement::operator*(const WeylElement& o) const {
    WeylElement w;
    w.perm.reserve(perm.size());
    for (std::size_t k = 0; k < perm.size(); ++k)
        w.perm.push_back(perm[static_cast<std::size_t>(o.perm[k] - 1)]);
    return w;
}

std::string WeylElement::str() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t k = 0; k < perm.size(); ++k) {
        if (k) os << " ";
        os << perm[k];
    }
    os << "]";
    return os.str();
}

std::vector<WeylElement> enumerate_weyl(int rank) {
    WeylElement w = WeylElement::identity(rank);
    std::vector<WeylElement> out;
    do {
        out.push_back(w);
    } while (std::next_permutation(w.perm.begin(), w.perm.end()));
    return out;
}

Root act(const WeylElement& w, const Root& alpha, int rank) {
    if (alpha.i < 1 || alpha.j < 1 || alpha.i > rank + 1 || alpha.j > rank + 1 || alpha.i == alpha.j)
        throw Error(Errc::NotARoot, "not a root of A_" + std::to_string(rank));
    return Root{w.apply(alpha.i), w.apply(alpha.j)};
}

bool HessenbergSpace::contains(const Root& r) const {
    return std::find(omega.begin(), omega.end(), r) != omega.end();
}

std::string HessenbergSpace::str() const {
    if (omega.empty()) return "{}";
    std::ostringstream os;
    os << "{";
    for (std::size_t k = 0; k < omega.size(); ++k) {
        if (k) os << ", ";
        os << omega[k].str();
    }
    os << "}";
    return os.str();
}

HessenbergSpace make_hessenberg_space(int rank, std::vector<Root> omega) {
    const RootSystemA rs = build_type_a(rank);
    std::sort(omega.begin(), omega.end());
    omega.erase(std::unique(omega.begin(), omega.end(),
                            [](const Root& a, const Root& b) { return a == b; }),
                omega.end());
    for (const Root& r : omega) {
        if (!rs.is_root(r) || r.positive())
            throw Error(Errc::NotARoot, "Omega must consist of negative roots; got " + r.str());
    }
    return HessenbergSpace{rank, std::move(omega)};
}

HessenbergValidation validate_hessenberg(const HessenbergSpace& h) {
    HessenbergValidation res;
    for (const Root& alpha : h.omega) {
        for (int k = 1; k <= h.rank; ++k) {
            // alpha + a_k, for alpha = eps_i - eps_j (i > j), a_k = eps_k - eps_{k+1}.
            std::optional<Root> sum;
            if (alpha.j == k && alpha.i > k + 1) sum = Root{alpha.i, k + 1};
            if (alpha.i == k + 1 && k > alpha.j) sum = Root{k, alpha.j};
            if (sum && !h.contains(*sum)) {
                res.ok = false;
                res.alpha = alpha;
                res.simple_index = k;
                res.missing = *sum;
                return res;
            }
        }
    }
    return res;
}

HessenbergSpace peterson_omega(int rank) {
    std::vector<Root> omega;
    for (int k = 1; k <= rank; ++k) omega.push_back(Root{k + 1, k});
    return make_hessenberg_space(rank, std::move(omega));
}

HessenbergSpace omega_from_height_condition(int rank) {
    std::vector<Root> omega;
    for (const Root& r : build_type_a(rank).positive_roots)
        if (r.height() >= 2) omega.push_back(r.negated());
    return HessenbergSpace{rank, std::move(omega)}; // deliberately unvalidated
}

std::vector<WeylElement> hessenberg_fixed_points(const HessenbergSpace& h) {
    const HessenbergValidation val = validate_hessenberg(h);
    if (!val.ok)
        throw Error(Errc::InvalidHessenberg,
                    "Omega is not B-closed: " + val.alpha->str() + " + a" +
                        std::to_string(val.simple_index) + " = " + val.missing->str() +
                        " is missing");
    std::vector<WeylElement> out;
    for (const WeylElement& w : enumerate_weyl(h.rank)) {
        const WeylElement winv = w.inverse();
        bool fixed = true;
        for (int k = 1; k <= h.rank && fixed; ++k) {
            const Root image = act(winv, Root{k, k + 1}, h.rank);
            if (!image.positive() && !h.contains(image)) fixed = false;
        }
        if (fixed) out.push_back(w);
    }
    return out;
}

std::vector<HessenbergSpace> enumerate_valid_omegas(int rank) {
    const RootSystemA rs = build_type_a(rank);
    const std::vector<Root> neg = rs.negative_roots();
    const std::size_t n = neg.size();
    std::vector<HessenbergSpace> out;
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
        std::vector<Root> omega;
        for (std::size_t b = 0; b < n; ++b)
            if (mask & (std::size_t{1} << b)) omega.push_back(neg[b]);
        HessenbergSpace h = make_hessenberg_space(rank, std::move(omega));
        if (validate_hessenberg(h).ok) out.push_back(std::move(h));
    }
    return out;
}

HessenbergSpace parse_omega(const std::string& text, int rank) {
    std::vector<Root> omega;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t comma = text.find(',', start);
        if (comma == std::string::npos) comma = text.size();
        const std::string tok = text.substr(start, comma - start);
        if (tok.find_first_not_of(" \t") != std::string::npos)
            omega.push_back(Root::parse(tok, rank));
        start = comma + 1;
        if (comma == text.size()) break;
    }
    return make_hessenberg_space(rank, std::move(omega));
}

} // namespace zscheme
