#include "zscheme/regvariety.hpp"

#include <sstream>

#include "zscheme/groebner.hpp"

namespace zscheme {

std::string RegularModel::provenance_str() const {
    switch (provenance) {
        case Provenance::ProjectiveSpace: return "pn:" + std::to_string(param);
        case Provenance::FlagA: return "flag:" + std::to_string(param);
        case Provenance::Custom: return "custom";
    }
    return "custom";
}

RegularModel projective_space_model(int n) {
    if (n < 1) throw Error(Errc::BadInput, "projective space dimension must be >= 1");
    std::vector<std::string> vars;
    std::vector<int> weights;
    for (int j = 1; j <= n; ++j) {
        vars.push_back("x" + std::to_string(j));
        weights.push_back(2 * j);
    }
    RingPtr ring = WeightedRing::make(std::move(vars), std::move(weights));
    RegularModel m;
    m.ring = ring;
    m.provenance = Provenance::ProjectiveSpace;
    m.param = n;
    for (int j = 1; j <= n; ++j) {
        const PolyQ x1 = PolyQ::variable(ring, 0);
        const PolyQ xj = PolyQ::variable(ring, j - 1);
        if (j < n)
            m.v_images.push_back(PolyQ::variable(ring, j) - x1 * xj);
        else
            m.v_images.push_back(-(x1 * xj));
    }
    return m;
}

namespace {

using PolyMatrix = std::vector<std::vector<PolyQ>>;

PolyMatrix zero_matrix(const RingPtr& ring, int n) {
    return PolyMatrix(static_cast<std::size_t>(n),
                      std::vector<PolyQ>(static_cast<std::size_t>(n), PolyQ::zero(ring)));
}

PolyMatrix mat_mul(const PolyMatrix& a, const PolyMatrix& b, const RingPtr& ring) {
    const std::size_t n = a.size();
    PolyMatrix c = zero_matrix(ring, static_cast<int>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            if (a[i][k].is_zero()) continue;
            for (std::size_t j = 0; j < n; ++j)
                if (!b[k][j].is_zero()) c[i][j] += a[i][k] * b[k][j];
        }
    return c;
}

} // namespace

RegularModel flag_model_a(int rank) {
    if (rank < 1) throw Error(Errc::BadInput, "rank must be >= 1");
    const RootSystemA rs = build_type_a(rank);
    const int n = rank + 1;

    // Coordinates u_ij aligned with the negated positive-root enumeration:
    // height 1 first (u21, u32, ...), then height 2, and so on.
    std::vector<std::string> vars;
    std::vector<int> weights;
    std::vector<std::pair<int, int>> entry; // (i, j) per coordinate, 1-based
    for (const Root& alpha : rs.positive_roots) {
        const int i = alpha.j, j = alpha.i; // negative root eps_i - eps_j, i > j
        vars.push_back("u" + std::to_string(i) + std::to_string(j));
        weights.push_back(2 * (i - j));
        entry.emplace_back(i, j);
    }
    RingPtr ring = WeightedRing::make(std::move(vars), std::move(weights));

    // u = 1 + N with N the strict lower triangle of coordinates.
    PolyMatrix u = zero_matrix(ring, n);
    PolyMatrix nmat = zero_matrix(ring, n);
    for (int i = 0; i < n; ++i) u[i][i] = PolyQ::constant(ring, Rational(1));
    for (std::size_t k = 0; k < entry.size(); ++k) {
        const auto [i, j] = entry[k];
        u[i - 1][j - 1] = PolyQ::variable(ring, static_cast<int>(k));
        nmat[i - 1][j - 1] = u[i - 1][j - 1];
    }
    // u^-1 = sum (-N)^k, exact since N is nilpotent.
    PolyMatrix uinv = zero_matrix(ring, n);
    for (int i = 0; i < n; ++i) uinv[i][i] = PolyQ::constant(ring, Rational(1));
    PolyMatrix power = nmat;
    int sign = -1;
    for (int k = 1; k < n; ++k) {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                uinv[i][j] += sign > 0 ? power[i][j] : -power[i][j];
        power = mat_mul(power, nmat, ring);
        sign = -sign;
    }

    PolyMatrix e = zero_matrix(ring, n);
    for (int k = 0; k + 1 < n; ++k) e[k][k + 1] = PolyQ::constant(ring, Rational(1));
    PolyMatrix h = zero_matrix(ring, n);
    for (int k = 0; k < n; ++k)
        h[k][k] = PolyQ::constant(ring, Rational(rank - 2 * k)); // alpha_j(h) = 2

    const PolyMatrix veu = mat_mul(mat_mul(uinv, e, ring), u, ring);
    PolyMatrix whu = mat_mul(mat_mul(uinv, h, ring), u, ring);
    for (int k = 0; k < n; ++k) whu[k][k] -= h[k][k];

    RegularModel m;
    m.ring = ring;
    m.provenance = Provenance::FlagA;
    m.param = rank;
    FlagModelData data;
    data.rank = rank;
    for (std::size_t k = 0; k < entry.size(); ++k) {
        const auto [i, j] = entry[k];
        data.v_alpha.push_back(veu[i - 1][j - 1]);
        data.w_alpha.push_back(whu[i - 1][j - 1]);
        // F_alpha|_{v=0} = 2 v_alpha and g_i|_{v=0} = -2 V(x_i) share one ideal;
        // fixing V(u_alpha) = -v_alpha keeps the two conventions aligned.
        m.v_images.push_back(-veu[i - 1][j - 1]);
    }
    m.flag = std::move(data);
    return m;
}

ModelCertificate validate_regular(const RegularModel& m) {
    ModelCertificate cert;
    cert.homogeneity_ok = true;
    if (static_cast<int>(m.v_images.size()) != m.ring->nvars()) {
        cert.homogeneity_ok = false;
        cert.issues.push_back("need one V(x_i) per coordinate");
        return cert;
    }
    for (int i = 0; i < m.ring->nvars(); ++i) {
        const DegreeInfo d = m.v_images[static_cast<std::size_t>(i)].weighted_degree();
        const long long want = m.ring->weight(i) + 2;
        if (d.kind == DegreeKind::Mixed) {
            cert.homogeneity_ok = false;
            cert.issues.push_back("NOT_HOMOGENEOUS: V(" + m.ring->var_name(i) + ")");
        } else if (d.kind == DegreeKind::Homogeneous && d.degree != want) {
            cert.homogeneity_ok = false;
            cert.issues.push_back("DEGREE_MISMATCH: V(" + m.ring->var_name(i) + ") has degree " +
                                  std::to_string(d.degree) + ", expected " + std::to_string(want));
        }
        // V(x_i) = 0 is homogeneous of every degree; the isolation check below
        // rejects it.
    }
    try {
        GroebnerBasis<Rational> gb = buchberger(m.v_images, MonomialOrder::grevlex(), m.ring);
        cert.dimension = static_cast<int>(standard_monomials(gb).size());
        cert.finite = true;
    } catch (const Error& e) {
        if (e.code() != Errc::NotZeroDimensional) throw;
        cert.finite = false;
        cert.issues.push_back("NOT_ISOLATED_ZERO: the common zero locus of the V(x_i) is positive-dimensional");
    }
    return cert;
}

RegularModel custom_model(RingPtr ring, std::vector<PolyQ> v_images) {
    if (ring->has_v())
        throw Error(Errc::BadInput, "model coordinates must not contain v");
    RegularModel m;
    m.ring = std::move(ring);
    m.v_images = std::move(v_images);
    m.provenance = Provenance::Custom;
    for (auto& p : m.v_images)
        if (*p.ring() != *m.ring) throw Error(Errc::RingMismatch, "V image in the wrong ring");
    const ModelCertificate cert = validate_regular(m);
    if (!cert.ok()) {
        std::ostringstream os;
        for (std::size_t i = 0; i < cert.issues.size(); ++i)
            os << (i ? "; " : "") << cert.issues[i];
        const std::string msg = os.str();
        if (msg.find("DEGREE_MISMATCH") != std::string::npos)
            throw Error(Errc::DegreeMismatch, msg);
        if (msg.find("NOT_HOMOGENEOUS") != std::string::npos)
            throw Error(Errc::NotHomogeneous, msg);
        throw Error(Errc::NotIsolatedZero, msg);
    }
    return m;
}

bool models_equal(const RegularModel& a, const RegularModel& b) {
    return *a.ring == *b.ring && a.v_images == b.v_images;
}

} // namespace zscheme
