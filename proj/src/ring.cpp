#include "zscheme/ring.hpp"

#include <set>
#include <sstream>

#include "zscheme/error.hpp"

namespace zscheme {

WeightedRing::WeightedRing(std::vector<std::string> vars, std::vector<int> weights,
                           CoeffField field)
    : vars_(std::move(vars)), weights_(std::move(weights)), field_(field) {}

RingPtr WeightedRing::make(std::vector<std::string> vars, std::vector<int> weights,
                           CoeffField field) {
    if (vars.size() != weights.size())
        throw Error(Errc::BadInput, "variable/weight count mismatch");
    std::set<std::string> seen;
    for (std::size_t i = 0; i < vars.size(); ++i) {
        if (vars[i].empty()) throw Error(Errc::BadInput, "empty variable name");
        if (!seen.insert(vars[i]).second)
            throw Error(Errc::BadInput, "duplicate variable name '" + vars[i] + "'");
        if (weights[i] <= 0 || weights[i] % 2 != 0)
            throw Error(Errc::BadInput, "weight of '" + vars[i] + "' must be a positive even integer");
    }
    auto ring = std::shared_ptr<WeightedRing>(
        new WeightedRing(std::move(vars), std::move(weights), field));
    for (std::size_t i = 0; i < ring->vars_.size(); ++i) {
        if (ring->vars_[i] == "v") {
            if (ring->weights_[i] != 2)
                throw Error(Errc::BadInput, "the distinguished variable v must have weight 2");
            if (field == CoeffField::RationalFunctionsInV)
                throw Error(Errc::BadInput, "v cannot be both a variable and a coefficient parameter");
            ring->v_index_ = static_cast<int>(i);
        }
    }
    return ring;
}

int WeightedRing::var_index(const std::string& name) const {
    for (std::size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i] == name) return static_cast<int>(i);
    return -1;
}

RingPtr WeightedRing::extended_with_v() const {
    if (has_v()) throw Error(Errc::BadInput, "ring already contains v");
    std::vector<std::string> vars = vars_;
    std::vector<int> weights = weights_;
    vars.push_back("v");
    weights.push_back(2);
    return make(std::move(vars), std::move(weights), field_);
}

RingPtr WeightedRing::param_field_ring() const {
    if (!has_v()) throw Error(Errc::BadInput, "ring has no v to move into the coefficient field");
    std::vector<std::string> vars;
    std::vector<int> weights;
    for (int i = 0; i < nvars(); ++i) {
        if (i == v_index_) continue;
        vars.push_back(vars_[static_cast<std::size_t>(i)]);
        weights.push_back(weights_[static_cast<std::size_t>(i)]);
    }
    return make(std::move(vars), std::move(weights), CoeffField::RationalFunctionsInV);
}

std::string WeightedRing::describe() const {
    std::ostringstream os;
    os << (field_ == CoeffField::Rationals ? "Q[" : "Q(v)[");
    for (int i = 0; i < nvars(); ++i) {
        if (i) os << ", ";
        os << vars_[static_cast<std::size_t>(i)] << ":" << weights_[static_cast<std::size_t>(i)];
    }
    os << "]";
    return os.str();
}

std::string Monomial::str(const WeightedRing& r) const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (!e[i]) continue;
        if (!first) os << "*";
        first = false;
        os << r.vars()[i];
        if (e[i] > 1) os << "^" << e[i];
    }
    if (first) os << "1";
    return os.str();
}

bool grevlex_less(const Monomial& a, const Monomial& b, const WeightedRing& ring) {
    const long long da = a.weighted_degree(ring);
    const long long db = b.weighted_degree(ring);
    if (da != db) return da < db;
    for (std::size_t i = a.e.size(); i-- > 0;) {
        const int32_t d = a.e[i] - b.e[i];
        if (d) return d > 0;
    }
    return false;
}

} // namespace zscheme
