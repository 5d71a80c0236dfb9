#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "zscheme/rational.hpp"
#include "zscheme/ring.hpp"

namespace zscheme {

struct VerifyOptions {
    /// Scaling one canonical generator by c != 1 models a normalization bug;
    /// the push-forward suite must then fail (the deliberate guard).
    Rational perturb_scale{1};
    double timeout_seconds = 0; // 0 = unlimited; checked between items
};

struct VerifyItem {
    int criterion = 0; // 1..8
    std::string suite; // pn | flag | hessenberg | pushforward | properties
    std::string name;
    bool pass = false;
    std::string detail;
    double ms = 0;
};

/// suite: pn | flag | hessenberg | pushforward | all.
std::vector<VerifyItem> run_verify(const std::string& suite, const VerifyOptions& opts = {});

bool all_passed(const std::vector<VerifyItem>& items);

/// Deterministic generator for property tests.
struct Rng {
    std::uint64_t state;
    explicit Rng(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() {
        state = state * 6364136223846793005ULL + 1442695040888963407ULL;
        return state >> 33;
    }
    long range(long lo, long hi) { // inclusive
        return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }
};

/// All monomials of the given weighted degree.
std::vector<Monomial> monomials_of_weighted_degree(const RingPtr& ring, long long degree);

} // namespace zscheme
