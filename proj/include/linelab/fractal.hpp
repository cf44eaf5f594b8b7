#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace linelab::fractal {

// Similarity ratio of the two-branch Cantor set with dimension alpha:
// r = 2^(-1/alpha), so that log 2 / log(1/r) = alpha. Domain (0,1].
double cantor_ratio(double alpha);

// Two-branch self-similar Cantor set: each interval [a, a+L] is replaced by
// [a, a+rL] and [a+L-rL, a+L]. Endpoints are finite sums of (1-r)*r^j terms,
// so generation endpoints are exact in double precision arithmetic built the
// same way.
class CantorSet {
public:
    // Construct from a target dimension; ratio = cantor_ratio(alpha).
    CantorSet(double alpha, int depth);

    // Construct from the ratio directly (r in (0, 1/2]).
    static CantorSet from_ratio(double ratio, int depth);

    double ratio() const { return ratio_; }
    int depth() const { return depth_; }
    double alpha() const { return alpha_; }

    // The 2^k closed intervals of generation k (k <= depth), in left-to-right
    // order. Each has length ratio^k.
    std::vector<std::pair<double, double>> intervals(int generation) const;

    struct Gap {
        double lo = 0.0;       // open interval (lo, hi)
        double hi = 0.0;
        double g_value = 0.0;  // constant staircase value on the gap
        int generation = 0;    // 1-based; generation k contributes 2^(k-1) gaps
    };

    // All gaps up to and including max_generation, ordered by generation then
    // position. Empty when ratio == 1/2 (the construction has no gaps).
    std::vector<Gap> gaps(int max_generation) const;

    // Inverse CDF of the uniform measure on the set: maps omega in [0,1] to a
    // point of the depth-truncated set via the binary digits of omega.
    double point_from_quantile(double omega) const;

private:
    CantorSet(double alpha, double ratio, int depth);

    double ratio_;
    int depth_;
    double alpha_;
};

// Devil's staircase g (CDF of the uniform Cantor measure) and its integral
// f(x) = int_0^x g. Both are evaluated by the self-similar recursion
//   g(x) = g(x/r)/2 on [0,r],  g = 1/2 on [r,1-r],  g(x) = 1/2 + g((x-1+r)/r)/2
// truncated at the set's depth with a linear closure, which keeps g exactly
// monotone, symmetric (g(x)+g(1-x)=1) and constant on every represented gap.
// Absolute truncation error of both eval() and integral() is <= 2^-depth.
class CantorStaircase {
public:
    explicit CantorStaircase(CantorSet set) : set_(std::move(set)) {}

    const CantorSet& set() const { return set_; }

    double eval(double x) const;      // g(x), x in [0,1]
    double integral(double x) const;  // f(x), x in [0,1]

    double error_bound() const;       // 2^-depth

private:
    double integral_rec(double t, int k) const;

    CantorSet set_;
};

// |g(x)-g(y)| / |x-y|^alpha for one pair.
double hoelder_ratio(const CantorStaircase& s, double x, double y);

// Empirical Hoelder constant: max of hoelder_ratio over `pair_count` random
// pairs plus the deterministic endpoint pair (0,1). Pairs closer than r^depth
// are below the truncation resolution and skipped. Deterministic given seed.
double hoelder_ratio_scan(const CantorStaircase& s, long pair_count,
                          std::uint64_t seed);

} // namespace linelab::fractal
