#include "linelab/fractal.hpp"

#include <cmath>
#include <random>
#include <stdexcept>
#include <string>

namespace linelab::fractal {

double cantor_ratio(double alpha) {
    if (!(alpha > 0.0) || !(alpha <= 1.0))
        throw std::domain_error("cantor_ratio: alpha must be in (0,1], got " +
                                std::to_string(alpha));
    return std::exp2(-1.0 / alpha);
}

CantorSet::CantorSet(double alpha, double ratio, int depth)
    : ratio_(ratio), depth_(depth), alpha_(alpha) {
    if (depth < 1) throw std::invalid_argument("CantorSet: depth must be >= 1");
    if (!(ratio > 0.0) || !(ratio <= 0.5))
        throw std::invalid_argument("CantorSet: ratio must be in (0, 1/2]");
}

CantorSet::CantorSet(double alpha, int depth)
    : CantorSet(alpha, cantor_ratio(alpha), depth) {}

CantorSet CantorSet::from_ratio(double ratio, int depth) {
    if (!(ratio > 0.0) || !(ratio <= 0.5))
        throw std::invalid_argument("CantorSet: ratio must be in (0, 1/2]");
    return CantorSet(std::log(2.0) / std::log(1.0 / ratio), ratio, depth);
}

std::vector<std::pair<double, double>> CantorSet::intervals(int generation) const {
    if (generation < 0 || generation > depth_)
        throw std::invalid_argument("CantorSet::intervals: generation out of range");
    std::vector<std::pair<double, double>> out;
    out.reserve(std::size_t{1} << generation);
    double len = std::pow(ratio_, generation);
    // Left endpoints are sums over chosen branches of (1-r)*r^j; enumerate in
    // lexicographic (left-to-right) order.
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << generation); ++bits) {
        double a = 0.0;
        double scale = 1.0;
        for (int j = generation - 1; j >= 0; --j) {
            if ((bits >> j) & 1u) a += scale * (1.0 - ratio_);
            scale *= ratio_;
        }
        out.emplace_back(a, a + len);
    }
    return out;
}

std::vector<CantorSet::Gap> CantorSet::gaps(int max_generation) const {
    if (max_generation < 1 || max_generation > depth_)
        throw std::invalid_argument("CantorSet::gaps: generation out of range");
    std::vector<Gap> out;
    if (1.0 - 2.0 * ratio_ <= 0.0) return out;  // ratio 1/2: no gaps
    for (int k = 1; k <= max_generation; ++k) {
        auto parents = intervals(k - 1);
        double plen = std::pow(ratio_, k - 1);
        double step = std::exp2(-(k - 1));  // g-increment across a parent
        for (std::size_t i = 0; i < parents.size(); ++i) {
            Gap gap;
            gap.lo = parents[i].first + ratio_ * plen;
            gap.hi = parents[i].second - ratio_ * plen;
            gap.g_value = static_cast<double>(i) * step + 0.5 * step;
            gap.generation = k;
            out.push_back(gap);
        }
    }
    return out;
}

double CantorSet::point_from_quantile(double omega) const {
    if (!(omega >= 0.0) || !(omega <= 1.0))
        throw std::domain_error("point_from_quantile: omega must be in [0,1]");
    double x = 0.0;
    double scale = 1.0;
    double w = omega;
    for (int k = 0; k < depth_; ++k) {
        w *= 2.0;
        if (w >= 1.0) {
            x += scale * (1.0 - ratio_);
            w -= 1.0;
        }
        scale *= ratio_;
    }
    return x;
}

double CantorStaircase::eval(double x) const {
    if (!(x >= 0.0) || !(x <= 1.0))
        throw std::domain_error("CantorStaircase::eval: x must be in [0,1], got " +
                                std::to_string(x));
    const double r = set_.ratio();
    double v = 0.0;   // accumulated value
    double s = 1.0;   // remaining scale, 2^-k after k levels
    double t = x;
    for (int k = 0; k < set_.depth(); ++k) {
        if (t <= 0.0) return v;
        if (t >= 1.0) return v + s;
        if (t < r) {
            t /= r;
            s *= 0.5;
        } else if (t <= 1.0 - r) {
            return v + 0.5 * s;  // central gap: exact dyadic value
        } else {
            t = (t - (1.0 - r)) / r;
            v += 0.5 * s;
            s *= 0.5;
        }
    }
    return v + s * t;  // linear closure at the truncation depth
}

double CantorStaircase::integral_rec(double t, int k) const {
    const double r = set_.ratio();
    if (t <= 0.0) return 0.0;
    if (t >= 1.0) return 0.5;
    if (k == 0) return 0.5 * t * t;  // integral of the linear closure
    if (t < r) return 0.5 * r * integral_rec(t / r, k - 1);
    if (t <= 1.0 - r) return 0.25 * r + 0.5 * (t - r);
    // I(1-r) + gap-free right-branch contribution
    return 0.25 * r + 0.5 * (1.0 - 2.0 * r) + 0.5 * (t - (1.0 - r)) +
           0.5 * r * integral_rec((t - (1.0 - r)) / r, k - 1);
}

double CantorStaircase::integral(double x) const {
    if (!(x >= 0.0) || !(x <= 1.0))
        throw std::domain_error("CantorStaircase::integral: x must be in [0,1], got " +
                                std::to_string(x));
    return integral_rec(x, set_.depth());
}

double CantorStaircase::error_bound() const {
    return std::exp2(-set_.depth());
}

double hoelder_ratio(const CantorStaircase& s, double x, double y) {
    if (x == y) throw std::invalid_argument("hoelder_ratio: x and y must differ");
    double num = std::fabs(s.eval(x) - s.eval(y));
    return num / std::pow(std::fabs(x - y), s.set().alpha());
}

double hoelder_ratio_scan(const CantorStaircase& s, long pair_count,
                          std::uint64_t seed) {
    if (pair_count < 1)
        throw std::invalid_argument("hoelder_ratio_scan: pair_count must be >= 1");
    const double cutoff = std::pow(s.set().ratio(), s.set().depth());
    double best = hoelder_ratio(s, 0.0, 1.0);  // endpoint pair always included
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    for (long i = 0; i < pair_count; ++i) {
        double x = uni(rng);
        double y = uni(rng);
        if (std::fabs(x - y) < cutoff) continue;  // below truncation resolution
        best = std::max(best, hoelder_ratio(s, x, y));
    }
    return best;
}

} // namespace linelab::fractal
