#include "sml/oscillatory_quadrature.hpp"

#include <map>
#include <mutex>

namespace sml {

namespace {

GaussRule make_gauss_rule(int n) {
    // Newton iteration on the Legendre recurrence; standard construction.
    GaussRule rule;
    rule.nodes.resize(static_cast<std::size_t>(n));
    rule.weights.resize(static_cast<std::size_t>(n));
    const int half = (n + 1) / 2;
    for (int i = 0; i < half; ++i) {
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.nodes[static_cast<std::size_t>(i)] = -x;
        rule.nodes[static_cast<std::size_t>(n - 1 - i)] = x;
        rule.weights[static_cast<std::size_t>(i)] = w;
        rule.weights[static_cast<std::size_t>(n - 1 - i)] = w;
    }
    if (n % 2 == 1) rule.nodes[static_cast<std::size_t>(n / 2)] = 0.0;
    return rule;
}

} // namespace

const GaussRule& gauss_legendre(int n) {
    if (n < 1) throw DomainError("gauss_legendre: order must be >= 1");
    static std::map<int, GaussRule> cache;
    static std::mutex mutex;
    std::scoped_lock lock(mutex);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, make_gauss_rule(n)).first;
    return it->second;
}

RadialGrid RadialGrid::composite_gauss(std::span<const double> breakpoints, int nodes_per_panel) {
    if (breakpoints.size() < 2)
        throw DomainError("RadialGrid: need at least two breakpoints");
    const GaussRule& rule = gauss_legendre(nodes_per_panel);
    RadialGrid grid;
    grid.radii.reserve((breakpoints.size() - 1) * rule.nodes.size());
    grid.weights.reserve(grid.radii.capacity());
    for (std::size_t p = 0; p + 1 < breakpoints.size(); ++p) {
        const double lo = breakpoints[p];
        const double hi = breakpoints[p + 1];
        if (!(hi > lo)) throw DomainError("RadialGrid: breakpoints must be increasing");
        const double mid = 0.5 * (lo + hi);
        const double half = 0.5 * (hi - lo);
        for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
            grid.radii.push_back(mid + half * rule.nodes[i]);
            grid.weights.push_back(half * rule.weights[i]);
        }
    }
    grid.validate();
    return grid;
}

double RadialGrid::covered_length() const {
    double sum = 0.0;
    for (double w : weights) sum += w;
    return sum;
}

void RadialGrid::validate() const {
    if (radii.size() != weights.size() || radii.empty())
        throw DomainError("RadialGrid: radii/weights size mismatch");
    if (!(radii.front() >= 0.0))
        throw DomainError("RadialGrid: radii must be nonnegative");
    for (std::size_t i = 0; i + 1 < radii.size(); ++i)
        if (!(radii[i] < radii[i + 1]))
            throw DomainError("RadialGrid: radii must be strictly increasing");
    for (double w : weights)
        if (!(w > 0.0)) throw DomainError("RadialGrid: weights must be positive");
}

double unit_sphere_area(int n) {
    if (n < 1) throw DomainError("unit_sphere_area: dimension must be >= 1");
    return 2.0 * std::pow(std::numbers::pi, n / 2.0) / std::tgamma(n / 2.0);
}

double lp_norm_radial(std::span<const Complex> values, const RadialGrid& grid, double p, int n) {
    if (!(p >= 1.0)) throw DomainError("lp_norm_radial: p must be >= 1");
    if (n < 2) throw DomainError("lp_norm_radial: dimension must be >= 2");
    if (values.size() != grid.radii.size())
        throw DomainError("lp_norm_radial: profile/grid size mismatch");
    double acc = 0.0;
    for (std::size_t i = 0; i < values.size(); ++i) {
        const double r = grid.radii[i];
        acc += grid.weights[i] * std::pow(std::abs(values[i]), p) * std::pow(r, n - 1);
    }
    return std::pow(unit_sphere_area(n) * acc, 1.0 / p);
}

} // namespace sml
