#include "gsphere/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace gsphere {

namespace {

struct Rule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

Rule compute_rule(int n) {
    Rule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    for (int i = 0; i < n; ++i) {
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            // Legendre recurrence for P_n(x) and P'_n(x).
            double p0 = 1.0, p1 = x;
            for (int j = 2; j <= n; ++j) {
                double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        rule.nodes[static_cast<std::size_t>(i)] = x;
        rule.weights[static_cast<std::size_t>(i)] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
    return rule;
}

const Rule& rule_for(int n) {
    static const Rule r32 = compute_rule(32);
    static const Rule r64 = compute_rule(64);
    if (n == 32) return r32;
    if (n == 64) return r64;
    throw std::invalid_argument("gl rule: only 32 and 64 nodes are provided");
}

template <typename T>
T panel_value(const std::function<T(double)>& f, double lo, double hi, int n) {
    const Rule& rule = rule_for(n);
    double mid = 0.5 * (lo + hi), half = 0.5 * (hi - lo);
    T acc{};
    for (int i = 0; i < n; ++i)
        acc += rule.weights[static_cast<std::size_t>(i)] *
               f(mid + half * rule.nodes[static_cast<std::size_t>(i)]);
    return half * acc;
}

std::vector<double> panel_edges(double a, double b,
                                const std::vector<double>& breakpoints,
                                double max_frequency) {
    std::vector<double> edges{a};
    for (double x : breakpoints)
        if (x > a && x < b) edges.push_back(x);
    edges.push_back(b);
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

    double max_width = max_frequency > 0.0
                           ? 8.0 * std::numbers::pi / max_frequency
                           : std::numeric_limits<double>::infinity();
    std::vector<double> refined{edges.front()};
    for (std::size_t i = 1; i < edges.size(); ++i) {
        double lo = edges[i - 1], hi = edges[i];
        int pieces = std::max(1, static_cast<int>(std::ceil((hi - lo) / max_width)));
        for (int p = 1; p <= pieces; ++p)
            refined.push_back(lo + (hi - lo) * p / pieces);
    }
    return refined;
}

template <typename T, typename R>
R integrate_impl(const std::function<T(double)>& f, double a, double b,
                 const std::vector<double>& breakpoints, double max_frequency) {
    if (!(b > a)) throw std::invalid_argument("integrate_panels: requires b > a");
    std::vector<double> edges = panel_edges(a, b, breakpoints, max_frequency);
    R result{};
    for (std::size_t i = 1; i < edges.size(); ++i) {
        T coarse = panel_value(f, edges[i - 1], edges[i], 32);
        T fine = panel_value(f, edges[i - 1], edges[i], 64);
        result.value += fine;
        result.error += std::abs(fine - coarse);
    }
    return result;
}

}  // namespace

const std::vector<double>& gl_nodes(int n) { return rule_for(n).nodes; }
const std::vector<double>& gl_weights(int n) { return rule_for(n).weights; }

QuadratureResult integrate_panels(const std::function<double(double)>& f,
                                  double a, double b,
                                  const std::vector<double>& breakpoints,
                                  double max_frequency) {
    return integrate_impl<double, QuadratureResult>(f, a, b, breakpoints,
                                                    max_frequency);
}

ComplexQuadratureResult integrate_panels_complex(
    const std::function<std::complex<double>(double)>& f, double a, double b,
    const std::vector<double>& breakpoints, double max_frequency) {
    return integrate_impl<std::complex<double>, ComplexQuadratureResult>(
        f, a, b, breakpoints, max_frequency);
}

}  // namespace gsphere
