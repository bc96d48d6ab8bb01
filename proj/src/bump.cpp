#include "gsphere/bump.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "gsphere/quadrature.hpp"

namespace gsphere {

namespace {

// Scale-invariant base bump: exp(-(b-a)^2 / ((x-a)(b-x))), value e^{-4} at the
// midpoint regardless of width (the naive exp(-1/((x-a)(b-x))) underflows on
// narrow supports such as lattice-radius gaps).
double base_bump(double a, double b, double x) {
    if (x <= a || x >= b) return 0.0;
    double w = b - a;
    return std::exp(-w * w / ((x - a) * (b - x)));
}

// Panel seams graded toward the component endpoints, where the bump's
// boundary layer defeats a single Gauss rule.
constexpr double kSeamFractions[] = {0.02, 0.07, 0.15, 0.3, 0.5,
                                     0.7,  0.85, 0.93, 0.98};

std::vector<double> component_seams(const BumpFunction::Component& c) {
    std::vector<double> seams;
    for (double f : kSeamFractions) seams.push_back(c.a + f * (c.b - c.a));
    return seams;
}

double component_moment(double a0, const BumpFunction::Component& c, int m) {
    auto f = [&](double x) {
        return base_bump(c.a, c.b, x) * std::pow(x - a0, m);
    };
    return integrate_panels(f, c.a, c.b, component_seams(c)).value;
}

// Gaussian elimination with partial pivoting; returns false on a singular
// system.
bool solve_dense(std::vector<std::vector<double>>& m, std::vector<double>& rhs) {
    const std::size_t n = rhs.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        for (std::size_t r = col + 1; r < n; ++r)
            if (std::abs(m[r][col]) > std::abs(m[piv][col])) piv = r;
        if (std::abs(m[piv][col]) < 1e-300) return false;
        std::swap(m[col], m[piv]);
        std::swap(rhs[col], rhs[piv]);
        for (std::size_t r = col + 1; r < n; ++r) {
            double f = m[r][col] / m[col][col];
            for (std::size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
            rhs[r] -= f * rhs[col];
        }
    }
    for (std::size_t col = n; col-- > 0;) {
        for (std::size_t c = col + 1; c < n; ++c)
            rhs[col] -= m[col][c] * rhs[c];
        rhs[col] /= m[col][col];
    }
    return true;
}

void fill_norms(BumpFunction& bump) {
    const int samples = 4000;
    double h = (bump.b - bump.a) / samples;
    std::vector<double> v(samples + 1);
    for (int i = 0; i <= samples; ++i)
        v[static_cast<std::size_t>(i)] = bump(bump.a + i * h);
    bump.norm_sup = bump.norm_d1 = bump.norm_d2 = 0.0;
    for (int i = 1; i < samples; ++i) {
        std::size_t u = static_cast<std::size_t>(i);
        bump.norm_sup = std::max(bump.norm_sup, std::abs(v[u]));
        bump.norm_d1 = std::max(bump.norm_d1, std::abs(v[u + 1] - v[u - 1]) / (2 * h));
        bump.norm_d2 = std::max(bump.norm_d2,
                                std::abs(v[u + 1] - 2 * v[u] + v[u - 1]) / (h * h));
    }
}

}  // namespace

double BumpFunction::operator()(double sigma) const {
    double v = 0.0;
    for (const Component& c : components)
        v += c.coeff * base_bump(c.a, c.b, sigma);
    return v;
}

BumpFunction BumpFunction::rescaled(double new_a, double new_b) const {
    if (!(new_b > new_a)) throw std::invalid_argument("rescaled: requires new_b > new_a");
    double s = (b - a) / (new_b - new_a);
    BumpFunction out;
    out.a = new_a;
    out.b = new_b;
    out.killed_moments = killed_moments;
    for (const Component& c : components)
        out.components.push_back(
            {new_a + (c.a - a) / s, new_a + (c.b - a) / s, c.coeff * s});
    out.residual_moments.reserve(residual_moments.size());
    double sm = 1.0;
    for (double r : residual_moments) {
        sm /= s;
        out.residual_moments.push_back(r * sm);
    }
    out.norm_sup = norm_sup * s;
    out.norm_d1 = norm_d1 * s * s;
    out.norm_d2 = norm_d2 * s * s * s;
    return out;
}

std::vector<double> BumpFunction::breakpoints() const {
    std::vector<double> pts;
    for (const Component& c : components) {
        pts.push_back(c.a);
        pts.push_back(c.b);
        for (double s : component_seams(c)) pts.push_back(s);
    }
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return pts;
}

BumpFunction make_bump(double a, double b, const std::vector<int>& moments_to_kill) {
    if (!(b > a) || a < 0.0)
        throw std::invalid_argument("make_bump: requires b > a >= 0");
    for (int m : moments_to_kill)
        if (m < 1 || m > 4)
            throw std::invalid_argument("make_bump: moment orders must lie in {1..4}");

    BumpFunction bump;
    bump.a = a;
    bump.b = b;
    bump.killed_moments = moments_to_kill;
    std::sort(bump.killed_moments.begin(), bump.killed_moments.end());

    const std::size_t nc = moments_to_kill.size() + 1;
    for (int attempt = 0; attempt < 6; ++attempt) {
        bump.components.clear();
        if (nc == 1) {
            bump.components.push_back({a, b, 1.0});
        } else {
            // Overlapping windows of width 2(b-a)/(nc+1), shrunk slightly on
            // each retry to move the moment system away from degeneracy.
            double w = (b - a) * 2.0 / (nc + 1) * (1.0 - 0.04 * attempt);
            double g = (b - a - w) / (nc - 1);
            for (std::size_t i = 0; i < nc; ++i)
                bump.components.push_back({a + i * g, a + i * g + w, 1.0});
        }

        std::vector<int> orders{0};
        orders.insert(orders.end(), bump.killed_moments.begin(),
                      bump.killed_moments.end());
        std::vector<std::vector<double>> mat(nc, std::vector<double>(nc));
        std::vector<double> rhs(nc, 0.0);
        rhs[0] = 1.0;
        for (std::size_t r = 0; r < nc; ++r)
            for (std::size_t c = 0; c < nc; ++c)
                mat[r][c] = component_moment(a, bump.components[c], orders[r]);
        if (!solve_dense(mat, rhs)) continue;
        for (std::size_t c = 0; c < nc; ++c) bump.components[c].coeff = rhs[c];

        bump.residual_moments.assign(4, 0.0);
        bool ok = true;
        for (int m = 1; m <= 4; ++m) {
            double v = 0.0;
            for (const auto& c : bump.components)
                v += c.coeff * component_moment(a, c, m);
            bump.residual_moments[static_cast<std::size_t>(m - 1)] = std::abs(v);
            bool want_zero = std::find(bump.killed_moments.begin(),
                                       bump.killed_moments.end(),
                                       m) != bump.killed_moments.end();
            if (want_zero && std::abs(v) > 1e-12 * std::pow(b - a, m)) ok = false;
        }
        if (!ok) continue;
        fill_norms(bump);
        return bump;
    }
    throw std::runtime_error("make_bump: moment system remained singular after retries");
}

}  // namespace gsphere
