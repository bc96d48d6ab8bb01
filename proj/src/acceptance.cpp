#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "gsphere/bump.hpp"
#include "gsphere/lattice_sums.hpp"
#include "gsphere/oscillatory.hpp"
#include "gsphere/quadruple.hpp"
#include "gsphere/reporting.hpp"
#include "gsphere/smeared.hpp"
#include "gsphere/step_calculus.hpp"
#include "gsphere/trig_poly.hpp"

// The ten acceptance criteria, shared by the `suite` subcommand and the
// acceptance test binary. Each criterion reports pass/fail and its worst
// observed margin (1 = tolerance unused, 0 = at the edge, negative = failed).

namespace gsphere {

namespace {

struct Check {
    bool pass = true;
    double margin = 1.0;
    std::ostringstream detail;

    // allowance-relative slack; records the worst case.
    void bounded(double gap, double allowance, const char* what) {
        double m = allowance > 0.0 ? (allowance - gap) / allowance
                                   : (gap == 0.0 ? 1.0 : -1.0);
        if (m < margin) margin = m;
        if (gap > allowance) {
            pass = false;
            detail << "[" << what << ": gap " << gap << " > allowance "
                   << allowance << "] ";
        }
    }
    void exact(bool ok, const char* what) {
        if (!ok) {
            pass = false;
            margin = std::min(margin, -1.0);
            detail << "[" << what << " failed] ";
        }
    }
};

CriterionResult finish(int id, const char* name, Check& c) {
    return CriterionResult{id, name, c.pass, c.margin, c.detail.str()};
}

CriterionResult failed(int id, const char* name, const std::string& why) {
    return CriterionResult{id, name, false, -1.0, why};
}

std::vector<std::int64_t> brute_force_r3(std::int64_t max_n) {
    std::vector<std::int64_t> counts(static_cast<std::size_t>(max_n + 1), 0);
    auto lim = static_cast<std::int64_t>(std::sqrt(static_cast<double>(max_n))) + 1;
    for (std::int64_t a = -lim; a <= lim; ++a)
        for (std::int64_t b = -lim; b <= lim; ++b) {
            std::int64_t ab = a * a + b * b;
            if (ab > max_n) continue;
            for (std::int64_t c = -lim; c <= lim; ++c) {
                std::int64_t n = ab + c * c;
                if (n <= max_n) ++counts[static_cast<std::size_t>(n)];
            }
        }
    return counts;
}

CriterionResult criterion1(unsigned threads) {
    Check c;
    RadialCountTable table = build_table(3, 5000, threads);
    std::vector<std::int64_t> oracle = brute_force_r3(5000);
    for (std::int64_t n = 0; n <= 5000; ++n)
        if (table.counts[static_cast<std::size_t>(n)] != oracle[static_cast<std::size_t>(n)]) {
            c.exact(false, "r3 convolution vs enumeration");
            c.detail << "n=" << n << " ";
            break;
        }
    c.exact(count_N(table, SqrtRadius::from_sigma2(1, 1)) == 7, "N3(1) = 7");
    c.exact(count_N(table, SqrtRadius::from_sigma2(2, 1)) == 19, "N3(sqrt2) = 19");
    return finish(1, "counting ground truth", c);
}

CriterionResult criterion2(const RadialCountTable& table, unsigned threads) {
    Check c;
    IteratedEvaluator eval(table);
    std::mt19937 rng(20260823u);
    std::uniform_int_distribution<std::int64_t> den_dist(1, 64);
    for (int trial = 0; trial < 50; ++trial) {
        std::int64_t den = den_dist(rng);
        std::uniform_int_distribution<std::int64_t> num_dist(1, 400 * den);
        SqrtRadius s = SqrtRadius::from_sigma2(num_dist(rng), den);
        int k = 1 + trial % 4;
        double exact = eval.eval_exact(k, s, threads);
        double tol = 1e-8 * (1.0 + std::abs(exact));
        double quad = eval.eval_quadrature(k, s, tol);
        c.bounded(std::abs(exact - quad), tol, "eval_exact vs eval_quadrature");
    }
    return finish(2, "iterated-integral oracle equivalence", c);
}

CriterionResult criterion3() {
    Check c;
    for (int k = 0; k <= 8; ++k) {
        TrigPoly f = iterated_trig_oracle(k);
        CoefficientQuadruple q = quadruple(k);
        c.exact(trig_coeff(f.a, 1) == q.alpha && trig_coeff(f.b, 1) == q.beta &&
                    trig_coeff(f.a, 0) == q.gamma && trig_coeff(f.b, 0) == q.delta,
                "quadruple vs symbolic oracle");
        QPolynomial qp = q_polynomial(k);
        bool poly_ok = true;
        for (std::size_t j = 0; j < std::max(f.p.size(), qp.coeffs.size()); ++j)
            poly_ok = poly_ok && trig_coeff(f.p, j) ==
                                     (j < qp.coeffs.size() ? qp.coeffs[j] : Rational(0));
        c.exact(poly_ok, "Q_k vs symbolic oracle");
    }
    Matrix4 m = recursion_matrix();
    for (int k = 0; k <= 64; ++k)
        c.exact(matrix_power(m, k) == matrix_power_block_form(k),
                "matrix power vs block form");
    for (int k = 0; k <= 32; ++k)
        c.exact(q_polynomial(k) == q_polynomial_by_recursion(k),
                "Q_k closed form vs recursion");
    return finish(3, "exact recursion suite", c);
}

CriterionResult criterion4(const RadialCountTable& table, std::int64_t n_series,
                           unsigned threads) {
    Check c;
    IteratedEvaluator eval(table);
    for (int k = 2; k <= 5; ++k)
        for (std::int64_t j = 80; j <= 1600; j += 80) {
            SqrtRadius s = SqrtRadius::from_sigma2(j, 8);
            double exact = eval.eval_exact(k, s, threads);
            BoundedValue mf = main_formula(table, k, s.sigma(), n_series, threads);
            double allowance =
                mf.bound + 256.0 * std::numeric_limits<double>::epsilon() *
                               (1.0 + std::abs(exact));
            c.bounded(std::abs(mf.value - exact), allowance, "main formula in bound");
            if (k >= 3)
                c.bounded(mf.bound, 1e-3 * (1.0 + s.sigma()), "bound size, k >= 3");
        }
    return finish(4, "main formula vs exact values", c);
}

CriterionResult criterion5(const RadialCountTable& table, std::int64_t n_series,
                           unsigned threads) {
    Check c;
    std::vector<FigureRow> rows = figure_pipeline(table, 1600, n_series, threads);
    c.exact(rows.size() == 1600, "row count");
    double early = 0.0, late = 0.0;
    for (const FigureRow& row : rows) {
        if (row.lambda >= 200 && row.lambda <= 400)
            early = std::max(early, std::abs(row.residual3));
        if (row.lambda >= 800)
            late = std::max(late, std::abs(row.residual3));
    }
    c.bounded(late, 4.0 * early, "amplitude growth upper");
    c.bounded(1.2 * early, late, "amplitude growth lower");
    c.bounded(std::abs(main_coefficient(4) - std::numbers::pi / 630.0), 1e-19,
              "leading coefficient pi/630");
    return finish(5, "figure pipeline reproduction", c);
}

CriterionResult criterion6(const RadialCountTable& big_table, unsigned threads) {
    Check c;
    LatticeSumConstant d0 = c_constant_direct(big_table, 0, 1000000);
    LatticeSumConstant e0 = c_constant_ewald(0, 1e-9);
    c.bounded(std::abs(d0.value - e0.value), d0.bound + e0.bound,
              "j=0 cross-method containment");
    LatticeSumConstant d2 = c_constant_direct(big_table, 2, 100000);
    LatticeSumConstant e2 = c_constant_ewald(2, 1e-9);
    c.bounded(std::abs(d2.value - e2.value), d2.bound + e2.bound,
              "j=2 cross-method containment");
    (void)threads;
    return finish(6, "lattice-sum constants", c);
}

CriterionResult criterion7(const RadialCountTable& t3, unsigned threads) {
    Check c;
    for (std::int64_t n = 1; n <= 50; ++n) {
        double lo = std::sqrt(static_cast<double>(n));
        double hi = std::sqrt(static_cast<double>(n + 1));
        double gap = hi - lo;
        BumpFunction chi = make_bump(lo + 0.2 * gap, hi - 0.2 * gap);
        double v = pair_counting(t3, 0, chi);
        auto expected =
            static_cast<double>(t3.cumulative[static_cast<std::size_t>(n)]);
        c.bounded(std::abs(v - expected), 1e-12 * expected, "point-value recovery");
    }
    BumpFunction chi = make_bump(0.5, 1.5);
    RadialCountTable t1 = build_table(1, 4000, threads);
    for (const RadialCountTable* table :
         {static_cast<const RadialCountTable*>(&t1), &t3}) {
        PairingReport r = verify_Nd_identity(*table, chi, 4000);
        c.exact(r.pass, "verify_Nd pass");
        double floor = 1e-12 * std::max(std::abs(r.lhs), 1.0) + r.quadrature_error;
        double res1 = std::abs(r.lhs - r.rhs_quarter);
        double res2 = std::abs(r.lhs - r.rhs_half);
        double res4 = std::abs(r.lhs - r.rhs);
        c.bounded(res2, 0.75 * res1 + floor, "residual factor N=1000");
        c.bounded(res4, 0.75 * res2 + floor, "residual factor N=2000");
    }
    return finish(7, "smeared identities", c);
}

CriterionResult criterion8(const RadialCountTable& table) {
    Check c;
    PairingReport r = fourier_check(table, 1.0, 0.2, 10000, 60.0);
    c.exact(r.pass, "fourier pairing verdict");
    double scale = std::max(std::abs(r.lhs), std::abs(r.rhs));
    c.bounded(std::abs(r.lhs - r.rhs), 1e-3 * scale, "relative discrepancy");
    return finish(8, "fourier-side identity", c);
}

CriterionResult criterion9(const RadialCountTable& table, unsigned threads) {
    Check c;
    AsymptoticsReport r1 = asymptotics_report(table, 1, 200.0, threads);
    const auto& w = r1.windows;
    c.exact(w.size() >= 2, "window count");
    if (w.size() >= 2) {
        double ratio = w.back().max_weighted / w[w.size() - 2].max_weighted;
        c.bounded(std::abs(std::log(ratio)), std::log(1.5), "k=1 window stability");
        c.bounded(0.5 * r1.global_max_sharpness, w.back().max_sharpness,
                  "k=1 sharpness no-decay probe");
    }
    AsymptoticsReport r2 = asymptotics_report(table, 2, 100.0, threads);
    const auto& w2 = r2.windows;
    if (w2.size() >= 2) {
        double ratio = w2.back().max_weighted / w2[w2.size() - 2].max_weighted;
        c.bounded(std::abs(std::log(ratio)), std::log(4.0 / 3.0),
                  "k=2 boundedness stability");
    }
    return finish(9, "asymptotics probes", c);
}

CriterionResult criterion10(const RadialCountTable& table, std::int64_t n_series,
                            unsigned threads) {
    Check c;
    IteratedEvaluator eval(table);
    bool printed_fails_somewhere = false;
    for (std::int64_t j = 80; j <= 1600; j += 80) {
        SqrtRadius s = SqrtRadius::from_sigma2(j, 8);
        double exact = eval.eval_exact(3, s, threads);
        BoundedValue good = main_formula(table, 3, s.sigma(), n_series, threads);
        double slack = 256.0 * std::numeric_limits<double>::epsilon() *
                       (1.0 + std::abs(exact));
        c.bounded(std::abs(good.value - exact), good.bound + slack,
                  "recursion convention passes");
        // Swap in the printed beta_k = -Im[i^k] closed form.
        BoundedValue osc_bad = eval_ok(table, 3, s.sigma(), n_series,
                                       BetaConvention::printed, threads);
        BoundedValue osc_good = eval_ok(table, 3, s.sigma(), n_series,
                                        BetaConvention::recursion, threads);
        double bad = good.value - osc_good.value + osc_bad.value;
        if (std::abs(bad - exact) > good.bound + slack)
            printed_fails_somewhere = true;
    }
    c.exact(printed_fails_somewhere,
            "printed beta convention demonstrably fails at k=3");
    return finish(10, "erratum regression", c);
}

}  // namespace

std::vector<CriterionResult> run_acceptance(const std::string& profile,
                                            unsigned threads) {
    std::int64_t max_n = 0, n_series = 0;
    if (profile == "quick") {
        max_n = 40000;
        n_series = 10000;
    } else if (profile == "full") {
        max_n = 1000000;
        n_series = 100000;
    } else {
        throw std::invalid_argument("run_acceptance: profile must be quick or full");
    }

    std::vector<CriterionResult> results;
    auto guard = [&](int id, const char* name, auto&& fn) {
        try {
            results.push_back(fn());
        } catch (const std::exception& e) {
            results.push_back(failed(id, name, e.what()));
        }
    };

    RadialCountTable table = build_table(3, max_n, threads);
    guard(1, "counting ground truth", [&] { return criterion1(threads); });
    guard(2, "iterated-integral oracle equivalence",
          [&] { return criterion2(table, threads); });
    guard(3, "exact recursion suite", [&] { return criterion3(); });
    guard(4, "main formula vs exact values",
          [&] { return criterion4(table, n_series, threads); });
    guard(5, "figure pipeline reproduction",
          [&] { return criterion5(table, n_series, threads); });
    guard(6, "lattice-sum constants", [&] {
        if (max_n >= 1000000) return criterion6(table, threads);
        RadialCountTable big = build_table(3, 1000000, threads);
        return criterion6(big, threads);
    });
    guard(7, "smeared identities", [&] { return criterion7(table, threads); });
    guard(8, "fourier-side identity", [&] { return criterion8(table); });
    guard(9, "asymptotics probes", [&] { return criterion9(table, threads); });
    guard(10, "erratum regression",
          [&] { return criterion10(table, n_series, threads); });
    return results;
}

}  // namespace gsphere
