#include "gsphere/reporting.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "gsphere/lattice_sums.hpp"
#include "gsphere/oscillatory.hpp"
#include "gsphere/step_calculus.hpp"

namespace gsphere {

std::vector<FigureRow> figure_pipeline(const RadialCountTable& table,
                                       std::int64_t lambda_max,
                                       std::int64_t n_terms, unsigned threads) {
    if (lambda_max < 1 || lambda_max > 100000)
        throw std::invalid_argument("figure_pipeline: lambda_max must be in [1, 1e5]");
    if (lambda_max / 8 + 1 > table.max_n || n_terms > table.max_n)
        throw std::out_of_range("figure_pipeline: table does not cover the grid");

    IteratedEvaluator eval(table);
    LatticeSumConstant c0 = c_constant_ewald(0, 1e-9);
    LatticeSumConstant c2 = c_constant_ewald(2, 1e-9);
    const double lead = main_coefficient(4);  // pi/630

    std::vector<FigureRow> rows;
    rows.reserve(static_cast<std::size_t>(lambda_max));
    for (std::int64_t lambda = 1; lambda <= lambda_max; ++lambda) {
        SqrtRadius s = SqrtRadius::from_sigma2(lambda, 8);
        double sig = s.sigma(), s2 = s.sigma2();
        FigureRow row;
        row.lambda = lambda;
        row.sigma2 = s2;
        row.n34 = eval.eval_exact(4, s, threads);
        row.residual1 = row.n34 - lead * std::pow(s2, 3.5);
        row.residual2 = row.residual1 - (c0.value / 6.0) * std::pow(s2, 1.5);
        row.residual3 = row.residual2 - c2.value * sig;
        rows.push_back(row);

        if (lambda % 50 == 0) {
            BoundedValue ok = eval_ok(table, 4, sig, n_terms,
                                      BetaConvention::recursion, threads);
            double allowed = ok.bound + (c0.bound / 6.0) * std::pow(s2, 1.5) +
                             c2.bound * sig +
                             1e-13 * (1.0 + row.n34 + lead * std::pow(s2, 3.5));
            if (std::abs(row.residual3 - ok.value) > allowed) {
                std::ostringstream msg;
                msg << "figure_pipeline: residual cross-check failed at lambda="
                    << lambda << " (residual3=" << row.residual3
                    << ", o_4=" << ok.value << ", allowed=" << allowed << ")";
                throw std::runtime_error(msg.str());
            }
        }
    }
    return rows;
}

AsymptoticsReport asymptotics_report(const RadialCountTable& table, int k,
                                     double sigma_max, unsigned threads) {
    if (k < 1 || k > 5)
        throw std::invalid_argument("asymptotics_report: k must lie in [1, 5]");
    if (sigma_max < 8.0 || sigma_max * sigma_max > static_cast<double>(table.max_n))
        throw std::out_of_range("asymptotics_report: sigma_max outside table range");

    IteratedEvaluator eval(table);
    std::vector<LatticeSumConstant> cs;  // C_j for even j < k
    for (int j = 0; j < k; j += 2) cs.push_back(c_constant_ewald(j, 1e-10));

    auto residual = [&](const SqrtRadius& s) {
        double sig = s.sigma(), s2 = s.sigma2();
        double main = main_coefficient(k) * std::pow(s2, 0.5 * (3 + k));
        double mfact = 1.0;
        for (int m = 0; m < k; ++m) {
            if (m > 0) mfact *= m;
            int j = k - 1 - m;
            if (j % 2 != 0) continue;
            main += cs[static_cast<std::size_t>(j / 2)].value *
                    std::pow(sig, m) / mfact;
        }
        return eval.eval_exact(k, s, threads) - main;
    };

    AsymptoticsReport report;
    report.k = k;
    report.grid = "S^2 = m + 1/2 on dyadic windows (sigma_max/2^w, sigma_max/2^(w-1)]";

    std::vector<std::pair<double, double>> spans;
    for (double hi = sigma_max; hi > 4.0; hi *= 0.5)
        spans.emplace_back(hi * 0.5, hi);
    for (auto it = spans.rbegin(); it != spans.rend(); ++it) {
        auto [lo, hi] = *it;
        AsymptoticsWindow window;
        window.sigma_lo = lo;
        window.sigma_hi = hi;
        auto m_lo = static_cast<std::int64_t>(lo * lo);
        auto m_hi = static_cast<std::int64_t>(hi * hi) - 1;
        std::int64_t step = std::max<std::int64_t>(1, (m_hi - m_lo) / 256);
        for (std::int64_t m = m_lo; m <= m_hi; m += step) {
            SqrtRadius s = SqrtRadius::from_sigma2(2 * m + 1, 2);
            double sig = s.sigma();
            if (sig <= lo || sig > hi) continue;
            double res = std::abs(residual(s));
            double weight = k == 1 ? sig * std::log(2.0 + sig) : sig;
            window.max_weighted = std::max(window.max_weighted, res / weight);
            window.max_sharpness =
                std::max(window.max_sharpness, res / std::pow(sig, 0.9));
        }
        report.global_max_weighted =
            std::max(report.global_max_weighted, window.max_weighted);
        report.global_max_sharpness =
            std::max(report.global_max_sharpness, window.max_sharpness);
        report.windows.push_back(window);
    }

    std::ostringstream verdict;
    verdict << "windows=" << report.windows.size();
    if (report.windows.size() >= 2) {
        const auto& last = report.windows.back();
        const auto& prev = report.windows[report.windows.size() - 2];
        double ratio = last.max_weighted /
                       std::max(prev.max_weighted, 1e-300);
        verdict << "; last/prev weighted-max ratio=" << ratio
                << " (stability: ratio in [1/1.5, 1.5] for k=1, [0.75, 4/3] for k>=2)"
                << "; sharpness probe: final-window max "
                << last.max_sharpness << " vs global "
                << report.global_max_sharpness
                << " (no-decay evidence only, not a proof of sharpness)";
    }
    report.verdict = verdict.str();
    return report;
}

int run_suite(const std::string& profile, std::string& json_out, unsigned threads) {
    std::vector<CriterionResult> results = run_acceptance(profile, threads);
    bool all_pass = true;
    nlohmann::json summary;
    summary["profile"] = profile;
    summary["criteria"] = nlohmann::json::array();
    for (const CriterionResult& r : results) {
        all_pass = all_pass && r.pass;
        summary["criteria"].push_back({{"id", r.id},
                                       {"name", r.name},
                                       {"pass", r.pass},
                                       {"margin", r.margin},
                                       {"detail", r.detail}});
    }
    summary["pass"] = all_pass;
    json_out = summary.dump(2);
    return all_pass ? 0 : 1;
}

}  // namespace gsphere
