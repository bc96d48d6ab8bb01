// Command-line front end. Subcommands: counts, iterated, series, coeffs,
// constants, pair, verify-delta, verify-nd, fourier, figure, asymptotics,
// suite. Output is CSV (RFC 4180, CRLF, header row, 17 significant digits)
// or JSON, to stdout or --out.

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "gsphere/bump.hpp"
#include "gsphere/lattice_sums.hpp"
#include "gsphere/oscillatory.hpp"
#include "gsphere/quadruple.hpp"
#include "gsphere/radial_counts.hpp"
#include "gsphere/reporting.hpp"
#include "gsphere/smeared.hpp"
#include "gsphere/step_calculus.hpp"

namespace {

using nlohmann::json;

std::string fmt17(double x) {
    std::ostringstream os;
    os.precision(17);
    os << x;
    return os.str();
}

struct Output {
    std::string emit = "auto";
    std::string path;

    void write(const std::string& text) const {
        if (path.empty()) {
            std::cout << text;
            return;
        }
        std::ofstream file(path, std::ios::binary);
        if (!file) throw std::runtime_error("cannot open output file: " + path);
        file << text;
    }
};

std::string to_csv(const std::vector<std::string>& header,
                   const std::vector<std::vector<std::string>>& rows) {
    std::ostringstream os;
    for (std::size_t i = 0; i < header.size(); ++i)
        os << header[i] << (i + 1 < header.size() ? "," : "\r\n");
    for (const auto& row : rows)
        for (std::size_t i = 0; i < row.size(); ++i)
            os << row[i] << (i + 1 < row.size() ? "," : "\r\n");
    return os.str();
}

json report_to_json(const gsphere::PairingReport& r) {
    return json{{"lhs_re", r.lhs.real()},
                {"lhs_im", r.lhs.imag()},
                {"rhs_re", r.rhs.real()},
                {"rhs_im", r.rhs.imag()},
                {"truncation_bound", r.truncation_bound},
                {"quadrature_error", r.quadrature_error},
                {"n_terms", r.n_terms},
                {"converged", r.converged},
                {"pass", r.pass},
                {"margin", r.margin},
                {"note", r.note}};
}

gsphere::BumpFunction bump_from_flags(double a, double b,
                                      const std::vector<int>& kill) {
    return gsphere::make_bump(a, b, kill);
}

std::string q_poly_string(const gsphere::QPolynomial& q) {
    std::ostringstream os;
    if (q.coeffs.empty()) {
        os << "0";
        return os.str();
    }
    bool first = true;
    for (std::size_t j = 0; j < q.coeffs.size(); ++j) {
        if (q.coeffs[j] == 0) continue;
        if (!first) os << " + ";
        os << "(" << q.coeffs[j] << ")";
        if (j == 1) os << "*S";
        if (j > 1) os << "*S^" << j;
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"verification laboratory for iterated integrals of the Gauss "
                 "sphere counting function"};
    app.require_subcommand(1);

    Output out;
    unsigned threads = 1;
    std::string profile = "quick";
    app.add_option("--emit", out.emit, "output format: csv|json")
        ->check(CLI::IsMember({"auto", "csv", "json"}));
    app.add_option("--out", out.path, "output path (default stdout)");
    app.add_option("--threads", threads, "worker threads for reductions");
    app.add_option("--profile", profile, "suite profile: quick|full")
        ->check(CLI::IsMember({"quick", "full"}));

    // counts
    auto* counts_cmd = app.add_subcommand("counts", "r_d(n) and N_d tables");
    int counts_dim = 3;
    std::int64_t counts_max = 100;
    counts_cmd->add_option("--dim", counts_dim, "dimension 1..3");
    counts_cmd->add_option("--max-n", counts_max, "largest n");

    // iterated
    auto* iter_cmd = app.add_subcommand("iterated", "exact N_{3,k}(S)");
    int iter_k = 1;
    std::string iter_s2 = "1";
    std::string iter_oracle = "off";
    iter_cmd->add_option("--k", iter_k, "iteration order (0..16)");
    iter_cmd->add_option("--sigma2", iter_s2, "S^2 as rational p/q");
    iter_cmd->add_option("--oracle", iter_oracle, "off|on: run the spline oracle")
        ->check(CLI::IsMember({"off", "on"}));

    // series
    auto* series_cmd = app.add_subcommand("series", "oscillatory remainder o_k");
    int series_k = 2;
    std::string series_s2 = "1";
    std::int64_t series_terms = 10000;
    series_cmd->add_option("--k", series_k, "order (>= 2)");
    series_cmd->add_option("--sigma2", series_s2, "S^2 as rational p/q");
    series_cmd->add_option("--terms", series_terms, "series truncation");

    // coeffs
    auto* coeffs_cmd = app.add_subcommand("coeffs", "exact quadruples and Q_k");
    int coeffs_lo = 0, coeffs_hi = 8;
    coeffs_cmd->add_option("--k-min", coeffs_lo, "first k");
    coeffs_cmd->add_option("--k-max", coeffs_hi, "last k (<= 64)");

    // constants
    auto* const_cmd = app.add_subcommand("constants", "lattice-sum constants C_j");
    int const_j = 0;
    std::string const_method = "ewald";
    std::int64_t const_terms = 100000;
    double const_target = 1e-9;
    const_cmd->add_option("--j", const_j, "even index");
    const_cmd->add_option("--method", const_method, "direct|ewald")
        ->check(CLI::IsMember({"direct", "ewald"}));
    const_cmd->add_option("--terms", const_terms, "direct partial-sum length");
    const_cmd->add_option("--target", const_target, "ewald precision target");

    // smeared family
    double sm_a = 0.5, sm_b = 1.5, sm_tau = 1.0, sm_eps = 0.2, sm_rmax = 60.0;
    int sm_dim = 3, pair_k = 0;
    std::int64_t sm_terms = 10000;
    std::vector<int> sm_kill;
    auto* pair_cmd = app.add_subcommand("pair", "int chi N_{3,k}");
    auto* delta_cmd = app.add_subcommand("verify-delta", "counting-measure identity");
    auto* nd_cmd = app.add_subcommand("verify-nd", "counting-function identity");
    auto* fourier_cmd = app.add_subcommand("fourier", "regularized Fourier identity");
    for (CLI::App* cmd : {pair_cmd, delta_cmd, nd_cmd}) {
        cmd->add_option("--a", sm_a, "support left endpoint");
        cmd->add_option("--b", sm_b, "support right endpoint");
        cmd->add_option("--kill-moments", sm_kill, "moment orders to kill (1..4)");
    }
    pair_cmd->add_option("--k", pair_k, "iteration order 0..4");
    for (CLI::App* cmd : {delta_cmd, nd_cmd})
        cmd->add_option("--dim", sm_dim, "dimension 1..3");
    for (CLI::App* cmd : {delta_cmd, nd_cmd, fourier_cmd})
        cmd->add_option("--terms", sm_terms, "series truncation");
    fourier_cmd->add_option("--tau", sm_tau, "frequency");
    fourier_cmd->add_option("--eps", sm_eps, "damping (>= 0.05)");
    fourier_cmd->add_option("--rmax", sm_rmax, "quadrature horizon");

    // figure
    auto* figure_cmd = app.add_subcommand("figure", "Figure-1 residual data");
    std::int64_t fig_lambda = 1600, fig_terms = 10000;
    figure_cmd->add_option("--lambda-max", fig_lambda, "grid size (S^2 = lambda/8)");
    figure_cmd->add_option("--terms", fig_terms, "o_4 series truncation");

    // asymptotics
    auto* asym_cmd = app.add_subcommand("asymptotics", "dyadic-window residual report");
    int asym_k = 1;
    double asym_smax = 100.0;
    asym_cmd->add_option("--k", asym_k, "order 1..5");
    asym_cmd->add_option("--sigma-max", asym_smax, "grid upper end");

    auto* suite_cmd = app.add_subcommand("suite", "acceptance criteria battery");

    // Let global options (--emit, --threads, ...) appear after the subcommand.
    for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; }))
        sub->fallthrough();

    CLI11_PARSE(app, argc, argv);

    try {
        if (counts_cmd->parsed()) {
            gsphere::RadialCountTable t =
                gsphere::build_table(counts_dim, counts_max, threads);
            if (out.emit == "json") {
                json rows = json::array();
                for (std::int64_t n = 0; n <= t.max_n; ++n)
                    rows.push_back({{"n", n},
                                    {"r", t.counts[static_cast<std::size_t>(n)]},
                                    {"cumulative",
                                     t.cumulative[static_cast<std::size_t>(n)]}});
                out.write(rows.dump(2) + "\n");
            } else {
                std::vector<std::vector<std::string>> rows;
                for (std::int64_t n = 0; n <= t.max_n; ++n)
                    rows.push_back(
                        {std::to_string(n),
                         std::to_string(t.counts[static_cast<std::size_t>(n)]),
                         std::to_string(t.cumulative[static_cast<std::size_t>(n)])});
                out.write(to_csv({"n", "r", "cumulative"}, rows));
            }
        } else if (iter_cmd->parsed()) {
            gsphere::SqrtRadius s = gsphere::SqrtRadius::parse(iter_s2);
            gsphere::RadialCountTable t =
                gsphere::build_table(3, s.floor_sigma2() + 1, threads);
            gsphere::IteratedEvaluator eval(t);
            json result{{"k", iter_k},
                        {"sigma2", s.to_string()},
                        {"value", eval.eval_exact(iter_k, s, threads)}};
            if (iter_oracle == "on")
                result["oracle_value"] = eval.eval_quadrature(
                    iter_k, s, 1e-8 * (1.0 + std::abs(result["value"].get<double>())));
            out.write(result.dump(2) + "\n");
        } else if (series_cmd->parsed()) {
            gsphere::SqrtRadius s = gsphere::SqrtRadius::parse(series_s2);
            gsphere::RadialCountTable t =
                gsphere::build_table(3, series_terms, threads);
            gsphere::BoundedValue v =
                gsphere::eval_ok(t, series_k, s.sigma(), series_terms,
                                 gsphere::BetaConvention::recursion, threads);
            json result{{"k", series_k},       {"sigma2", s.to_string()},
                        {"value", v.value},    {"bound", v.bound},
                        {"terms_used", v.terms_used}};
            if (out.emit == "csv")
                out.write(to_csv({"k", "sigma2", "value", "bound", "terms_used"},
                                 {{std::to_string(series_k), s.to_string(),
                                   fmt17(v.value), fmt17(v.bound),
                                   std::to_string(v.terms_used)}}));
            else
                out.write(result.dump(2) + "\n");
        } else if (coeffs_cmd->parsed()) {
            std::vector<std::vector<std::string>> rows;
            json jrows = json::array();
            for (int k = coeffs_lo; k <= coeffs_hi; ++k) {
                gsphere::CoefficientQuadruple q = gsphere::quadruple(k);
                std::string qp = q_poly_string(gsphere::q_polynomial(k));
                rows.push_back({std::to_string(k), std::to_string(q.alpha),
                                std::to_string(q.beta), std::to_string(q.gamma),
                                std::to_string(q.delta), qp});
                jrows.push_back({{"k", k},
                                 {"alpha", q.alpha},
                                 {"beta", q.beta},
                                 {"gamma", q.gamma},
                                 {"delta", q.delta},
                                 {"Q_k", qp}});
            }
            if (out.emit == "json")
                out.write(jrows.dump(2) + "\n");
            else
                out.write(to_csv({"k", "alpha", "beta", "gamma", "delta", "Q_k"}, rows));
        } else if (const_cmd->parsed()) {
            gsphere::LatticeSumConstant c =
                const_method == "direct"
                    ? gsphere::c_constant_direct(
                          gsphere::build_table(3, const_terms, threads), const_j,
                          const_terms)
                    : gsphere::c_constant_ewald(const_j, const_target);
            out.write(json{{"j", c.j},
                           {"value", c.value},
                           {"bound", c.bound},
                           {"method", c.method}}
                          .dump(2) +
                      "\n");
        } else if (pair_cmd->parsed()) {
            gsphere::BumpFunction chi = bump_from_flags(sm_a, sm_b, sm_kill);
            auto max_n = static_cast<std::int64_t>(sm_b * sm_b) + 2;
            gsphere::RadialCountTable t = gsphere::build_table(3, max_n, threads);
            double v = gsphere::pair_counting(t, pair_k, chi);
            out.write(json{{"k", pair_k}, {"a", sm_a}, {"b", sm_b}, {"value", v}}
                          .dump(2) +
                      "\n");
        } else if (delta_cmd->parsed() || nd_cmd->parsed()) {
            gsphere::BumpFunction chi = bump_from_flags(sm_a, sm_b, sm_kill);
            auto max_n = std::max<std::int64_t>(
                static_cast<std::int64_t>(sm_b * sm_b) + 2, sm_terms);
            gsphere::RadialCountTable t =
                gsphere::build_table(sm_dim, max_n, threads);
            gsphere::PairingReport r =
                delta_cmd->parsed()
                    ? gsphere::verify_delta_identity(t, chi, sm_terms)
                    : gsphere::verify_Nd_identity(t, chi, sm_terms);
            out.write(report_to_json(r).dump(2) + "\n");
        } else if (fourier_cmd->parsed()) {
            auto max_n = std::max<std::int64_t>(
                static_cast<std::int64_t>(sm_rmax * sm_rmax) + 2, sm_terms);
            gsphere::RadialCountTable t = gsphere::build_table(3, max_n, threads);
            gsphere::PairingReport r =
                gsphere::fourier_check(t, sm_tau, sm_eps, sm_terms, sm_rmax);
            out.write(report_to_json(r).dump(2) + "\n");
        } else if (figure_cmd->parsed()) {
            auto max_n = std::max<std::int64_t>(fig_lambda / 8 + 1, fig_terms);
            gsphere::RadialCountTable t = gsphere::build_table(3, max_n, threads);
            std::vector<gsphere::FigureRow> rows =
                gsphere::figure_pipeline(t, fig_lambda, fig_terms, threads);
            if (out.emit == "json") {
                json jrows = json::array();
                for (const auto& r : rows)
                    jrows.push_back({{"lambda", r.lambda},
                                     {"sigma2", r.sigma2},
                                     {"N34", r.n34},
                                     {"residual1", r.residual1},
                                     {"residual2", r.residual2},
                                     {"residual3", r.residual3}});
                out.write(jrows.dump(2) + "\n");
            } else {
                std::vector<std::vector<std::string>> csv;
                for (const auto& r : rows)
                    csv.push_back({std::to_string(r.lambda), fmt17(r.sigma2),
                                   fmt17(r.n34), fmt17(r.residual1),
                                   fmt17(r.residual2), fmt17(r.residual3)});
                out.write(to_csv(
                    {"lambda", "sigma2", "N34", "residual1", "residual2", "residual3"},
                    csv));
            }
        } else if (asym_cmd->parsed()) {
            auto max_n = static_cast<std::int64_t>(asym_smax * asym_smax) + 1;
            gsphere::RadialCountTable t = gsphere::build_table(3, max_n, threads);
            gsphere::AsymptoticsReport r =
                gsphere::asymptotics_report(t, asym_k, asym_smax, threads);
            json windows = json::array();
            for (const auto& w : r.windows)
                windows.push_back({{"sigma_lo", w.sigma_lo},
                                   {"sigma_hi", w.sigma_hi},
                                   {"max_weighted", w.max_weighted},
                                   {"max_sharpness", w.max_sharpness}});
            out.write(json{{"k", r.k},
                           {"grid", r.grid},
                           {"global_max_weighted", r.global_max_weighted},
                           {"global_max_sharpness", r.global_max_sharpness},
                           {"windows", windows},
                           {"verdict", r.verdict}}
                          .dump(2) +
                      "\n");
        } else if (suite_cmd->parsed()) {
            std::string summary;
            int status = gsphere::run_suite(profile, summary, threads);
            out.write(summary + "\n");
            return status;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
