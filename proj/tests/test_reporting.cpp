#include <doctest.h>

#include <cmath>

#include "gsphere/reporting.hpp"
#include "gsphere/step_calculus.hpp"

using namespace gsphere;

TEST_SUITE("reporting") {

TEST_CASE("figure pipeline anchors") {
    RadialCountTable t = build_table(3, 2000);
    std::vector<FigureRow> rows = figure_pipeline(t, 64, 2000);
    REQUIRE(rows.size() == 64);
    CHECK(rows[0].lambda == 1);
    CHECK(rows[7].sigma2 == doctest::Approx(1.0).epsilon(1e-16));
    // N_{3,4}(1) = (1 - 0)^4 / 4! from the origin shell alone.
    CHECK(rows[7].n34 == doctest::Approx(1.0 / 24.0).epsilon(1e-14));
    for (const FigureRow& r : rows) {
        CHECK(std::abs(r.residual3) <= std::abs(r.residual1) + 1.0);
        CHECK(std::isfinite(r.residual3));
    }
}

TEST_CASE("figure pipeline is deterministic under threading") {
    RadialCountTable t = build_table(3, 2000);
    std::vector<FigureRow> a = figure_pipeline(t, 48, 2000, 1);
    std::vector<FigureRow> b = figure_pipeline(t, 48, 2000, 4);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].n34 == b[i].n34);
        CHECK(a[i].residual3 == b[i].residual3);
    }
}

TEST_CASE("asymptotics report windows are finite and populated") {
    RadialCountTable t = build_table(3, 1100);
    AsymptoticsReport r = asymptotics_report(t, 2, 32.0);
    CHECK(r.k == 2);
    CHECK(!r.windows.empty());
    CHECK(r.global_max_weighted > 0.0);
    CHECK(std::isfinite(r.global_max_weighted));
    for (const AsymptoticsWindow& w : r.windows) {
        CHECK(w.sigma_lo < w.sigma_hi);
        CHECK(std::isfinite(w.max_weighted));
        CHECK(std::isfinite(w.max_sharpness));
    }
    CHECK(!r.verdict.empty());
}

TEST_CASE("validation") {
    RadialCountTable t = build_table(3, 100);
    CHECK_THROWS(asymptotics_report(t, 0, 32.0));
    CHECK_THROWS(asymptotics_report(t, 2, 2.0));
}

}  // TEST_SUITE
