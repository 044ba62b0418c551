#include "irreg/bounds.hpp"
#include "irreg/generators.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>

using namespace irreg;

namespace {

const DegreeStats& witness()
{
    static const DegreeStats s = degree_stats(subdivided_prism(3));
    return s;
}

constexpr double kWitnessRho = 2.9041704986940382;

}  // namespace

TEST_CASE("irregularity")
{
    CHECK(epsilon(cycle(6)) == doctest::Approx(0.0));
    CHECK(std::fabs(epsilon(complete(5))) <= 1e-9);
    CHECK(epsilon(star(4)) == doctest::Approx(std::sqrt(3.0) - 1.5).epsilon(1e-12));
    double w = epsilon(subdivided_prism(3));
    CHECK(w == doctest::Approx(kWitnessRho - 20.0 / 7.0).epsilon(1e-10));
    CHECK(w > 0.046);
    CHECK(w < 0.048);
}

TEST_CASE("Nikiforov and main bounds")
{
    CHECK(nikiforov_bound(witness()).value == doctest::Approx((6.0 / 49.0) / std::sqrt(80.0)));
    CHECK(std::fabs(nikiforov_bound(witness()).value - 0.0137) <= 5e-5);
    CHECK(main_bound(witness()).value == doctest::Approx((6.0 / 49.0) * std::sqrt(7.0) / std::sqrt(240.0)));
    CHECK(std::fabs(main_bound(witness()).value - 0.0209) <= 5e-5);

    auto star_stats = degree_stats(star(4));
    CHECK(nikiforov_bound(star_stats).value == doctest::Approx(0.75 / std::sqrt(24.0)));
    CHECK(main_bound(star_stats).value == doctest::Approx(0.75 * 2 / std::sqrt(72.0)));

    auto regular = degree_stats(prism(4));
    CHECK(nikiforov_bound(regular).value == 0.0);
    CHECK(main_bound(regular).value == 0.0);

    auto edgeless = degree_stats(Graph(3, {}));
    CHECK(nikiforov_bound(edgeless).status == BoundValue::Status::Degenerate);
    CHECK(main_bound(edgeless).status == BoundValue::Status::Degenerate);
    CHECK(main_bound(edgeless).value == 0.0);
}

TEST_CASE("Cioaba-Gregory bounds")
{
    CHECK(cg_degree_bound(witness()).value == doctest::Approx(1.0 / 84.0));
    CHECK(cg_degree_bound(degree_stats(star(4))).value == doctest::Approx(4.0 / 48.0));
    CHECK(cg_degree_bound(degree_stats(cycle(5))).value == 0.0);
    CHECK(cg_degree_bound(degree_stats(Graph(2, {}))).status == BoundValue::Status::Degenerate);

    CHECK(cgs_bound(witness(), true).value == doctest::Approx(1.0 / 35.0));
    CHECK(std::fabs(cgs_bound(witness(), true).value - 0.0286) <= 5e-5);
    CHECK(cgs_bound(degree_stats(star(4)), true).value == doctest::Approx(0.05));
    CHECK_FALSE(cgs_bound(degree_stats(cycle(5)), true).present());
    CHECK_FALSE(cgs_bound(witness(), false).present());
}

TEST_CASE("subregular bounds")
{
    auto high = subregular_bound(witness(), RegularityClass::HighSubregular, true);
    REQUIRE(high.present());
    CHECK(high.value == doctest::Approx(38.0 / 1029.0).epsilon(1e-12));

    auto low = subregular_bound(witness(), RegularityClass::LowSubregular, true);
    CHECK(low.value == doctest::Approx(67.0 / (686.0 * 7.0 / 3.0)).epsilon(1e-12));

    auto small = degree_stats(Graph(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}, {0, 3}}));
    CHECK(subregular_bound(small, RegularityClass::HighSubregular, true).reason == "fewer than 7 vertices");
    CHECK(subregular_bound(witness(), RegularityClass::OtherIrregular, true).reason == "not subregular");
    CHECK(subregular_bound(witness(), RegularityClass::HighSubregular, false).reason == "disconnected graph");
}

TEST_CASE("bounds on the spectral radius")
{
    auto c4 = degree_stats(cycle(4));
    CHECK(hofmeister_lower(c4) == 2.0);
    CHECK(hofmeister_lower(degree_stats(star(4))) == doctest::Approx(std::sqrt(3.0)));
    CHECK(hofmeister_lower(witness()) == doctest::Approx(std::sqrt(58.0 / 7.0)));

    CHECK(yu_lu_tian_lower(prism(5)).value == doctest::Approx(3.0));
    CHECK(yu_lu_tian_lower(path(3)).value == doctest::Approx(std::sqrt(2.0)));
    // Forced 2-degree pattern of a high subregular graph gives 488/58 at n=7, maxdeg=3.
    CHECK(yu_lu_tian_lower(subdivided_prism(3)).value == doctest::Approx(std::sqrt(488.0 / 58.0)).epsilon(1e-12));
    CHECK(ylt_square_high(7, 3) == doctest::Approx(488.0 / 58.0));
    CHECK_FALSE(yu_lu_tian_lower(Graph(4, {{0, 1}, {2, 3}})).present());

    for (int n = 2; n <= 8; ++n)
        CHECK(hong_shu_fang_upper(degree_stats(complete(n)), true).value == doctest::Approx(n - 1.0));
    CHECK(hong_shu_fang_upper(degree_stats(path(3)), true).value == doctest::Approx(std::sqrt(2.0)));
    CHECK_FALSE(hong_shu_fang_upper(degree_stats(path(3)), false).present());

    CHECK(low_subregular_rho_upper(3) == doctest::Approx(7.0 / 3.0));
    CHECK(low_subregular_rho_upper(1) == 1.0);
    CHECK(low_subregular_rho_upper(2) == 1.5);
    // The square-root form specialised to low subregular graphs never exceeds it.
    for (int d = 1; d <= 50; ++d)
        CHECK((d - 2 + std::sqrt(d * d + 4.0)) / 2 <= low_subregular_rho_upper(d) + 1e-15);
}

TEST_CASE("variance sandwich")
{
    auto [lo, hi] = variance_sandwich(degree_stats(star(4)));
    CHECK(lo == doctest::Approx(0.5));
    CHECK(hi == doctest::Approx(1.0));

    auto [rlo, rhi] = variance_sandwich(degree_stats(cycle(4)));
    CHECK(rlo == 0.0);
    CHECK(rhi == 0.0);

    auto [wlo, whi] = variance_sandwich(witness());
    CHECK(wlo == doctest::Approx(1.0 / 14.0));
    CHECK(whi == doctest::Approx(0.25));
    CHECK(witness().variance_value() >= wlo);
    CHECK(witness().variance_value() <= whi);
}

TEST_CASE("Liu-Liu inequalities")
{
    auto c4 = liu_liu_check(degree_stats(cycle(4)), signless_laplacian_radius(cycle(4)), 1e-9);
    CHECK(c4.sumsq_le_m_q1);
    CHECK(c4.sumsq_le_2m_maxdeg);
    CHECK(c4.margin_q1 == doctest::Approx(0.0));
    CHECK(c4.margin_maxdeg == 0.0);

    auto k13 = liu_liu_check(degree_stats(star(4)), signless_laplacian_radius(star(4)), 1e-9);
    CHECK(k13.sumsq_le_m_q1);
    CHECK(std::fabs(k13.margin_q1) <= 1e-9);
    CHECK(k13.margin_maxdeg == doctest::Approx(6.0));

    double q1 = signless_laplacian_radius(subdivided_prism(3));
    auto w = liu_liu_check(witness(), q1);
    CHECK(w.sumsq_le_m_q1);
    CHECK(w.margin_maxdeg == doctest::Approx(2.0));

    CHECK_FALSE(liu_liu_check(witness(), 5.0).sumsq_le_m_q1);
}

TEST_CASE("gap functions L(n, maxdeg)")
{
    CHECK(l_high(7, 3) == doctest::Approx(712.0 / 2842.0).epsilon(1e-14));
    CHECK(l_high_unsimplified(7, 3) == doctest::Approx(488.0 / 58.0 - (20.0 / 7.0) * (20.0 / 7.0)).epsilon(1e-12));
    CHECK(l_high(7, 3) == doctest::Approx(l_high_unsimplified(7, 3)).epsilon(1e-13));

    // Endpoint closed forms from the derivation.
    for (int n = 7; n <= 100; ++n) {
        double N = n;
        CHECK(l_high(n, n - 2) ==
              doctest::Approx((2 * std::pow(N, 4) - 12 * std::pow(N, 3) + 27 * N * N - 22 * N - 5) /
                              (std::pow(N, 5) - 4 * std::pow(N, 4) + 2 * std::pow(N, 3) + 5 * N * N))
                  .epsilon(1e-12));
        CHECK(l_low(n, n - 1) ==
              doctest::Approx((2 * std::pow(N, 3) - 10 * N * N + 15 * N - 3) / (N * N * (N * N - 3 * N + 3)))
                  .epsilon(1e-12));
        CHECK(l_high(n, n - 2) >= l_high_tail(n));
        CHECK(l_low(n, n - 1) >= l_low_tail(n));
    }

    CHECK_THROWS_AS(l_high(6, 3), std::out_of_range);
    CHECK_THROWS_AS(l_high(7, 6), std::out_of_range);
    CHECK_NOTHROW(l_low(7, 6));
    CHECK_THROWS_AS(l_low(7, 7), std::out_of_range);
    CHECK_THROWS_AS(l_low(7, 1), std::out_of_range);
}

TEST_CASE("bound report gating")
{
    auto w = bound_report(subdivided_prism(3));
    CHECK(w.regularity == RegularityClass::HighSubregular);
    CHECK(w.connected);
    CHECK(std::fabs(w.nikiforov.value - 0.0137) <= 5e-4);
    CHECK(std::fabs(w.main.value - 0.0209) <= 5e-4);
    CHECK(std::fabs(w.cgs.value - 0.0286) <= 5e-4);
    CHECK(w.sub_high.present());
    CHECK_FALSE(w.sub_low.present());
    CHECK(w.l_high_chain.present());
    CHECK(w.l_high_chain.value == doctest::Approx(l_high(7, 3) / 6.0));
    CHECK_FALSE(w.low_sub_rho_ub.present());
    for (const BoundValue* b : {&w.nikiforov, &w.main, &w.cg_degree, &w.cgs, &w.sub_high, &w.l_high_chain})
        CHECK(b->value <= w.epsilon);

    auto reg = bound_report(prism(3));
    CHECK(reg.nikiforov.value == 0.0);
    CHECK(reg.main.value == 0.0);
    CHECK(reg.cg_degree.value == 0.0);
    CHECK_FALSE(reg.cgs.present());
    CHECK(std::fabs(reg.epsilon) <= 1e-12);

    auto split = bound_report(Graph(5, {{0, 1}, {1, 2}, {3, 4}}));
    CHECK_FALSE(split.connected);
    CHECK_FALSE(split.ylt_lb.present());
    CHECK_FALSE(split.hsf_ub.present());
    CHECK_FALSE(split.cgs.present());
    CHECK(split.main.present());
    CHECK(split.main.value <= split.epsilon);
}
