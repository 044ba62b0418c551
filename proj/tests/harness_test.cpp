#include "irreg/bounds.hpp"
#include "irreg/canonical.hpp"
#include "irreg/enumerate.hpp"
#include "irreg/errors.hpp"
#include "irreg/generators.hpp"
#include "irreg/graph6.hpp"
#include "irreg/harness.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

using namespace irreg;

TEST_CASE("corpus verification up to 5 vertices")
{
    auto result = verify_corpus(5, true);
    CHECK(result.graphs == 1 + 1 + 2 + 6 + 21);
    CHECK(result.graphs_per_order[5] == 21);
    CHECK(result.comparisons > result.graphs);
    // The bound 1/(n(maxdeg+2)) stated without extra hypotheses fails on P3:
    // sqrt(2) - 4/3 < 1/12. That is the only violation.
    REQUIRE(result.violations.size() == 1);
    const auto& v = result.violations.front();
    CHECK(v.check_name == "cgs_lower");
    CHECK(v.graph6 == canonical_form(path(3)));
    CHECK(v.lhs == doctest::Approx(1.0 / 12.0));
    CHECK(v.rhs == doctest::Approx(std::sqrt(2.0) - 4.0 / 3.0));
    CHECK(v.margin > v.tolerance);
}

TEST_CASE("subregular checks over 7 vertices and every set except the cgs bound")
{
    VerifyOptions options;
    options.n_max = 7;
    auto all = default_checks();

    auto subregular = select_checks(all, "subregular");
    CHECK(verify_corpus(options, subregular).violations.empty());

    auto rest = select_checks(all, "theorem,variance,dominance,rho,liu,nikiforov_lower,main_lower,cg_degree_lower");
    auto result = verify_corpus(options, rest);
    CHECK(result.graphs == 996);
    CHECK(result.violations.empty());
}

TEST_CASE("disconnected graphs are verified too")
{
    VerifyOptions options;
    options.n_max = 6;
    options.connected_only = false;
    auto checks = default_checks();
    auto result = verify_corpus(options, checks);
    CHECK(result.graphs == 1 + 2 + 4 + 11 + 34 + 156);
    REQUIRE(result.violations.size() == 1);
    CHECK(result.violations[0].check_name == "cgs_lower");
}

TEST_CASE("a corrupted bound is caught")
{
    std::vector<Check> checks{corrupted_main_bound_check()};
    auto result = verify_corpus({1, 5, true, kVerifyTolerance, 1}, checks);
    CHECK(result.violations.size() >= 1);
    for (const auto& v : result.violations) {
        CHECK(v.check_name == "corrupted_main_lower_x10");
        CHECK(v.margin > v.tolerance);
    }
}

TEST_CASE("parallel verification returns the serial result")
{
    auto graphs = enumerate_graphs(6, std::nullopt, false);
    std::vector<Check> checks = default_checks();
    checks.push_back(corrupted_main_bound_check());
    auto serial = verify_graphs(graphs, checks, kVerifyTolerance, 1);
    auto parallel = verify_graphs(graphs, checks, kVerifyTolerance, 3);
    CHECK(serial.comparisons == parallel.comparisons);
    REQUIRE(serial.violations.size() == parallel.violations.size());
    for (std::size_t i = 0; i < serial.violations.size(); ++i) {
        CHECK(serial.violations[i].graph6 == parallel.violations[i].graph6);
        CHECK(serial.violations[i].check_name == parallel.violations[i].check_name);
    }
}

TEST_CASE("check selection")
{
    auto all = default_checks();
    CHECK(select_checks(all, "all").size() == all.size());
    CHECK(select_checks(all, "").size() == all.size());
    auto lower = select_checks(all, "lower");
    CHECK(lower.size() == 4);
    CHECK(select_checks(all, "hsf_upper,liu").size() == 4);
    CHECK_THROWS_AS(select_checks(all, "nonsense"), std::invalid_argument);
}

TEST_CASE("Hong search minimizers")
{
    // P4 (rho = 2cos(pi/5)) against the star (rho = sqrt 3), both with n=4, m=3.
    auto rec = hong_search_pair(4, 3);
    REQUIRE(rec.has_value());
    CHECK(rec->candidates == 2);
    CHECK(rec->argmin_graph6 == canonical_form(path(4)));
    CHECK(rec->epsilon_min == doctest::Approx(2 * std::cos(std::numbers::pi / 5) - 1.5).epsilon(1e-12));
    CHECK(rec->degree_gap == 1);
    CHECK(rec->ties.size() == 1);

    // Trees on five vertices: path, chair, star. The path wins with rho = sqrt 3.
    auto trees = hong_search_pair(5, 4);
    REQUIRE(trees.has_value());
    CHECK(trees->candidates == 3);
    CHECK(trees->argmin_graph6 == canonical_form(path(5)));
    CHECK(trees->epsilon_min == doctest::Approx(std::sqrt(3.0) - 1.6).epsilon(1e-12));

    CHECK_FALSE(hong_search_pair(4, 6).has_value());  // only K4
    CHECK_FALSE(hong_search_pair(4, 2).has_value());  // nothing connected
    CHECK_THROWS_AS(hong_search_pair(9, 10), CapExceeded);
}

TEST_CASE("Hong search over a range is deterministic and reproducible")
{
    auto first = hong_search(3, 6);
    auto second = hong_search(3, 6);
    REQUIRE(first.size() == second.size());
    int last_n = 0, last_m = 0;
    for (std::size_t i = 0; i < first.size(); ++i) {
        const auto& r = first[i];
        CHECK(r.argmin_graph6 == second[i].argmin_graph6);
        CHECK(r.epsilon_min == second[i].epsilon_min);
        CHECK((r.n > last_n || (r.n == last_n && r.m > last_m)));
        last_n = r.n;
        last_m = r.m;
        CHECK(std::fabs(epsilon(parse_graph6(r.argmin_graph6)) - r.epsilon_min) <= 1e-12);
        CHECK(r.degree_gap >= 1);
        CHECK(r.ties.front().graph6 == r.argmin_graph6);
        for (const auto& t : r.ties)
            CHECK(std::fabs(t.epsilon - r.epsilon_min) <= kTieTolerance);
    }
    // n=6: every m in 5..14 admits an irregular connected graph; m=15 is K6 alone.
    CHECK(std::count_if(first.begin(), first.end(), [](const SearchRecord& r) { return r.n == 6; }) == 10);
    CHECK_THROWS_AS(hong_search(4, 12), CapExceeded);
}

TEST_CASE("Bell maximum search")
{
    auto rec = bell_max_search(4, 3);
    REQUIRE(rec.has_value());
    CHECK(rec->argmin_graph6 == canonical_form(star(4)));
    CHECK(rec->epsilon_min == doctest::Approx(std::sqrt(3.0) - 1.5).epsilon(1e-12));

    auto k4 = bell_max_search(4, 6);
    REQUIRE(k4.has_value());
    CHECK(k4->candidates == 1);
    CHECK(std::fabs(k4->epsilon_min) <= 1e-12);

    auto trees = bell_max_search(5, 4);
    REQUIRE(trees.has_value());
    CHECK(trees->argmin_graph6 == canonical_form(star(5)));
    CHECK(trees->epsilon_min == doctest::Approx(0.4).epsilon(1e-12));

    CHECK_FALSE(bell_max_search(5, 3).has_value());
    CHECK_THROWS_AS(bell_max_search(9, 8), CapExceeded);
}

TEST_CASE("L-function grid")
{
    auto report = l_monotonicity_grid(7, 60);
    CHECK(report.passed());
    CHECK(report.checks > 3000);

    double previous = l_high(7, 2);
    for (int d = 3; d <= 5; ++d) {
        double current = l_high(7, d);
        CHECK(current < previous);
        previous = current;
    }
    CHECK_THROWS_AS(l_monotonicity_grid(6, 10), std::invalid_argument);
}
