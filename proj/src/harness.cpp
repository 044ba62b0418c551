#include "irreg/harness.hpp"

#include "irreg/canonical.hpp"
#include "irreg/enumerate.hpp"
#include "irreg/errors.hpp"
#include "irreg/graph6.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <set>
#include <stdexcept>
#include <thread>

namespace irreg {

namespace {

using Result = std::optional<Comparison>;

// lhs <= rhs within tol
Comparison le(double lhs, double rhs, double tol)
{
    return {lhs, rhs, tol};
}

Comparison close(double a, double b, double tol)
{
    return {std::fabs(a - b), 0.0, tol};
}

double avg(const BoundReport& r)
{
    return r.stats.avg_degree_value();
}

Check check(std::string name, std::string set, std::function<Result(const BoundReport&, double)> f)
{
    return {std::move(name), std::move(set), std::move(f)};
}

Result lower_bound_check(const BoundValue& b, const BoundReport& r, double tol)
{
    if (!b.present())
        return std::nullopt;
    return le(b.value, r.epsilon, tol);
}

bool subregular(const BoundReport& r)
{
    return r.regularity == RegularityClass::HighSubregular || r.regularity == RegularityClass::LowSubregular;
}

}  // namespace

std::vector<Check> default_checks()
{
    std::vector<Check> checks;

    checks.push_back(check("cs_rho_ge_avg", "theorem",
                           [](const BoundReport& r, double tol) -> Result { return le(avg(r), r.spectral.rho, tol); }));
    checks.push_back(check("cs_regular_equality", "theorem", [](const BoundReport& r, double tol) -> Result {
        if (!r.stats.regular())
            return std::nullopt;
        return close(r.spectral.rho, avg(r), tol);
    }));
    // Non-regular graphs keep a positive gap: epsilon >= tol.
    checks.push_back(check("cs_irregular_strict", "theorem", [](const BoundReport& r, double tol) -> Result {
        if (r.stats.regular())
            return std::nullopt;
        return le(0.0, r.epsilon, -tol);
    }));
    checks.push_back(check("rho_below_max_degree_if_irregular", "theorem", [](const BoundReport& r, double tol) -> Result {
        if (r.stats.regular() || !r.connected)
            return std::nullopt;
        return le(r.spectral.rho, r.stats.max_degree, -tol);
    }));

    checks.push_back(check("variance_identity", "variance", [](const BoundReport& r, double) -> Result {
        double v = r.stats.variance_value();
        return le(std::fabs(v - r.stats.variance_identity_value()), 1e-12 * std::max(1.0, v), 0.0);
    }));
    checks.push_back(check("variance_sandwich_lower", "variance", [](const BoundReport& r, double tol) -> Result {
        return le(r.var_lb, r.stats.variance_value(), tol);
    }));
    checks.push_back(check("variance_sandwich_upper", "variance", [](const BoundReport& r, double tol) -> Result {
        return le(r.stats.variance_value(), r.var_ub, tol);
    }));

    checks.push_back(check("nikiforov_lower", "lower",
                           [](const BoundReport& r, double tol) { return lower_bound_check(r.nikiforov, r, tol); }));
    checks.push_back(
        check("main_lower", "lower", [](const BoundReport& r, double tol) { return lower_bound_check(r.main, r, tol); }));
    checks.push_back(check("cg_degree_lower", "lower",
                           [](const BoundReport& r, double tol) { return lower_bound_check(r.cg_degree, r, tol); }));
    checks.push_back(
        check("cgs_lower", "lower", [](const BoundReport& r, double tol) { return lower_bound_check(r.cgs, r, tol); }));

    checks.push_back(check("main_dominates_nikiforov", "dominance", [](const BoundReport& r, double) -> Result {
        if (r.stats.regular() || r.stats.m == 0)
            return std::nullopt;
        return le(r.nikiforov.value, r.main.value, -1e-12);
    }));
    checks.push_back(check("main_nikiforov_ratio", "dominance", [](const BoundReport& r, double) -> Result {
        if (r.stats.m == 0)
            return std::nullopt;
        double scaled = r.nikiforov.value * std::sqrt(static_cast<double>(r.stats.n) / r.stats.max_degree);
        return le(std::fabs(r.main.value - scaled), 1e-12 * std::max(1.0, r.main.value), 0.0);
    }));

    checks.push_back(check("hofmeister_lower", "rho", [](const BoundReport& r, double tol) -> Result {
        return le(r.hofmeister_lb, r.spectral.rho, tol);
    }));
    checks.push_back(check("hofmeister_chain", "rho",
                           [](const BoundReport& r, double tol) -> Result { return le(avg(r), r.hofmeister_lb, tol); }));
    checks.push_back(check("ylt_lower", "rho", [](const BoundReport& r, double tol) -> Result {
        if (!r.ylt_lb.present())
            return std::nullopt;
        return le(r.ylt_lb.value, r.spectral.rho, tol);
    }));
    checks.push_back(check("ylt_chain", "rho", [](const BoundReport& r, double tol) -> Result {
        if (!r.ylt_lb.present())
            return std::nullopt;
        return le(avg(r), r.ylt_lb.value, tol);
    }));
    checks.push_back(check("hsf_upper", "rho", [](const BoundReport& r, double tol) -> Result {
        if (!r.hsf_ub.present())
            return std::nullopt;
        return le(r.spectral.rho, r.hsf_ub.value, tol);
    }));
    checks.push_back(check("rho_le_max_degree", "rho", [](const BoundReport& r, double tol) -> Result {
        return le(r.spectral.rho, r.stats.max_degree, tol);
    }));

    checks.push_back(check("liu_liu_sumsq_le_m_q1", "liu", [](const BoundReport& r, double tol) -> Result {
        if (r.stats.m == 0)
            return std::nullopt;
        return le(static_cast<double>(r.stats.sum_sq_degrees), r.stats.m * r.spectral.q1.value_or(0.0), tol);
    }));
    checks.push_back(check("liu_liu_q1_le_2_max_degree", "liu", [](const BoundReport& r, double tol) -> Result {
        if (r.stats.m == 0)
            return std::nullopt;
        return le(r.spectral.q1.value_or(0.0), 2.0 * r.stats.max_degree, tol);
    }));
    checks.push_back(check("sumsq_le_2m_max_degree", "liu", [](const BoundReport& r, double tol) -> Result {
        if (r.stats.m == 0)
            return std::nullopt;
        return le(static_cast<double>(r.stats.sum_sq_degrees), 2.0 * r.stats.m * r.stats.max_degree, tol);
    }));

    checks.push_back(check("subregular_lower", "subregular", [](const BoundReport& r, double tol) -> Result {
        const BoundValue& b = r.regularity == RegularityClass::HighSubregular ? r.sub_high : r.sub_low;
        return lower_bound_check(b, r, tol);
    }));
    checks.push_back(check("high_subregular_max_degree_cap", "subregular", [](const BoundReport& r, double) -> Result {
        if (r.regularity != RegularityClass::HighSubregular)
            return std::nullopt;
        return le(r.stats.max_degree, r.stats.n - 2, 0.0);
    }));
    checks.push_back(check("l_high_chain", "subregular",
                           [](const BoundReport& r, double tol) { return lower_bound_check(r.l_high_chain, r, tol); }));
    checks.push_back(check("low_subregular_rho_upper", "subregular", [](const BoundReport& r, double tol) -> Result {
        if (!r.low_sub_rho_ub.present())
            return std::nullopt;
        return le(r.spectral.rho, r.low_sub_rho_ub.value, tol);
    }));
    // The 2-degree pattern of a connected subregular graph is forced by its
    // degrees, so the Yu-Lu-Tian value has a closed form in (n, maxdeg).
    checks.push_back(check("ylt_subregular_closed_form", "subregular", [](const BoundReport& r, double tol) -> Result {
        if (!subregular(r) || !r.ylt_lb.present())
            return std::nullopt;
        double square = r.regularity == RegularityClass::HighSubregular ? ylt_square_high(r.stats.n, r.stats.max_degree)
                                                                         : ylt_square_low(r.stats.n, r.stats.max_degree);
        return close(r.ylt_lb.value, std::sqrt(square), tol);
    }));

    return checks;
}

Check corrupted_main_bound_check()
{
    return check("corrupted_main_lower_x10", "selftest", [](const BoundReport& r, double tol) -> Result {
        if (!r.main.present())
            return std::nullopt;
        return le(10.0 * r.main.value, r.epsilon, tol);
    });
}

std::vector<Check> select_checks(std::span<const Check> checks, std::string_view only)
{
    if (only.empty() || only == "all")
        return {checks.begin(), checks.end()};
    std::set<std::string, std::less<>> wanted;
    std::size_t start = 0;
    while (start <= only.size()) {
        auto comma = only.find(',', start);
        auto token = only.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
        if (!token.empty())
            wanted.emplace(token);
        if (comma == std::string_view::npos)
            break;
        start = comma + 1;
    }
    std::vector<Check> out;
    std::set<std::string, std::less<>> matched;
    for (const auto& c : checks) {
        bool by_set = wanted.count(c.set) > 0;
        bool by_name = wanted.count(c.name) > 0;
        if (by_set)
            matched.insert(c.set);
        if (by_name)
            matched.insert(c.name);
        if (by_set || by_name)
            out.push_back(c);
    }
    for (const auto& w : wanted)
        if (!matched.count(w))
            throw std::invalid_argument("unknown check or check set '" + w + "'");
    return out;
}

namespace {

void verify_one(const Graph& g, std::span<const Check> checks, double tol, std::vector<ViolationReport>& out,
                std::size_t& comparisons)
{
    BoundReport report = bound_report(g);
    std::string g6;
    for (const auto& c : checks) {
        auto cmp = c.evaluate(report, tol);
        if (!cmp)
            continue;
        ++comparisons;
        if (cmp->holds())
            continue;
        if (g6.empty())
            g6 = to_graph6(g);
        ViolationReport v;
        v.graph6 = g6;
        v.canonical = g.order() <= kCanonicalCap ? canonical_form(g) : g6;
        v.n = g.order();
        v.m = g.size();
        v.check_name = c.name;
        v.lhs = cmp->lhs;
        v.rhs = cmp->rhs;
        v.margin = cmp->margin();
        v.tolerance = cmp->tolerance;
        out.push_back(std::move(v));
    }
}

}  // namespace

VerifyResult verify_graphs(std::span<const Graph> graphs, std::span<const Check> checks, double tol, int jobs)
{
    const std::size_t workers = std::clamp<std::size_t>(static_cast<std::size_t>(std::max(jobs, 1)), 1,
                                                        std::max<std::size_t>(graphs.size(), 1));
    std::vector<std::vector<ViolationReport>> partial(workers);
    std::vector<std::size_t> counts(workers, 0);
    std::vector<std::exception_ptr> errors(workers);

    // Contiguous chunks; concatenating them in worker order restores input order.
    auto work = [&](std::size_t w) {
        try {
            std::size_t begin = graphs.size() * w / workers;
            std::size_t end = graphs.size() * (w + 1) / workers;
            for (std::size_t i = begin; i < end; ++i)
                verify_one(graphs[i], checks, tol, partial[w], counts[w]);
        } catch (...) {
            errors[w] = std::current_exception();
        }
    };
    if (workers == 1) {
        work(0);
    } else {
        std::vector<std::jthread> threads;
        for (std::size_t w = 0; w < workers; ++w)
            threads.emplace_back(work, w);
    }
    for (auto& e : errors)
        if (e)
            std::rethrow_exception(e);

    VerifyResult result;
    result.graphs = graphs.size();
    for (std::size_t w = 0; w < workers; ++w) {
        result.comparisons += counts[w];
        for (auto& v : partial[w])
            result.violations.push_back(std::move(v));
    }
    return result;
}

VerifyResult verify_corpus(const VerifyOptions& options, std::span<const Check> checks)
{
    if (options.n_max > kEnumerationCap)
        throw CapExceeded("verify_corpus supports n <= " + std::to_string(kEnumerationCap));
    VerifyResult total;
    total.graphs_per_order.assign(static_cast<std::size_t>(options.n_max) + 1, 0);
    for (int n = std::max(options.n_min, 1); n <= options.n_max; ++n) {
        auto graphs = enumerate_graphs(n, std::nullopt, options.connected_only);
        auto part = verify_graphs(graphs, checks, options.tol, options.jobs);
        total.graphs += part.graphs;
        total.comparisons += part.comparisons;
        total.graphs_per_order[static_cast<std::size_t>(n)] = part.graphs;
        for (auto& v : part.violations)
            total.violations.push_back(std::move(v));
    }
    return total;
}

VerifyResult verify_corpus(int n_max, bool connected_only, double tol)
{
    VerifyOptions options;
    options.n_max = n_max;
    options.connected_only = connected_only;
    options.tol = tol;
    auto checks = default_checks();
    return verify_corpus(options, checks);
}

bool SearchRecord::all_gaps_one() const
{
    return std::all_of(ties.begin(), ties.end(), [](const SearchTie& t) { return t.degree_gap == 1; });
}

namespace {

void require_search_cap(int n)
{
    if (n > kSearchCap)
        throw CapExceeded("searches support n <= " + std::to_string(kSearchCap) + ", got n = " + std::to_string(n));
    if (n < 1)
        throw std::invalid_argument("searches need n >= 1");
}

int degree_gap(const Graph& g)
{
    int lo = g.order(), hi = 0;
    for (Vertex v = 0; v < g.order(); ++v) {
        lo = std::min(lo, g.degree(v));
        hi = std::max(hi, g.degree(v));
    }
    return hi - lo;
}

enum class Goal { Minimize, Maximize };

std::optional<SearchRecord> extremal(int n, int m, Goal goal, bool skip_regular)
{
    require_search_cap(n);
    struct Candidate {
        std::size_t index;
        double epsilon;
    };
    std::vector<Graph> pool;
    std::vector<Candidate> values;
    for_each_graph(n, m, true, [&](const Graph& g) {
        if (skip_regular && degree_gap(g) == 0)
            return;
        values.push_back({pool.size(), epsilon(g)});
        pool.push_back(g);
    });
    if (values.empty())
        return std::nullopt;

    double best = values.front().epsilon;
    for (const auto& c : values)
        best = goal == Goal::Minimize ? std::min(best, c.epsilon) : std::max(best, c.epsilon);

    SearchRecord rec;
    rec.n = n;
    rec.m = m;
    rec.candidates = values.size();
    for (const auto& c : values) {
        if (std::fabs(c.epsilon - best) > kTieTolerance)
            continue;
        const Graph& g = pool[c.index];
        rec.ties.push_back({to_graph6(g), c.epsilon, degree_gap(g)});
    }
    // The first tie in enumeration order is the reported optimum.
    rec.argmin_graph6 = rec.ties.front().graph6;
    rec.epsilon_min = rec.ties.front().epsilon;
    rec.degree_gap = rec.ties.front().degree_gap;
    return rec;
}

}  // namespace

std::optional<SearchRecord> hong_search_pair(int n, int m)
{
    return extremal(n, m, Goal::Minimize, true);
}

std::vector<SearchRecord> hong_search(int n_min, int n_max)
{
    require_search_cap(n_max);
    std::vector<SearchRecord> records;
    for (int n = std::max(n_min, 1); n <= n_max; ++n)
        for (int m = n - 1; m <= n * (n - 1) / 2; ++m)
            if (auto rec = hong_search_pair(n, m))
                records.push_back(std::move(*rec));
    return records;
}

std::optional<SearchRecord> bell_max_search(int n, int m)
{
    return extremal(n, m, Goal::Maximize, false);
}

LGridReport l_monotonicity_grid(int n_min, int n_max)
{
    if (n_min < 7)
        throw std::invalid_argument("L-function grid needs n >= 7, got " + std::to_string(n_min));
    LGridReport report;
    auto expect = [&](bool ok, int n, int d, const char* name, double lhs, double rhs) {
        ++report.checks;
        if (!ok)
            report.failures.push_back({n, d, name, lhs, rhs});
    };
    auto relative_close = [](double a, double b) { return std::fabs(a - b) <= 1e-12 * std::max(std::fabs(a), std::fabs(b)); };

    for (int n = n_min; n <= n_max; ++n) {
        for (int d = 2; d <= n - 2; ++d) {
            double closed = l_high(n, d), quotient = l_high_unsimplified(n, d);
            expect(relative_close(closed, quotient), n, d, "l_high_forms_agree", closed, quotient);
            if (d + 1 <= n - 2) {
                double next = l_high(n, d + 1);
                expect(next <= closed + 1e-12, n, d, "l_high_non_increasing", next, closed);
            }
        }
        for (int d = 2; d <= n - 1; ++d) {
            double closed = l_low(n, d), quotient = l_low_unsimplified(n, d);
            expect(relative_close(closed, quotient), n, d, "l_low_forms_agree", closed, quotient);
            if (d + 1 <= n - 1) {
                double next = l_low(n, d + 1);
                expect(next <= closed + 1e-12, n, d, "l_low_non_increasing", next, closed);
            }
        }
        double high_end = l_high(n, n - 2), low_end = l_low(n, n - 1);
        expect(high_end >= l_high_tail(n), n, n - 2, "l_high_tail", high_end, l_high_tail(n));
        expect(low_end >= l_low_tail(n), n, n - 1, "l_low_tail", low_end, l_low_tail(n));
    }
    return report;
}

}  // namespace irreg
