#include "irreg/bounds.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <tuple>

namespace irreg {

namespace {

using Wide = long double;

bool subregular(RegularityClass c)
{
    return c == RegularityClass::HighSubregular || c == RegularityClass::LowSubregular;
}

void require_range(bool ok, const char* name, int n, int max_degree)
{
    if (!ok)
        throw std::out_of_range(std::string(name) + ": (n, maxdeg) = (" + std::to_string(n) + ", " +
                                std::to_string(max_degree) + ") outside the domain");
}

}  // namespace

BoundValue nikiforov_bound(const DegreeStats& s)
{
    if (s.m == 0)
        return BoundValue::degenerate("edgeless graph");
    return BoundValue::applicable(s.variance_value() / std::sqrt(8.0 * s.m));
}

BoundValue main_bound(const DegreeStats& s)
{
    auto nik = nikiforov_bound(s);
    if (!nik.present() || nik.status == BoundValue::Status::Degenerate)
        return nik;
    return BoundValue::applicable(nik.value * std::sqrt(static_cast<double>(s.n) / s.max_degree));
}

BoundValue cg_degree_bound(const DegreeStats& s)
{
    if (s.max_degree == 0)
        return BoundValue::degenerate("edgeless graph");
    const double gap = s.max_degree - s.min_degree;
    return BoundValue::applicable(gap * gap / (4.0 * s.n * s.max_degree));
}

BoundValue cgs_bound(const DegreeStats& s, bool connected)
{
    if (s.regular())
        return BoundValue::inapplicable("regular graph");
    if (!connected)
        return BoundValue::inapplicable("disconnected graph");
    return BoundValue::applicable(1.0 / (static_cast<double>(s.n) * (s.max_degree + 2)));
}

BoundValue subregular_bound(const DegreeStats& s, RegularityClass c, bool connected)
{
    if (!subregular(c))
        return BoundValue::inapplicable("not subregular");
    if (!connected)
        return BoundValue::inapplicable("disconnected graph");
    if (s.n < 7)
        return BoundValue::inapplicable("fewer than 7 vertices");
    const double n = s.n;
    const double d = s.max_degree;
    if (c == RegularityClass::HighSubregular)
        return BoundValue::applicable((n * n - 2 * n + 3) / (n * n * n * d));
    return BoundValue::applicable((2 * n * n - 4 * n - 3) / (2 * n * n * n * (d - 1 + 1 / d)));
}

double hofmeister_lower(const DegreeStats& s)
{
    return std::sqrt(static_cast<double>(s.sum_sq_degrees) / s.n);
}

BoundValue yu_lu_tian_lower(const DegreeStats& s, bool connected)
{
    if (!connected)
        return BoundValue::inapplicable("disconnected graph");
    if (s.m == 0)
        return BoundValue::inapplicable("edgeless graph");
    return BoundValue::applicable(
        std::sqrt(static_cast<double>(s.sum_sq_two_degrees) / static_cast<double>(s.sum_sq_degrees)));
}

BoundValue yu_lu_tian_lower(const Graph& g)
{
    return yu_lu_tian_lower(degree_stats(g), is_connected(g));
}

BoundValue hong_shu_fang_upper(const DegreeStats& s, bool connected)
{
    if (!connected)
        return BoundValue::inapplicable("disconnected graph");
    const double delta = s.min_degree;
    const double slack = 2.0 * s.m - static_cast<double>(s.min_degree) * s.n;
    return BoundValue::applicable((delta - 1 + std::sqrt((delta + 1) * (delta + 1) + 4 * slack)) / 2);
}

double low_subregular_rho_upper(int max_degree)
{
    if (max_degree < 1)
        throw std::out_of_range("low_subregular_rho_upper needs maxdeg >= 1");
    return max_degree - 1 + 1.0 / max_degree;
}

std::pair<double, double> variance_sandwich(const DegreeStats& s)
{
    const double gap = s.max_degree - s.min_degree;
    return {gap * gap / (2.0 * s.n), gap * gap / 4.0};
}

LiuLiuCheck liu_liu_check(const DegreeStats& s, double q1, double tol)
{
    LiuLiuCheck out;
    const double sumsq = static_cast<double>(s.sum_sq_degrees);
    out.margin_q1 = s.m * q1 - sumsq;
    out.margin_maxdeg = 2.0 * s.m * s.max_degree - sumsq;
    out.sumsq_le_m_q1 = out.margin_q1 >= -tol;
    out.sumsq_le_2m_maxdeg = out.margin_maxdeg >= -tol;
    return out;
}

double ylt_square_high(int n, int max_degree)
{
    const Wide N = n, D = max_degree;
    return static_cast<double>((N * D * D * D * D - 4 * D * D * D + 3 * D * D + D - 1) / (N * D * D - 2 * D + 1));
}

double ylt_square_low(int n, int max_degree)
{
    const Wide N = n, D = max_degree;
    return static_cast<double>((N * D * D * D * D - (4 * N - 4) * D * D * D + (6 * N - 9) * D * D - (4 * N - 7) * D + N - 1) /
                               (N * D * D - (2 * N - 2) * D + N - 1));
}

double l_high(int n, int max_degree)
{
    require_range(n >= 7 && max_degree >= 2 && max_degree <= n - 2, "l_high", n, max_degree);
    const Wide N = n, D = max_degree;
    Wide num = (2 * D * D + D - 1) * N * N + (2 * D - 5 * D * D) * N + 2 * D - 1;
    Wide den = N * N * (N * D * D - 2 * D + 1);
    return static_cast<double>(num / den);
}

double l_low(int n, int max_degree)
{
    require_range(n >= 7 && max_degree >= 2 && max_degree <= n - 1, "l_low", n, max_degree);
    const Wide N = n, D = max_degree;
    Wide num = (2 * D * D - 3 * D + 2) * N * N - (5 * D * D - 8 * D + 3) * N - 2 * D + 1;
    Wide den = (D * D - 2 * D + 1) * N * N * N + (2 * D - 1) * N * N;
    return static_cast<double>(num / den);
}

double l_high_unsimplified(int n, int max_degree)
{
    require_range(n >= 7 && max_degree >= 2 && max_degree <= n - 2, "l_high_unsimplified", n, max_degree);
    const Wide N = n, D = max_degree;
    Wide quotient = (N * D * D * D * D - 4 * D * D * D + 3 * D * D + D - 1) / (N * D * D - 2 * D + 1);
    Wide avg = D - 1 / N;
    return static_cast<double>(quotient - avg * avg);
}

double l_low_unsimplified(int n, int max_degree)
{
    require_range(n >= 7 && max_degree >= 2 && max_degree <= n - 1, "l_low_unsimplified", n, max_degree);
    const Wide N = n, D = max_degree;
    Wide quotient = (N * D * D * D * D - (4 * N - 4) * D * D * D + (6 * N - 9) * D * D - (4 * N - 7) * D + N - 1) /
                    (N * D * D - (2 * N - 2) * D + N - 1);
    Wide avg = D - 1 + 1 / N;
    return static_cast<double>(quotient - avg * avg);
}

double l_high_tail(int n)
{
    const Wide N = n;
    return static_cast<double>((2 * N - 4 + 6 / N) / (N * N));
}

double l_low_tail(int n)
{
    const Wide N = n;
    return static_cast<double>((2 * N - 4 - 3 / N) / (N * N));
}

BoundReport bound_report(const Graph& g, double tol)
{
    BoundReport r;
    r.stats = degree_stats(g);
    r.regularity = classify(r.stats);
    r.connected = is_connected(g);
    r.spectral = spectral_radii(g, tol);
    const DegreeStats& s = r.stats;

    r.epsilon = r.spectral.rho - s.avg_degree_value();

    r.nikiforov = nikiforov_bound(s);
    r.main = main_bound(s);
    r.cg_degree = cg_degree_bound(s);
    r.cgs = cgs_bound(s, r.connected);

    auto sub = subregular_bound(s, r.regularity, r.connected);
    const auto not_class = [](const char* which) { return BoundValue::inapplicable(std::string("not ") + which); };
    r.sub_high = r.regularity == RegularityClass::HighSubregular ? sub : not_class("high subregular");
    r.sub_low = r.regularity == RegularityClass::LowSubregular ? sub : not_class("low subregular");

    r.hofmeister_lb = hofmeister_lower(s);
    r.ylt_lb = yu_lu_tian_lower(s, r.connected);
    r.hsf_ub = hong_shu_fang_upper(s, r.connected);

    if (r.regularity != RegularityClass::LowSubregular)
        r.low_sub_rho_ub = not_class("low subregular");
    else if (!r.connected)
        r.low_sub_rho_ub = BoundValue::inapplicable("disconnected graph");
    else
        r.low_sub_rho_ub = BoundValue::applicable(low_subregular_rho_upper(s.max_degree));

    if (r.regularity != RegularityClass::HighSubregular)
        r.l_high_chain = not_class("high subregular");
    else if (!r.connected)
        r.l_high_chain = BoundValue::inapplicable("disconnected graph");
    else if (s.n < 7)
        r.l_high_chain = BoundValue::inapplicable("fewer than 7 vertices");
    else
        r.l_high_chain = BoundValue::applicable(l_high(s.n, s.max_degree) / (2.0 * s.max_degree));

    std::tie(r.var_lb, r.var_ub) = variance_sandwich(s);
    return r;
}

double epsilon(const Graph& g, double tol)
{
    return adjacency_spectral_radius(g, tol).rho - degree_stats(g).avg_degree_value();
}

}  // namespace irreg
