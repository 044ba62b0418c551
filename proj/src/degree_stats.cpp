#include "irreg/degree_stats.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace irreg {

Rational Rational::reduced(std::int64_t num, std::int64_t den)
{
    if (den == 0)
        throw std::domain_error("rational with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    std::int64_t g = std::gcd(num, den);
    if (g == 0)
        return {0, 1};
    return {num / g, den / g};
}

double DegreeStats::variance_identity_value() const
{
    double mean_sq = static_cast<double>(sum_sq_degrees) / n;
    double avg = avg_degree_value();
    return mean_sq - avg * avg;
}

DegreeStats degree_stats(const Graph& g)
{
    DegreeStats s;
    s.n = g.order();
    s.m = g.size();
    s.degrees.resize(static_cast<std::size_t>(s.n));
    for (Vertex v = 0; v < s.n; ++v)
        s.degrees[static_cast<std::size_t>(v)] = g.degree(v);

    auto [lo, hi] = std::minmax_element(s.degrees.begin(), s.degrees.end());
    s.min_degree = *lo;
    s.max_degree = *hi;

    const std::int64_t n = s.n;
    const std::int64_t two_m = 2 * static_cast<std::int64_t>(s.m);
    s.avg_degree = Rational::reduced(two_m, n);

    std::int64_t dev_sq = 0;  // sum (n d_i - 2m)^2 = n^2 sum (d_i - 2m/n)^2
    for (int d : s.degrees) {
        s.sum_sq_degrees += static_cast<std::int64_t>(d) * d;
        std::int64_t dev = n * d - two_m;
        dev_sq += dev * dev;
    }
    s.variance = Rational::reduced(dev_sq, n * n * n);

    Rational identity = Rational::reduced(n * s.sum_sq_degrees - two_m * two_m, n * n);
    if (!(identity == s.variance))
        throw std::logic_error("degree variance identity failed");

    s.two_degrees.resize(static_cast<std::size_t>(s.n));
    for (Vertex v = 0; v < s.n; ++v) {
        std::int64_t t = 0;
        for (Vertex w : g.neighbors(v))
            t += s.degrees[static_cast<std::size_t>(w)];
        s.two_degrees[static_cast<std::size_t>(v)] = t;
        s.sum_sq_two_degrees += t * t;
    }
    return s;
}

RegularityClass classify(const DegreeStats& s)
{
    if (s.max_degree == s.min_degree)
        return RegularityClass::Regular;
    if (s.max_degree - s.min_degree != 1)
        return RegularityClass::OtherIrregular;
    auto at_max = std::count(s.degrees.begin(), s.degrees.end(), s.max_degree);
    auto at_min = static_cast<long>(s.degrees.size()) - at_max;
    if (at_min == 1)
        return RegularityClass::HighSubregular;
    if (at_max == 1)
        return RegularityClass::LowSubregular;
    return RegularityClass::OtherIrregular;
}

RegularityClass classify(const Graph& g)
{
    return classify(degree_stats(g));
}

std::string_view to_string(RegularityClass c)
{
    switch (c) {
    case RegularityClass::Regular: return "regular";
    case RegularityClass::HighSubregular: return "high-subregular";
    case RegularityClass::LowSubregular: return "low-subregular";
    case RegularityClass::OtherIrregular: return "irregular";
    }
    return "?";
}

}  // namespace irreg
