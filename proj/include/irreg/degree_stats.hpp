#pragma once

#include "irreg/graph.hpp"

#include <cstdint>
#include <string_view>
#include <vector>

namespace irreg {

/// Nonnegative rational kept in lowest terms.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    static Rational reduced(std::int64_t num, std::int64_t den);
    double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }

    friend bool operator==(const Rational&, const Rational&) = default;
};

/// Degree-level quantities of a graph. Everything except the `*_value`
/// conveniences is exact.
struct DegreeStats {
    int n = 0;
    int m = 0;
    std::vector<int> degrees;
    Rational avg_degree;  // 2m/n
    int max_degree = 0;
    int min_degree = 0;
    std::int64_t sum_sq_degrees = 0;
    /// (1/n) * sum (d_i - 2m/n)^2, from the definitional form.
    Rational variance;
    /// t_i = sum of degrees over the neighbours of i.
    std::vector<std::int64_t> two_degrees;
    std::int64_t sum_sq_two_degrees = 0;

    double avg_degree_value() const { return avg_degree.to_double(); }
    double variance_value() const { return variance.to_double(); }
    /// (1/n) sum d_i^2 - (2m/n)^2 evaluated in floating point.
    double variance_identity_value() const;
    bool regular() const { return max_degree == min_degree; }
};

/// Throws std::logic_error if the definitional and identity variance forms
/// disagree in exact arithmetic (they cannot for a valid graph).
DegreeStats degree_stats(const Graph& g);

/// Subregular naming follows the convention of the bound derivations:
/// "high" has a single vertex of degree max-1 (all others at max),
/// "low" has a single vertex of degree max (all others at max-1).
enum class RegularityClass { Regular, HighSubregular, LowSubregular, OtherIrregular };

RegularityClass classify(const DegreeStats& s);
RegularityClass classify(const Graph& g);

std::string_view to_string(RegularityClass c);

}  // namespace irreg
