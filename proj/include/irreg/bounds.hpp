#pragma once

#include "irreg/degree_stats.hpp"
#include "irreg/graph.hpp"
#include "irreg/spectral.hpp"

#include <optional>
#include <string>
#include <utility>

namespace irreg {

/// A bound value together with whether it may be compared against the graph.
/// Degenerate bounds (edgeless input) evaluate to 0 and remain comparable.
struct BoundValue {
    enum class Status { Applicable, Degenerate, Inapplicable };

    Status status = Status::Inapplicable;
    double value = 0.0;
    std::string reason;  // empty when Applicable

    static BoundValue applicable(double v) { return {Status::Applicable, v, {}}; }
    static BoundValue degenerate(std::string why) { return {Status::Degenerate, 0.0, std::move(why)}; }
    static BoundValue inapplicable(std::string why) { return {Status::Inapplicable, 0.0, std::move(why)}; }

    bool present() const { return status != Status::Inapplicable; }
    std::optional<double> get() const { return present() ? std::optional<double>(value) : std::nullopt; }
};

// Lower bounds on the irregularity rho - 2m/n.
BoundValue nikiforov_bound(const DegreeStats& s);  // var / sqrt(8m)
BoundValue main_bound(const DegreeStats& s);       // var sqrt(n) / sqrt(8 m maxdeg)
BoundValue cg_degree_bound(const DegreeStats& s);  // (maxdeg - mindeg)^2 / (4 n maxdeg)
/// 1 / (n (maxdeg + 2)); only for connected non-regular graphs.
BoundValue cgs_bound(const DegreeStats& s, bool connected);
/// Connected subregular graphs with n >= 7:
///   high: (n^2 - 2n + 3) / (n^3 maxdeg)
///   low:  (2n^2 - 4n - 3) / (2 n^3 (maxdeg - 1 + 1/maxdeg))
BoundValue subregular_bound(const DegreeStats& s, RegularityClass c, bool connected);

// Bounds on rho itself.
double hofmeister_lower(const DegreeStats& s);                   // sqrt(sum d^2 / n)
BoundValue yu_lu_tian_lower(const DegreeStats& s, bool connected);  // sqrt(sum t^2 / sum d^2)
BoundValue yu_lu_tian_lower(const Graph& g);
/// (mindeg - 1 + sqrt((mindeg + 1)^2 + 4 (2m - mindeg n))) / 2, connected graphs.
BoundValue hong_shu_fang_upper(const DegreeStats& s, bool connected);
double low_subregular_rho_upper(int max_degree);  // maxdeg - 1 + 1/maxdeg

/// Popoviciu / Nagy endpoints ((maxdeg-mindeg)^2/(2n), (maxdeg-mindeg)^2/4).
std::pair<double, double> variance_sandwich(const DegreeStats& s);

struct LiuLiuCheck {
    bool sumsq_le_m_q1 = false;       // sum d^2 <= m q1
    bool sumsq_le_2m_maxdeg = false;  // sum d^2 <= 2 m maxdeg
    double margin_q1 = 0.0;           // m q1 - sum d^2
    double margin_maxdeg = 0.0;       // 2 m maxdeg - sum d^2
};
LiuLiuCheck liu_liu_check(const DegreeStats& s, double q1, double tol = 0.0);

// Gap functions from the subregular derivations, defined for n >= 7 and
// 2 <= maxdeg <= n - 2 (high) or 2 <= maxdeg <= n - 1 (low). Throw
// std::out_of_range otherwise.
double l_high(int n, int max_degree);  // closed form
double l_low(int n, int max_degree);
/// Quotient-minus-square forms: YLT closed form squared minus avg degree squared.
double l_high_unsimplified(int n, int max_degree);
double l_low_unsimplified(int n, int max_degree);
/// Squared Yu-Lu-Tian value forced by the degree pattern of a subregular graph.
double ylt_square_high(int n, int max_degree);
double ylt_square_low(int n, int max_degree);
/// The tail estimates (2n - 4 + 6/n)/n^2 and (2n - 4 - 3/n)/n^2.
double l_high_tail(int n);
double l_low_tail(int n);

struct BoundReport {
    DegreeStats stats;
    RegularityClass regularity = RegularityClass::Regular;
    bool connected = false;
    SpectralResult spectral;

    double epsilon = 0.0;  // rho - 2m/n

    BoundValue nikiforov;
    BoundValue main;
    BoundValue cg_degree;
    BoundValue cgs;
    BoundValue sub_high;
    BoundValue sub_low;

    double hofmeister_lb = 0.0;
    BoundValue ylt_lb;
    BoundValue hsf_ub;
    BoundValue low_sub_rho_ub;  // maxdeg - 1 + 1/maxdeg for connected low subregular
    BoundValue l_high_chain;    // L_high(n, maxdeg) / (2 maxdeg) for connected high subregular, n >= 7

    double var_lb = 0.0;
    double var_ub = 0.0;
};

BoundReport bound_report(const Graph& g, double tol = kDefaultTolerance);

double epsilon(const Graph& g, double tol = kDefaultTolerance);

}  // namespace irreg
