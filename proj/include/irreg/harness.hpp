#pragma once

#include "irreg/bounds.hpp"
#include "irreg/graph.hpp"

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace irreg {

inline constexpr double kVerifyTolerance = 1e-9;
inline constexpr double kTieTolerance = 1e-12;
inline constexpr int kSearchCap = 8;

/// One inequality instance: holds iff lhs <= rhs + tolerance.
struct Comparison {
    double lhs = 0.0;
    double rhs = 0.0;
    double tolerance = 0.0;

    double margin() const { return lhs - rhs; }
    bool holds() const { return margin() <= tolerance; }
};

/// A named inequality evaluated on a graph's BoundReport. `evaluate` returns
/// nullopt when the check does not apply to that graph. The argument is the
/// corpus tolerance; a check may substitute its own.
struct Check {
    std::string name;
    std::string set;
    std::function<std::optional<Comparison>(const BoundReport&, double tol)> evaluate;
};

/// Every inequality proved or cited for the irregularity and its bounds.
/// Sets: theorem, variance, lower, dominance, rho, liu, subregular.
std::vector<Check> default_checks();

/// Deliberately false check (ten times the main bound as a lower bound) for
/// exercising the violation path.
Check corrupted_main_bound_check();

/// Subset by comma-separated set or check names; "all" keeps everything.
/// Throws std::invalid_argument for an unknown name.
std::vector<Check> select_checks(std::span<const Check> checks, std::string_view only);

struct ViolationReport {
    std::string canonical;  // canonical graph6
    std::string graph6;     // graph as evaluated
    int n = 0;
    int m = 0;
    std::string check_name;
    double lhs = 0.0;
    double rhs = 0.0;
    double margin = 0.0;
    double tolerance = 0.0;
};

struct VerifyOptions {
    int n_min = 1;
    int n_max = 7;
    bool connected_only = true;
    double tol = kVerifyTolerance;
    int jobs = 1;
};

struct VerifyResult {
    std::vector<ViolationReport> violations;
    std::size_t graphs = 0;
    std::size_t comparisons = 0;
    std::vector<std::size_t> graphs_per_order;  // index n
};

/// Runs `checks` over an explicit list of graphs. Output order follows the
/// input order regardless of `jobs`.
VerifyResult verify_graphs(std::span<const Graph> graphs, std::span<const Check> checks, double tol, int jobs = 1);

/// Runs `checks` over every isomorphism class in [n_min, n_max].
/// Throws CapExceeded past the enumeration cap.
VerifyResult verify_corpus(const VerifyOptions& options, std::span<const Check> checks);
VerifyResult verify_corpus(int n_max, bool connected_only, double tol = kVerifyTolerance);

struct SearchTie {
    std::string graph6;
    double epsilon = 0.0;
    int degree_gap = 0;
};

struct SearchRecord {
    int n = 0;
    int m = 0;
    std::string argmin_graph6;  // for bell_max_search: the maximizer
    double epsilon_min = 0.0;   // for bell_max_search: the maximum
    int degree_gap = 0;
    std::vector<SearchTie> ties;  // all candidates within kTieTolerance of the optimum, argmin first
    std::size_t candidates = 0;

    bool all_gaps_one() const;
};

/// Minimum irregularity over connected non-regular classes with n vertices
/// and m edges; nullopt if there is no such class.
std::optional<SearchRecord> hong_search_pair(int n, int m);

/// One record per (n, m) with n in [n_min, n_max] that admits a connected
/// non-regular graph, ordered by n then m. Throws CapExceeded for n > kSearchCap.
std::vector<SearchRecord> hong_search(int n_min, int n_max);

/// Maximum irregularity over all connected classes with (n, m); nullopt if
/// no connected graph has those parameters.
std::optional<SearchRecord> bell_max_search(int n, int m);

struct LGridFailure {
    int n = 0;
    int max_degree = 0;
    std::string check;
    double lhs = 0.0;
    double rhs = 0.0;
};

struct LGridReport {
    std::size_t checks = 0;
    std::vector<LGridFailure> failures;
    bool passed() const { return failures.empty(); }
};

/// For each n: L_high non-increasing on [2, n-2], L_low on [2, n-1], each
/// closed form equal to its quotient-minus-square form to 1e-12 relative,
/// and the two tail estimates. Throws std::invalid_argument for n_min < 7.
LGridReport l_monotonicity_grid(int n_min, int n_max);

}  // namespace irreg
