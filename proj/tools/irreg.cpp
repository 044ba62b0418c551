// irreg: irregularity rho - 2m/n and its bounds from the command line.
//
//   irreg compute [FILE...] [--graph6 G]... [--format csv|json] [--strict] [--precision 6|full]
//   irreg verify --n-max N [--only SETS] [--all-graphs] [--jobs J] [--out FILE] [--self-test]
//   irreg search (--hong | --bell-max) --n A[..B] [--m M]
//   irreg gen FAMILY SIZE
//
// Exit codes: 0 ok, 1 violations found, 2 usage error, 3 numerical non-convergence.

#include "irreg/bounds.hpp"
#include "irreg/enumerate.hpp"
#include "irreg/errors.hpp"
#include "irreg/generators.hpp"
#include "irreg/graph6.hpp"
#include "irreg/harness.hpp"
#include "irreg/report.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolations = 1;
constexpr int kExitUsage = 2;
constexpr int kExitConvergence = 3;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

irreg::Precision parse_precision(const std::string& s)
{
    if (s == "6")
        return irreg::Precision::Six;
    if (s == "full")
        return irreg::Precision::Full;
    throw UsageError("--precision must be 6 or full");
}

// Writes to `path`, or stdout when empty or "-".
template <class Fn>
void with_output(const std::string& path, Fn&& fn)
{
    if (path.empty() || path == "-") {
        fn(std::cout);
        return;
    }
    std::ofstream out(path);
    if (!out)
        throw UsageError("cannot open " + path + " for writing");
    fn(out);
}

std::string clean_line(std::string line)
{
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t'))
        line.pop_back();
    constexpr std::string_view header = ">>graph6<<";
    if (line.rfind(header, 0) == 0)
        line.erase(0, header.size());
    return line;
}

struct ComputeArgs {
    std::vector<std::string> files;
    std::vector<std::string> inline_graphs;
    std::string format = "csv";
    std::string precision = "6";
    std::string out;
    bool strict = false;
};

int run_compute(const ComputeArgs& a)
{
    const auto precision = parse_precision(a.precision);
    std::vector<irreg::ReportRow> rows;
    bool had_errors = false;

    auto handle = [&](const std::string& source, std::size_t line_no, const std::string& text) {
        std::string line = clean_line(text);
        if (line.empty())
            return;
        try {
            auto g = irreg::parse_graph6(line);
            rows.push_back(irreg::make_row(g, irreg::bound_report(g)));
        } catch (const irreg::ParseError& e) {
            had_errors = true;
            std::cerr << source << ":" << line_no << ": " << e.what() << '\n';
            if (a.strict)
                throw UsageError("aborting on malformed input (--strict)");
        }
    };

    for (std::size_t i = 0; i < a.inline_graphs.size(); ++i)
        handle("--graph6", i + 1, a.inline_graphs[i]);
    for (const auto& file : a.files) {
        std::ifstream in_file;
        std::istream* in = &std::cin;
        if (file != "-") {
            in_file.open(file);
            if (!in_file)
                throw UsageError("cannot open " + file);
            in = &in_file;
        }
        std::string line;
        std::size_t line_no = 0;
        while (std::getline(*in, line))
            handle(file, ++line_no, line);
    }
    if (a.files.empty() && a.inline_graphs.empty())
        throw UsageError("compute needs a graph6 file, '-' for stdin, or --graph6");

    with_output(a.out, [&](std::ostream& os) {
        if (a.format == "json")
            irreg::write_rows_json(os, rows, precision);
        else
            irreg::write_rows_csv(os, rows, precision);
    });
    if (had_errors)
        std::cerr << "warning: some lines could not be parsed and were skipped\n";
    return kExitOk;
}

struct VerifyArgs {
    int n_max = 0;
    int n_min = 1;
    std::string only = "all";
    bool all_graphs = false;
    double tol = irreg::kVerifyTolerance;
    int jobs = 1;
    std::string out;
    std::string format = "csv";
    bool self_test = false;
};

int run_verify(const VerifyArgs& a)
{
    if (a.n_max > irreg::kEnumerationCap)
        throw UsageError("--n-max must be at most " + std::to_string(irreg::kEnumerationCap));
    if (a.n_max < 1)
        throw UsageError("--n-max must be positive");

    auto checks = irreg::select_checks(irreg::default_checks(), a.only);
    if (a.self_test)
        checks.push_back(irreg::corrupted_main_bound_check());

    irreg::VerifyOptions options;
    options.n_min = a.n_min;
    options.n_max = a.n_max;
    options.connected_only = !a.all_graphs;
    options.tol = a.tol;
    options.jobs = a.jobs;

    auto start = std::chrono::steady_clock::now();
    auto result = irreg::verify_corpus(options, checks);
    std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;

    const std::string path = a.out.empty() ? "violations." + a.format : a.out;
    with_output(path, [&](std::ostream& os) {
        if (a.format == "json")
            irreg::write_violations_json(os, result.violations);
        else
            irreg::write_violations_csv(os, result.violations);
    });

    std::cout << "graphs " << result.graphs << "\ncomparisons " << result.comparisons << "\nviolations "
              << result.violations.size() << '\n';
    std::cerr << "checks " << checks.size() << ", elapsed " << elapsed.count() << " s, violations file " << path
              << '\n';
    return result.violations.empty() ? kExitOk : kExitViolations;
}

struct SearchArgs {
    bool hong = false;
    bool bell = false;
    std::string n_range;
    int m = -1;
    std::string format = "csv";
    std::string precision = "6";
    std::string out;
};

std::pair<int, int> parse_range(const std::string& s)
{
    try {
        auto dots = s.find("..");
        if (dots == std::string::npos) {
            int v = std::stoi(s);
            return {v, v};
        }
        return {std::stoi(s.substr(0, dots)), std::stoi(s.substr(dots + 2))};
    } catch (const std::exception&) {
        throw UsageError("--n expects N or A..B, got '" + s + "'");
    }
}

int run_search(const SearchArgs& a)
{
    if (a.hong == a.bell)
        throw UsageError("search needs exactly one of --hong or --bell-max");
    auto [lo, hi] = parse_range(a.n_range);
    if (lo < 1 || hi < lo)
        throw UsageError("invalid --n range");
    if (hi > irreg::kSearchCap)
        throw UsageError("--n must be at most " + std::to_string(irreg::kSearchCap));
    const auto precision = parse_precision(a.precision);

    std::vector<irreg::SearchRecord> records;
    for (int n = lo; n <= hi; ++n) {
        int m_lo = a.m >= 0 ? a.m : n - 1;
        int m_hi = a.m >= 0 ? a.m : n * (n - 1) / 2;
        for (int m = std::max(m_lo, 0); m <= m_hi; ++m) {
            auto rec = a.hong ? irreg::hong_search_pair(n, m) : irreg::bell_max_search(n, m);
            if (rec)
                records.push_back(std::move(*rec));
        }
    }
    const std::string_view kind = a.hong ? "hong-min" : "bell-max";
    with_output(a.out, [&](std::ostream& os) {
        if (a.format == "json")
            irreg::write_search_json(os, kind, records, precision);
        else
            irreg::write_search_csv(os, kind, records, precision);
    });
    if (a.hong) {
        std::size_t gap_one = 0;
        for (const auto& r : records)
            gap_one += r.all_gaps_one();
        std::cerr << "records " << records.size() << ", minimizers all with degree gap 1: " << gap_one << '\n';
    }
    return kExitOk;
}

int run_gen(const std::string& family, int size)
{
    irreg::Graph g = [&] {
        if (family == "complete")
            return irreg::complete(size);
        if (family == "cycle")
            return irreg::cycle(size);
        if (family == "path")
            return irreg::path(size);
        if (family == "star")
            return irreg::star(size);
        if (family == "prism")
            return irreg::prism(size);
        if (family == "subdivided-prism")
            return irreg::subdivided_prism(size);
        throw UsageError("unknown family '" + family + "'");
    }();
    std::cout << irreg::to_graph6(g) << '\n';
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Spectral irregularity rho - 2m/n: bounds, exhaustive verification and extremal search"};
    app.require_subcommand(1);

    ComputeArgs compute;
    auto* c = app.add_subcommand("compute", "Irregularity and every bound for graph6 input");
    c->add_option("inputs", compute.files, "graph6 files, one graph per line ('-' for stdin)");
    c->add_option("--graph6", compute.inline_graphs, "Inline graph6 string (repeatable)");
    c->add_option("--format", compute.format)->check(CLI::IsMember({"csv", "json"}));
    c->add_option("--precision", compute.precision, "6 significant digits or full")->check(CLI::IsMember({"6", "full"}));
    c->add_option("--out", compute.out, "Output file (default stdout)");
    c->add_flag("--strict", compute.strict, "Abort on the first malformed line");

    VerifyArgs verify;
    auto* v = app.add_subcommand("verify", "Check every inequality on all graphs up to --n-max vertices");
    v->add_option("--n-max", verify.n_max)->required();
    v->add_option("--n-min", verify.n_min);
    v->add_option("--only", verify.only, "Comma-separated check sets or names");
    v->add_flag("--all-graphs", verify.all_graphs, "Include disconnected graphs");
    v->add_option("--tol", verify.tol);
    v->add_option("--jobs", verify.jobs)->check(CLI::PositiveNumber);
    v->add_option("--out", verify.out, "Violations file (default violations.<format>)");
    v->add_option("--format", verify.format)->check(CLI::IsMember({"csv", "json"}));
    v->add_flag("--self-test", verify.self_test, "Add a deliberately false check");

    SearchArgs search;
    auto* s = app.add_subcommand("search", "Extremal irregularity over connected graphs");
    s->add_flag("--hong", search.hong, "Minimum over non-regular graphs");
    s->add_flag("--bell-max", search.bell, "Maximum over all graphs");
    s->add_option("--n", search.n_range, "N or A..B")->required();
    s->add_option("--m", search.m, "Single edge count (default: all)");
    s->add_option("--format", search.format)->check(CLI::IsMember({"csv", "json"}));
    s->add_option("--precision", search.precision)->check(CLI::IsMember({"6", "full"}));
    s->add_option("--out", search.out);

    std::string family;
    int size = 0;
    auto* g = app.add_subcommand("gen", "Print a named graph as graph6");
    g->add_option("family", family, "complete|cycle|path|star|prism|subdivided-prism")->required();
    g->add_option("size", size)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*c)
            return run_compute(compute);
        if (*v)
            return run_verify(verify);
        if (*s)
            return run_search(search);
        return run_gen(family, size);
    } catch (const irreg::ConvergenceError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitConvergence;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const irreg::CapExceeded& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const irreg::GraphError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}
