#include "irreg/report.hpp"

#include "irreg/graph6.hpp"

#include <cstdio>
#include <ostream>

namespace irreg {

namespace {

using nlohmann::ordered_json;

std::string join(const std::vector<std::string>& cells, char sep)
{
    std::string line;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i)
            line.push_back(sep);
        line += cells[i];
    }
    return line;
}

ordered_json decimal_json(const std::string& cell)
{
    return std::stod(cell);
}

}  // namespace

std::string format_decimal(double value, Precision precision)
{
    char buf[64];
    if (precision == Precision::Full) {
        std::snprintf(buf, sizeof buf, "%.17g", value);
        return buf;
    }
    if (value == 0.0)
        return "0.000000";
    std::snprintf(buf, sizeof buf, "%#.6g", value);
    return buf;
}

const std::vector<std::string>& report_columns()
{
    static const std::vector<std::string> columns{
        "graph6",     "n",         "m",          "max_degree", "min_degree",    "class",
        "connected",  "avg_degree", "variance",  "rho",        "q1",            "epsilon",
        "nikiforov",  "main",      "cg_degree",  "cgs",        "sub_high",      "sub_low",
        "hofmeister", "yu_lu_tian", "hong_shu_fang", "low_sub_rho_ub", "l_high_chain", "var_lb",
        "var_ub"};
    return columns;
}

ReportRow make_row(const Graph& g, const BoundReport& r)
{
    ReportRow row;
    row.graph6 = to_graph6(g);
    row.n = r.stats.n;
    row.m = r.stats.m;
    row.max_degree = r.stats.max_degree;
    row.min_degree = r.stats.min_degree;
    row.regularity = std::string(to_string(r.regularity));
    row.connected = r.connected;
    row.avg_degree = r.stats.avg_degree_value();
    row.variance = r.stats.variance_value();
    row.rho = r.spectral.rho;
    row.q1 = r.spectral.q1.value_or(0.0);
    row.epsilon = r.epsilon;
    row.bounds = {
        {"nikiforov", r.nikiforov},
        {"main", r.main},
        {"cg_degree", r.cg_degree},
        {"cgs", r.cgs},
        {"sub_high", r.sub_high},
        {"sub_low", r.sub_low},
        {"hofmeister", BoundValue::applicable(r.hofmeister_lb)},
        {"yu_lu_tian", r.ylt_lb},
        {"hong_shu_fang", r.hsf_ub},
        {"low_sub_rho_ub", r.low_sub_rho_ub},
        {"l_high_chain", r.l_high_chain},
        {"var_lb", BoundValue::applicable(r.var_lb)},
        {"var_ub", BoundValue::applicable(r.var_ub)},
    };
    return row;
}

std::vector<std::string> row_cells(const ReportRow& row, Precision precision)
{
    auto dec = [&](double v) { return format_decimal(v, precision); };
    std::vector<std::string> cells{row.graph6,
                                   std::to_string(row.n),
                                   std::to_string(row.m),
                                   std::to_string(row.max_degree),
                                   std::to_string(row.min_degree),
                                   row.regularity,
                                   row.connected ? "true" : "false",
                                   dec(row.avg_degree),
                                   dec(row.variance),
                                   dec(row.rho),
                                   dec(row.q1),
                                   dec(row.epsilon)};
    for (const auto& [name, bound] : row.bounds)
        cells.push_back(bound.present() ? dec(bound.value) : "NA");
    return cells;
}

ordered_json row_json(const ReportRow& row, Precision precision)
{
    const auto cells = row_cells(row, precision);
    const auto& columns = report_columns();
    ordered_json obj = ordered_json::object();
    obj["graph6"] = row.graph6;
    obj["n"] = row.n;
    obj["m"] = row.m;
    obj["max_degree"] = row.max_degree;
    obj["min_degree"] = row.min_degree;
    obj["class"] = row.regularity;
    obj["connected"] = row.connected;
    for (std::size_t i = 7; i < columns.size(); ++i)
        obj[columns[i]] = cells[i] == "NA" ? ordered_json(nullptr) : decimal_json(cells[i]);

    ordered_json reasons = ordered_json::object();
    for (const auto& [name, bound] : row.bounds) {
        if (bound.status == BoundValue::Status::Inapplicable)
            reasons[name] = bound.reason;
        else if (bound.status == BoundValue::Status::Degenerate)
            reasons[name] = "degenerate: " + bound.reason;
    }
    obj["reasons"] = reasons;
    return obj;
}

void write_rows_csv(std::ostream& out, std::span<const ReportRow> rows, Precision precision)
{
    out << join(report_columns(), ',') << '\n';
    for (const auto& row : rows)
        out << join(row_cells(row, precision), ',') << '\n';
}

void write_rows_json(std::ostream& out, std::span<const ReportRow> rows, Precision precision)
{
    ordered_json arr = ordered_json::array();
    for (const auto& row : rows)
        arr.push_back(row_json(row, precision));
    out << arr.dump(2) << '\n';
}

void write_violations_csv(std::ostream& out, std::span<const ViolationReport> violations)
{
    out << "check,graph6,canonical,n,m,lhs,rhs,margin,tolerance\n";
    for (const auto& v : violations) {
        out << join({v.check_name, v.graph6, v.canonical, std::to_string(v.n), std::to_string(v.m),
                     format_decimal(v.lhs, Precision::Full), format_decimal(v.rhs, Precision::Full),
                     format_decimal(v.margin, Precision::Full), format_decimal(v.tolerance, Precision::Full)},
                    ',')
            << '\n';
    }
}

void write_violations_json(std::ostream& out, std::span<const ViolationReport> violations)
{
    ordered_json arr = ordered_json::array();
    for (const auto& v : violations) {
        arr.push_back({{"check", v.check_name},
                       {"graph6", v.graph6},
                       {"canonical", v.canonical},
                       {"n", v.n},
                       {"m", v.m},
                       {"lhs", v.lhs},
                       {"rhs", v.rhs},
                       {"margin", v.margin},
                       {"tolerance", v.tolerance}});
    }
    out << arr.dump(2) << '\n';
}

namespace {

std::vector<std::string> search_cells(std::string_view kind, const SearchRecord& r, Precision precision)
{
    std::vector<std::string> graphs, gaps;
    for (const auto& t : r.ties) {
        graphs.push_back(t.graph6);
        gaps.push_back(std::to_string(t.degree_gap));
    }
    return {std::string(kind),
            std::to_string(r.n),
            std::to_string(r.m),
            r.argmin_graph6,
            format_decimal(r.epsilon_min, precision),
            std::to_string(r.degree_gap),
            std::to_string(r.candidates),
            std::to_string(r.ties.size()),
            join(graphs, ';'),
            join(gaps, ';'),
            r.all_gaps_one() ? "true" : "false"};
}

}  // namespace

void write_search_csv(std::ostream& out, std::string_view kind, std::span<const SearchRecord> records,
                      Precision precision)
{
    out << "kind,n,m,graph6,epsilon,degree_gap,candidates,ties,tie_graph6,tie_degree_gaps,all_gaps_one\n";
    for (const auto& r : records)
        out << join(search_cells(kind, r, precision), ',') << '\n';
}

void write_search_json(std::ostream& out, std::string_view kind, std::span<const SearchRecord> records,
                       Precision precision)
{
    ordered_json arr = ordered_json::array();
    for (const auto& r : records) {
        ordered_json ties = ordered_json::array();
        for (const auto& t : r.ties)
            ties.push_back({{"graph6", t.graph6},
                            {"epsilon", decimal_json(format_decimal(t.epsilon, precision))},
                            {"degree_gap", t.degree_gap}});
        arr.push_back({{"kind", kind},
                       {"n", r.n},
                       {"m", r.m},
                       {"graph6", r.argmin_graph6},
                       {"epsilon", decimal_json(format_decimal(r.epsilon_min, precision))},
                       {"degree_gap", r.degree_gap},
                       {"candidates", r.candidates},
                       {"ties", ties},
                       {"all_gaps_one", r.all_gaps_one()}});
    }
    out << arr.dump(2) << '\n';
}

}  // namespace irreg
