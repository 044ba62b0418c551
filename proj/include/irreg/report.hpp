#pragma once

#include "irreg/bounds.hpp"
#include "irreg/harness.hpp"

#include <json.hpp>

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace irreg {

enum class Precision { Six, Full };

/// Six significant digits (round-half-even on the exact binary value),
/// trailing zeros kept; zero prints as 0.000000. Full uses 17 digits.
std::string format_decimal(double value, Precision precision);

/// One output row of `irreg compute`.
struct ReportRow {
    std::string graph6;
    int n = 0;
    int m = 0;
    int max_degree = 0;
    int min_degree = 0;
    std::string regularity;
    bool connected = false;
    double avg_degree = 0.0;
    double variance = 0.0;
    double rho = 0.0;
    double q1 = 0.0;
    double epsilon = 0.0;
    std::vector<std::pair<std::string, BoundValue>> bounds;  // fixed order, see report_columns()
};

ReportRow make_row(const Graph& g, const BoundReport& report);

/// Column names in output order.
const std::vector<std::string>& report_columns();

/// Cell strings in report_columns() order; inapplicable bounds print "NA".
std::vector<std::string> row_cells(const ReportRow& row, Precision precision);

/// Object keyed by column. Decimal fields are the same rounded values as the
/// CSV cells, inapplicable bounds are null, and "reasons" explains every
/// bound that is inapplicable or degenerate.
nlohmann::ordered_json row_json(const ReportRow& row, Precision precision);

void write_rows_csv(std::ostream& out, std::span<const ReportRow> rows, Precision precision);
void write_rows_json(std::ostream& out, std::span<const ReportRow> rows, Precision precision);

// Violations are always written at full precision.
void write_violations_csv(std::ostream& out, std::span<const ViolationReport> violations);
void write_violations_json(std::ostream& out, std::span<const ViolationReport> violations);

/// `kind` is "hong-min" or "bell-max".
void write_search_csv(std::ostream& out, std::string_view kind, std::span<const SearchRecord> records,
                      Precision precision);
void write_search_json(std::ostream& out, std::string_view kind, std::span<const SearchRecord> records,
                       Precision precision);

}  // namespace irreg
