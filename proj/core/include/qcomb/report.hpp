#pragma once

#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace qcomb::report {

// One verified comparison: an exactly-or-numerically computed value against
// an independent oracle, with the tolerance that defines success.
struct OracleReport {
    std::string quantity;
    std::vector<std::pair<std::string, std::string>> params;  // ordered
    std::string exact;
    std::string oracle;
    std::string tolerance;
    bool pass;
};

// Doubles print with "%.12g" everywhere so output is deterministic.
std::string format_double(double v);

// Generic tabular payload for the data subcommands.
struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
};

// CSV: header row, RFC-style quoting (quote when a field holds comma,
// quote, or newline; embedded quotes double).
void write_csv(std::ostream& os, const Table& t);
void write_csv(std::ostream& os, const std::vector<OracleReport>& reports);

// JSON lines: one object per row. Values that parse as JSON numbers are
// emitted bare; everything else (rationals in particular) as strings.
void write_json_lines(std::ostream& os, const Table& t);
void write_json_lines(std::ostream& os, const std::vector<OracleReport>& reports);

bool all_pass(const std::vector<OracleReport>& reports);

}  // namespace qcomb::report
