#include "qcomb/report.hpp"

#include <cctype>
#include <cstdio>

namespace qcomb::report {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

namespace {

bool needs_quotes(const std::string& s) {
    for (char c : s)
        if (c == ',' || c == '"' || c == '\n' || c == '\r') return true;
    return false;
}

void csv_field(std::ostream& os, const std::string& s) {
    if (!needs_quotes(s)) {
        os << s;
        return;
    }
    os << '"';
    for (char c : s) {
        if (c == '"') os << '"';
        os << c;
    }
    os << '"';
}

void csv_row(std::ostream& os, const std::vector<std::string>& fields) {
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) os << ',';
        csv_field(os, fields[i]);
    }
    os << '\n';
}

// A field is emitted as a bare JSON number iff it already is one.
bool is_json_number(const std::string& s) {
    std::size_t i = 0;
    const std::size_t n = s.size();
    if (i < n && s[i] == '-') ++i;
    if (i == n || !std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    if (s[i] == '0' && i + 1 < n && std::isdigit(static_cast<unsigned char>(s[i + 1])))
        return false;
    while (i < n && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i < n && s[i] == '.') {
        ++i;
        if (i == n || !std::isdigit(static_cast<unsigned char>(s[i]))) return false;
        while (i < n && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    }
    if (i < n && (s[i] == 'e' || s[i] == 'E')) {
        ++i;
        if (i < n && (s[i] == '+' || s[i] == '-')) ++i;
        if (i == n || !std::isdigit(static_cast<unsigned char>(s[i]))) return false;
        while (i < n && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    }
    return i == n;
}

void json_string(std::ostream& os, const std::string& s) {
    os << '"';
    for (char c : s) {
        switch (c) {
            case '"': os << "\\\""; break;
            case '\\': os << "\\\\"; break;
            case '\n': os << "\\n"; break;
            case '\r': os << "\\r"; break;
            case '\t': os << "\\t"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof buf, "\\u%04x", c);
                    os << buf;
                } else {
                    os << c;
                }
        }
    }
    os << '"';
}

void json_value(std::ostream& os, const std::string& s) {
    if (is_json_number(s))
        os << s;
    else
        json_string(os, s);
}

std::string params_text(const OracleReport& r) {
    std::string s;
    for (std::size_t i = 0; i < r.params.size(); ++i) {
        if (i) s += ' ';
        s += r.params[i].first;
        s += '=';
        s += r.params[i].second;
    }
    return s;
}

}  // namespace

void write_csv(std::ostream& os, const Table& t) {
    csv_row(os, t.columns);
    for (const auto& r : t.rows) csv_row(os, r);
}

void write_csv(std::ostream& os, const std::vector<OracleReport>& reports) {
    csv_row(os, {"quantity", "params", "exact", "oracle", "tolerance", "pass"});
    for (const auto& r : reports)
        csv_row(os, {r.quantity, params_text(r), r.exact, r.oracle, r.tolerance,
                     r.pass ? "true" : "false"});
}

void write_json_lines(std::ostream& os, const Table& t) {
    for (const auto& r : t.rows) {
        os << '{';
        for (std::size_t i = 0; i < t.columns.size() && i < r.size(); ++i) {
            if (i) os << ',';
            json_string(os, t.columns[i]);
            os << ':';
            json_value(os, r[i]);
        }
        os << "}\n";
    }
}

void write_json_lines(std::ostream& os, const std::vector<OracleReport>& reports) {
    for (const auto& r : reports) {
        os << "{\"quantity\":";
        json_string(os, r.quantity);
        os << ",\"params\":{";
        for (std::size_t i = 0; i < r.params.size(); ++i) {
            if (i) os << ',';
            json_string(os, r.params[i].first);
            os << ':';
            json_value(os, r.params[i].second);
        }
        os << "},\"exact\":";
        json_string(os, r.exact);
        os << ",\"oracle\":";
        json_string(os, r.oracle);
        os << ",\"tolerance\":";
        json_string(os, r.tolerance);
        os << ",\"pass\":" << (r.pass ? "true" : "false") << "}\n";
    }
}

bool all_pass(const std::vector<OracleReport>& reports) {
    for (const auto& r : reports)
        if (!r.pass) return false;
    return true;
}

}  // namespace qcomb::report
