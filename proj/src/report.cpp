#include "linf/report.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace linf {

namespace {

constexpr const char* kColumns = "theorem,n,k,s,t,host,mode,formula,oracle,match,witness_g6,millis";

std::string csv_field(const std::string& value) {
    if (value.find_first_of(",\"\n") == std::string::npos) return value;
    std::string out = "\"";
    for (char c : value) {
        if (c == '"') out += "\"\"";
        else out.push_back(c);
    }
    out.push_back('"');
    return out;
}

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string cur;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        char c = line[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    cur.push_back('"');
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                cur.push_back(c);
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            fields.push_back(std::move(cur));
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    fields.push_back(std::move(cur));
    return fields;
}

}  // namespace

bool VerificationReport::pass() const {
    for (const auto& row : rows) {
        if (!row.match) return false;
    }
    return true;
}

void write_report_csv(std::ostream& os, const VerificationReport& report) {
    os << "# linf " << report.tool_version << "\n";
    os << "# mode=" << report.mode << "\n";
    os << "# ranges=" << report.ranges << "\n";
    os << kColumns << "\n";
    for (const auto& r : report.rows) {
        os << csv_field(r.theorem) << ',' << r.n << ',' << r.k << ',' << r.s << ',' << r.t << ','
           << host_name(r.host) << ',' << mode_name(r.mode) << ',' << r.formula.to_string() << ','
           << r.oracle.to_string() << ',' << (r.match ? "true" : "false") << ','
           << csv_field(r.witness_g6) << ',' << r.millis << "\n";
    }
}

VerificationReport read_report_csv(std::istream& is) {
    VerificationReport report;
    report.tool_version.clear();
    std::string line;
    bool saw_columns = false;
    while (std::getline(is, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (line[0] == '#') {
            std::string body = line.substr(1);
            std::size_t start = body.find_first_not_of(' ');
            if (start == std::string::npos) continue;
            body = body.substr(start);
            if (body.rfind("linf ", 0) == 0) report.tool_version = body.substr(5);
            else if (body.rfind("mode=", 0) == 0) report.mode = body.substr(5);
            else if (body.rfind("ranges=", 0) == 0) report.ranges = body.substr(7);
            continue;
        }
        if (!saw_columns) {
            if (line != kColumns) {
                throw std::invalid_argument("report CSV: unexpected header row: " + line);
            }
            saw_columns = true;
            continue;
        }
        auto fields = split_csv_line(line);
        if (fields.size() != 12) {
            throw std::invalid_argument("report CSV: expected 12 fields, got " +
                                        std::to_string(fields.size()));
        }
        ExtremalRecord rec;
        rec.theorem = fields[0];
        rec.n = std::stoi(fields[1]);
        rec.k = std::stoi(fields[2]);
        rec.s = std::stoi(fields[3]);
        rec.t = std::stoi(fields[4]);
        auto host = host_from_name(fields[5]);
        auto mode = mode_from_name(fields[6]);
        if (!host || !mode) throw std::invalid_argument("report CSV: bad host or mode field");
        rec.host = *host;
        rec.mode = *mode;
        rec.formula = Count::from_string(fields[7]);
        rec.oracle = Count::from_string(fields[8]);
        if (fields[9] != "true" && fields[9] != "false") {
            throw std::invalid_argument("report CSV: match must be true or false");
        }
        rec.match = fields[9] == "true";
        rec.witness_g6 = fields[10];
        rec.millis = std::stoll(fields[11]);
        report.rows.push_back(std::move(rec));
    }
    if (!saw_columns) throw std::invalid_argument("report CSV: missing header row");
    return report;
}

}  // namespace linf
