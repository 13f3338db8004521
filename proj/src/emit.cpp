#include "zetascope/emit.hpp"

#include <charconv>
#include <cstdio>

#include "zetascope/errors.hpp"

namespace zetascope {

std::string fmt_sig(double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%#.12g", v);
    std::string s(buf);
    if (!s.empty() && s.back() == '.') s.pop_back();  // "%#g" of an exact integer
    return s;
}

std::string fmt_int(long long v) { return std::to_string(v); }

std::string emit_csv(const std::vector<std::string>& header,
                     const std::vector<std::vector<std::string>>& rows) {
    auto join = [](const std::vector<std::string>& cells, std::string& out) {
        for (size_t i = 0; i < cells.size(); ++i) {
            if (i) out += ',';
            out += cells[i];
        }
        out += '\n';
    };
    std::string out;
    join(header, out);
    for (const auto& row : rows) {
        if (row.size() != header.size())
            throw domain_error("emit_csv: row arity does not match header");
        join(row, out);
    }
    return out;
}

namespace {

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> out;
    size_t start = 0;
    for (;;) {
        const size_t comma = line.find(',', start);
        if (comma == std::string::npos) {
            out.push_back(line.substr(start));
            return out;
        }
        out.push_back(line.substr(start, comma - start));
        start = comma + 1;
    }
}

}  // namespace

CsvTable parse_csv(const std::string& bytes) {
    std::vector<std::string> lines;
    size_t start = 0;
    while (start <= bytes.size()) {
        const size_t nl = bytes.find('\n', start);
        if (nl == std::string::npos) {
            if (start < bytes.size()) lines.push_back(bytes.substr(start));
            break;
        }
        std::string line = bytes.substr(start, nl - start);
        if (!line.empty() && line.back() == '\r') line.pop_back();
        lines.push_back(std::move(line));
        start = nl + 1;
    }
    if (lines.empty()) throw parse_error("parse_csv: empty input");

    CsvTable table;
    table.header = split_fields(lines[0]);
    for (size_t ln = 1; ln < lines.size(); ++ln) {
        if (lines[ln].empty())
            throw parse_error("parse_csv: line " + std::to_string(ln + 1) + " is empty");
        const std::vector<std::string> cells = split_fields(lines[ln]);
        if (cells.size() != table.header.size())
            throw parse_error("parse_csv: line " + std::to_string(ln + 1) +
                              " has wrong field count");
        std::vector<double> row;
        row.reserve(cells.size());
        for (const std::string& c : cells) {
            double v = 0.0;
            const char* first = c.data();
            const char* last = c.data() + c.size();
            auto [ptr, ec] = std::from_chars(first, last, v);
            if (ec != std::errc{} || ptr != last)
                throw parse_error("parse_csv: line " + std::to_string(ln + 1) +
                                  ": '" + c + "' is not a number");
            row.push_back(v);
        }
        table.rows.push_back(std::move(row));
    }
    return table;
}

namespace {

std::string fmt2(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

}  // namespace

std::string emit_svg(const GridField& field, const std::vector<Polyline>& curves) {
    const double w = 640.0, h = 480.0, margin = 50.0;
    auto px = [&](double x) {
        return margin + (x - field.x_min) / (field.x_max - field.x_min) * (w - 2 * margin);
    };
    auto py = [&](double y) {
        return h - margin - (y - field.y_min) / (field.y_max - field.y_min) * (h - 2 * margin);
    };

    std::string out;
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" height=\"480\" "
           "viewBox=\"0 0 640 480\">\n";
    out += "<rect width=\"640\" height=\"480\" fill=\"white\"/>\n";
    out += "<rect x=\"50\" y=\"50\" width=\"540\" height=\"380\" fill=\"none\" "
           "stroke=\"black\"/>\n";
    if (field.x_min <= 0.5 && 0.5 <= field.x_max) {
        const std::string x = fmt2(px(0.5));
        out += "<line x1=\"" + x + "\" y1=\"50\" x2=\"" + x +
               "\" y2=\"430\" stroke=\"#999999\"/>\n";
    }
    for (const Polyline& c : curves) {
        if (c.points.size() < 2) continue;
        out += "<polyline fill=\"none\" stroke=\"black\"";
        if (c.kind == Polyline::Kind::im_zero) out += " stroke-dasharray=\"2,3\"";
        out += " points=\"";
        for (size_t i = 0; i < c.points.size(); ++i) {
            if (i) out += ' ';
            out += fmt2(px(c.points[i].first)) + "," + fmt2(py(c.points[i].second));
        }
        out += "\"/>\n";
    }
    out += "</svg>\n";
    return out;
}

std::string json_number(double v) { return fmt_sig(v); }

std::string json_int(long long v) { return fmt_int(v); }

std::string json_string(const std::string& s) {
    std::string out = "\"";
    for (char ch : s) {
        switch (ch) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            case '\r': out += "\\r"; break;
            default:
                if (static_cast<unsigned char>(ch) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof buf, "\\u%04x", ch);
                    out += buf;
                } else {
                    out += ch;
                }
        }
    }
    out += '"';
    return out;
}

std::string json_object(const std::vector<std::pair<std::string, std::string>>& fields) {
    std::string out = "{";
    for (size_t i = 0; i < fields.size(); ++i) {
        if (i) out += ',';
        out += json_string(fields[i].first) + ":" + fields[i].second;
    }
    out += '}';
    return out;
}

std::string json_array(const std::vector<std::string>& items) {
    std::string out = "[";
    for (size_t i = 0; i < items.size(); ++i) {
        if (i) out += ',';
        out += items[i];
    }
    out += ']';
    return out;
}

}  // namespace zetascope
