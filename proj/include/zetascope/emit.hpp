#pragma once

#include <string>
#include <utility>
#include <vector>

#include "zetascope/grid.hpp"

namespace zetascope {

// 12 significant digits, locale-independent, trailing zeros kept.
std::string fmt_sig(double v);
std::string fmt_int(long long v);

// CSV: header first, LF endings, '.' decimal.  Throws domain_error if a row's
// arity differs from the header's.
std::string emit_csv(const std::vector<std::string>& header,
                     const std::vector<std::vector<std::string>>& rows);

struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<double>> rows;
};

// Inverse of emit_csv for numeric tables; throws parse_error on malformed
// input or ragged rows.
CsvTable parse_csv(const std::string& bytes);

// Static SVG: axis frame, re_zero polylines solid, im_zero dashed, and the
// critical line re = 1/2 as a reference rule when it lies in the x-range.
std::string emit_svg(const GridField& field, const std::vector<Polyline>& curves);

// Minimal insertion-ordered JSON composition; values are pre-rendered.
std::string json_number(double v);
std::string json_int(long long v);
std::string json_string(const std::string& s);
std::string json_object(const std::vector<std::pair<std::string, std::string>>& fields);
std::string json_array(const std::vector<std::string>& items);

}  // namespace zetascope
