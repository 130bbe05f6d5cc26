#include "poncelet/numfmt.hpp"

#include <charconv>
#include <cstdlib>
#include <stdexcept>

namespace poncelet {

std::string format_number(double v) {
    if (v == 0.0) v = 0.0; // flush negative zero
    char buf[48];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v,
                                   std::chars_format::general, 12);
    return std::string(buf, res.ptr);
}

std::string csv_row(const std::vector<std::string>& fields) {
    std::string out;
    for (size_t i = 0; i < fields.size(); ++i) {
        if (i) out += ',';
        out += fields[i];
    }
    out += '\n';
    return out;
}

std::vector<std::string> csv_split(const std::string& row) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : row) {
        if (ch == '\n' || ch == '\r') break;
        if (ch == ',') {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    out.push_back(cur);
    return out;
}

double parse_number(const std::string& s) {
    double v = 0.0;
    const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc{}) throw std::invalid_argument("bad number: " + s);
    return v;
}

} // namespace poncelet
