#pragma once

#include <string>
#include <vector>

namespace poncelet {

// 12 significant digits, decimal or lowercase-e form, locale independent.
std::string format_number(double v);

std::string csv_row(const std::vector<std::string>& fields);
std::vector<std::string> csv_split(const std::string& row);
double parse_number(const std::string& s);

} // namespace poncelet
