#pragma once

#include <string>
#include <vector>

namespace rigidity {

// Deterministic static line chart: fixed 800x500 viewport, no external
// assets. '#' comment lines in the CSV are skipped. Throws on missing
// columns or an empty table.
std::string render_line_chart(const std::string& csv_text,
                              const std::string& x_column,
                              const std::vector<std::string>& y_columns);

}  // namespace rigidity
