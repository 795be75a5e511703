#pragma once

#include <string>
#include <vector>

#include "stmdf/errors.hpp"

namespace stmdf {

/// Tabular payload for sweep and metric outputs. Cells are pre-rendered
/// strings; use format_number() for numeric cells.
struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

/// Locale-independent rendering with 10 significant digits; infinities come
/// out as "inf"/"-inf".
std::string format_number(double v);

/// Comma-separated, one header line then one line per row, "\n" endings.
/// A row whose length differs from the header's is rejected.
std::string write_csv(const CsvTable& table);

void write_file(const std::string& path, std::string_view bytes);
std::string read_file(const std::string& path);

} // namespace stmdf
