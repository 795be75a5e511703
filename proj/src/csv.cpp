#include "stmdf/csv.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <string_view>

namespace stmdf {

std::string format_number(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.10g", v);
    return buf;
}

std::string write_csv(const CsvTable& table) {
    std::string out;
    auto append_row = [&out](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i > 0) out.push_back(',');
            out += cells[i];
        }
        out.push_back('\n');
    };
    append_row(table.header);
    for (const auto& row : table.rows) {
        if (row.size() != table.header.size()) {
            throw InvalidParameter("invalid-table: row with " + std::to_string(row.size()) +
                                   " cells under a " + std::to_string(table.header.size()) +
                                   "-column header");
        }
        append_row(row);
    }
    return out;
}

void write_file(const std::string& path, std::string_view bytes) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw IoError("cannot open for writing: " + path);
    f.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    if (!f) throw IoError("write failed: " + path);
}

std::string read_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw IoError("file-not-found: " + path);
    std::string bytes((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
    if (f.bad()) throw IoError("read failed: " + path);
    return bytes;
}

} // namespace stmdf
