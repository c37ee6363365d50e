#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace evtail {

struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    // Index of a named column; throws DataError naming the column.
    std::size_t column(const std::string& name) const;
};

CsvTable read_csv(const std::filesystem::path& path);

// Parses a numeric cell, reporting row and column on failure.
double numeric_cell(const CsvTable& table, std::size_t row, std::size_t col);

// Writes content to path atomically (temp file + rename).
void write_file_atomic(const std::filesystem::path& path, const std::string& content);

}  // namespace evtail
