#ifndef DZK_CSV_HPP
#define DZK_CSV_HPP

#include <filesystem>
#include <string>
#include <vector>

namespace dzk::csv {

// Shortest exact decimal ('.' separator) so identical doubles give identical
// bytes; CSVs are part of the determinism contract.
std::string format_double(double v);

struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

// LF line endings, header row mandatory.
void write(const std::filesystem::path& path, const Table& t);

Table read(const std::filesystem::path& path);

} // namespace dzk::csv

#endif
